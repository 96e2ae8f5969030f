#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gckit/boolalg.hpp"
#include "gckit/common.hpp"
#include "gckit/finring.hpp"
#include "gckit/finsem.hpp"
#include "gckit/groupoid.hpp"
#include "gckit/sheaf.hpp"
#include "gckit/skew.hpp"

#include "json.hpp"

namespace gckit {

// A JSON pack of named objects cross-referencing by id.  Parsing happens at
// load; objects are constructed (and validated) lazily so that suites can
// report per-object failures.
class InstanceRegistry {
 public:
  static InstanceRegistry load_file(const std::string& path);
  static InstanceRegistry load_json(const nlohmann::json& doc);

  std::vector<std::string> ids() const;  // sorted
  bool contains(const std::string& id) const;
  std::string kind(const std::string& id) const;

  std::shared_ptr<const InverseSemigroup> semigroup(const std::string& id);
  RingPtr ring(const std::string& id);
  GroupoidPtr groupoid(const std::string& id);
  SheafPtr sheaf(const std::string& id);
  ActionPtr action(const std::string& id);
  GenBooleanAlgebra gba(const std::string& id);

  long long limit = default_size_limit;

 private:
  const nlohmann::json& raw(const std::string& id) const;

  std::map<std::string, nlohmann::json> raw_;
  std::map<std::string, std::shared_ptr<const InverseSemigroup>> semigroups_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, GroupoidPtr> groupoids_;
  std::map<std::string, SheafPtr> sheaves_;
  std::map<std::string, ActionPtr> actions_;
  std::vector<std::string> building_;  // cycle guard
};

}  // namespace gckit
