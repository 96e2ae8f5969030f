#include "gckit/instances.hpp"

#include <algorithm>
#include <fstream>

namespace gckit {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& j) {
  if (!j.is_array()) fail(errc::parse_error, "expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(errc::parse_error, "expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> flat_table(const json& j, const char* what) {
  if (!j.is_array()) fail(errc::parse_error, std::string(what) + " must be a matrix");
  std::vector<int> out;
  for (const auto& row : j)
    for (int v : int_vector(row)) out.push_back(v);
  return out;
}

struct CycleGuard {
  std::vector<std::string>& stack;
  explicit CycleGuard(std::vector<std::string>& s, const std::string& id)
      : stack(s) {
    if (std::find(stack.begin(), stack.end(), id) != stack.end())
      fail(errc::parse_error, "cyclic reference through object '" + id + "'");
    stack.push_back(id);
  }
  ~CycleGuard() { stack.pop_back(); }
};

}  // namespace

InstanceRegistry InstanceRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return load_json(doc);
}

InstanceRegistry InstanceRegistry::load_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("objects") || !doc["objects"].is_object())
    fail(errc::parse_error, "pack must be an object with an 'objects' map");
  InstanceRegistry reg;
  for (auto it = doc["objects"].begin(); it != doc["objects"].end(); ++it) {
    if (!it.value().is_object() || !it.value().contains("kind"))
      fail(errc::parse_error, "object '" + it.key() + "' has no kind");
    reg.raw_[it.key()] = it.value();
  }
  return reg;
}

std::vector<std::string> InstanceRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, j] : raw_) out.push_back(id);
  return out;
}

bool InstanceRegistry::contains(const std::string& id) const {
  return raw_.count(id) > 0;
}

const json& InstanceRegistry::raw(const std::string& id) const {
  auto it = raw_.find(id);
  if (it == raw_.end())
    fail(errc::parse_error, "unknown object id '" + id + "'");
  return it->second;
}

std::string InstanceRegistry::kind(const std::string& id) const {
  return raw(id)["kind"].get<std::string>();
}

std::shared_ptr<const InverseSemigroup> InstanceRegistry::semigroup(
    const std::string& id) {
  if (auto it = semigroups_.find(id); it != semigroups_.end()) return it->second;
  CycleGuard guard(building_, id);
  const json& j = raw(id);
  if (j["kind"] != "inverse_semigroup")
    fail(errc::parse_error, "'" + id + "' is not an inverse semigroup");
  InverseSemigroup s;
  if (j.contains("ctor")) {
    std::string ctor = j["ctor"];
    if (ctor == "cyclic_group") s = cyclic_group(j["n"].get<int>());
    else if (ctor == "chain_semilattice") s = chain_semilattice(j["n"].get<int>());
    else if (ctor == "symmetric_inverse_monoid")
      s = symmetric_inverse_monoid(j["n"].get<int>()).sg;
    else fail(errc::parse_error, "unknown semigroup ctor '" + ctor + "'");
  } else {
    int n = j["n"].get<int>();
    s = InverseSemigroup::build(n, flat_table(j["mul"], "mul"));
  }
  auto ptr = std::make_shared<const InverseSemigroup>(std::move(s));
  semigroups_[id] = ptr;
  return ptr;
}

RingPtr InstanceRegistry::ring(const std::string& id) {
  if (auto it = rings_.find(id); it != rings_.end()) return it->second;
  CycleGuard guard(building_, id);
  const json& j = raw(id);
  if (j["kind"] != "ring") fail(errc::parse_error, "'" + id + "' is not a ring");
  std::string ctor = j.value("ctor", "tables");
  FiniteRing r;
  if (ctor == "zn") {
    r = FiniteRing::zn(j["n"].get<int>(), limit);
  } else if (ctor == "product") {
    auto factors = j["factors"];
    if (!factors.is_array() || factors.size() < 2)
      fail(errc::parse_error, "product needs at least two factors");
    RingPtr acc = ring(factors[0].get<std::string>());
    FiniteRing prod = *acc;
    for (std::size_t i = 1; i < factors.size(); ++i)
      prod = FiniteRing::product(prod, *ring(factors[i].get<std::string>()), limit);
    r = std::move(prod);
  } else if (ctor == "matrix") {
    r = FiniteRing::matrix_ring(j["p"].get<int>(), j["dim"].get<int>(),
                                j.value("upper", false), limit);
  } else if (ctor == "functions") {
    r = FiniteRing::function_ring(j["points"].get<int>(),
                                  *ring(j["ring"].get<std::string>()), limit);
  } else if (ctor == "tables") {
    std::optional<int> one;
    if (j.contains("one")) one = j["one"].get<int>();
    r = FiniteRing::build(j["n"].get<int>(), flat_table(j["add"], "add"),
                          flat_table(j["mul"], "mul"), j.value("zero", 0), one,
                          {}, limit);
  } else {
    fail(errc::parse_error, "unknown ring ctor '" + ctor + "'");
  }
  RingPtr ptr = make_ring(std::move(r));
  rings_[id] = ptr;
  return ptr;
}

GroupoidPtr InstanceRegistry::groupoid(const std::string& id) {
  if (auto it = groupoids_.find(id); it != groupoids_.end()) return it->second;
  CycleGuard guard(building_, id);
  const json& j = raw(id);
  if (j["kind"] != "groupoid")
    fail(errc::parse_error, "'" + id + "' is not a groupoid");
  FiniteGroupoid g;
  std::string ctor = j.value("ctor", "explicit");
  if (ctor == "pair") {
    g = FiniteGroupoid::pair_groupoid(j["points"].get<int>());
  } else if (ctor == "units") {
    g = FiniteGroupoid::units_groupoid(j["points"].get<int>());
  } else if (ctor == "group") {
    if (j.contains("semigroup"))
      g = FiniteGroupoid::group_groupoid(*semigroup(j["semigroup"].get<std::string>()));
    else {
      auto mul = flat_table(j["mul"], "mul");
      int n = j["n"].get<int>();
      g = FiniteGroupoid::group_groupoid(InverseSemigroup::build(n, std::move(mul)));
    }
  } else if (ctor == "explicit") {
    int objects = j["objects"].get<int>();
    std::vector<int> d, r;
    for (const auto& a : j["arrows"]) {
      d.push_back(a["d"].get<int>());
      r.push_back(a["r"].get<int>());
    }
    int n = static_cast<int>(d.size());
    std::vector<int> comp(n * n, -1);
    for (const auto& t : j["comp"]) {
      auto v = int_vector(t);
      if (v.size() != 3) fail(errc::parse_error, "comp entries are triples");
      comp[v[0] * n + v[1]] = v[2];
    }
    g = FiniteGroupoid::build(objects, std::move(d), std::move(r), std::move(comp));
  } else {
    fail(errc::parse_error, "unknown groupoid ctor '" + ctor + "'");
  }
  GroupoidPtr ptr = make_groupoid(std::move(g));
  groupoids_[id] = ptr;
  return ptr;
}

SheafPtr InstanceRegistry::sheaf(const std::string& id) {
  if (auto it = sheaves_.find(id); it != sheaves_.end()) return it->second;
  CycleGuard guard(building_, id);
  const json& j = raw(id);
  if (j["kind"] != "sheaf") fail(errc::parse_error, "'" + id + "' is not a sheaf");
  GroupoidPtr base = groupoid(j["base"].get<std::string>());
  SheafPtr ptr;
  if (j.value("ctor", "") == "constant") {
    ptr = constant_sheaf(base, ring(j["ring"].get<std::string>()));
  } else {
    RingSheaf o;
    o.base = base;
    for (const auto& sid : j["stalks"])
      o.stalk.push_back(ring(sid.get<std::string>()));
    for (const auto& m : j["act"]) o.act.push_back(int_vector(m));
    ptr = validate_ring_sheaf(std::move(o));
  }
  sheaves_[id] = ptr;
  return ptr;
}

ActionPtr InstanceRegistry::action(const std::string& id) {
  if (auto it = actions_.find(id); it != actions_.end()) return it->second;
  CycleGuard guard(building_, id);
  const json& j = raw(id);
  if (j["kind"] != "spectral_action")
    fail(errc::parse_error, "'" + id + "' is not a spectral action");
  SpectralAction act;
  act.S = semigroup(j["S"].get<std::string>());
  act.A = ring(j["A"].get<std::string>());
  for (const auto& d : j["D"]) act.D.push_back(int_vector(d));
  for (const auto& a : j["alpha"]) act.alpha.push_back(int_vector(a));
  if (j.contains("units")) act.unit = int_vector(j["units"]);
  ActionPtr ptr = make_action(std::move(act));
  actions_[id] = ptr;
  return ptr;
}

GenBooleanAlgebra InstanceRegistry::gba(const std::string& id) {
  const json& j = raw(id);
  if (j["kind"] != "gba")
    fail(errc::parse_error, "'" + id + "' is not a Boolean algebra");
  return GenBooleanAlgebra::free_boolean(j["atoms"].get<int>());
}

}  // namespace gckit
