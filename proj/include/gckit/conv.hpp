#pragma once

#include <string>
#include <vector>

#include "gckit/common.hpp"
#include "gckit/finring.hpp"
#include "gckit/sheaf.hpp"

namespace gckit {

// Convolution algebra of a groupoid with coefficients in a sheaf of rings.
// An element assigns to each arrow g a value in the stalk at r(g); the
// product is f*g(c) = sum over factorizations ab = c of f(a) alpha_a(g(b)).
class ConvAlgebra {
 public:
  using Elem = std::vector<int>;  // per arrow, index into stalk(r(arrow))

  explicit ConvAlgebra(SheafPtr sheaf, long long limit = default_size_limit);

  const RingSheaf& sheaf() const { return *sheaf_; }
  const FiniteGroupoid& base() const { return *sheaf_->base; }
  long long carrier_size() const { return carrier_size_; }
  long long limit() const { return limit_; }

  Elem zero() const;
  bool is_zero(const Elem& f) const;
  Elem add(const Elem& f, const Elem& g) const;
  Elem neg(const Elem& f) const;
  Elem convolve(const Elem& f, const Elem& g) const;

  // Characteristic function of a bisection, and a section times it.
  Elem chi(const Bisection& u) const;
  // vals[i] is the stalk element at r(u[i]).
  Elem schi(const Bisection& u, const std::vector<int>& vals) const;

  // chi over all identity arrows; verified two-sided identity on demand.
  Elem identity() const;

  std::vector<int> support(const Elem& f) const;
  bool supported_on(const Elem& f, const Bisection& u) const;

  // { chi_U : U a subset of the unit space }.
  std::vector<Elem> local_units() const;

  bool is_class_function(const Elem& f) const;
  // Enumerated commutant, checked against single-arrow generators.
  std::vector<Elem> center() const;

  // Every element a sum of elements each supported on one member of sub.
  bool spans_by(const std::vector<Bisection>& sub) const;

  // Carrier enumeration (mixed radix over arrows); throws SizeLimit past the
  // construction limit.
  int encode(const Elem& f) const;
  Elem decode(int idx) const;

  // Materialized ring on the enumerated carrier; element k = decode(k).
  FiniteRing as_ring() const;
  RingPtr as_ring_ptr() const;

  std::string format(const Elem& f) const;  // deterministic formal sum

 private:
  void ensure_enumerable() const;

  SheafPtr sheaf_;
  long long limit_;
  long long carrier_size_;
  std::vector<long long> stride_;
  std::vector<std::vector<std::pair<int, int>>> factorizations_;  // per arrow
};

}  // namespace gckit
