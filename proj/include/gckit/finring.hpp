#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gckit/common.hpp"

namespace gckit {

// Finite ring on dense indices; not necessarily commutative or unital.
struct FiniteRing {
  int n = 0;
  std::vector<int> add, mul;  // row-major n*n
  int zero = 0;
  std::optional<int> one;
  std::vector<int> neg;  // derived
  std::vector<std::string> labels;

  int a(int x, int y) const { return add[x * n + y]; }
  int m(int x, int y) const { return mul[x * n + y]; }
  int sub(int x, int y) const { return a(x, neg[y]); }
  bool is_idempotent(int e) const { return m(e, e) == e; }
  bool is_central(int e) const;
  bool commutative() const;

  std::string label(int x) const;

  // Validates the abelian group, associativity, distributivity and the unit
  // (if one is claimed).  Guarded by `limit` on the carrier size.
  static FiniteRing build(int n, std::vector<int> add, std::vector<int> mul,
                          int zero, std::optional<int> one,
                          std::vector<std::string> labels = {},
                          long long limit = default_size_limit);

  static FiniteRing zn(int n, long long limit = default_size_limit);
  static FiniteRing product(const FiniteRing& lhs, const FiniteRing& rhs,
                            long long limit = default_size_limit);
  // dim x dim matrices over Z_p; p <= 3, dim <= 2.
  static FiniteRing matrix_ring(int p, int dim, bool upper_triangular,
                                long long limit = default_size_limit);
  // Mappings X -> R with pointwise operations, X a finite set.
  static FiniteRing function_ring(int xsize, const FiniteRing& r,
                                  long long limit = default_size_limit);
};

using RingPtr = std::shared_ptr<const FiniteRing>;
RingPtr make_ring(FiniteRing r);

std::vector<int> central_idempotents(const FiniteRing& r);

// Smallest subset containing `gens`, closed under add and negation.
std::vector<int> additive_closure(const FiniteRing& r, std::vector<int> gens);

bool is_ideal(const FiniteRing& r, const std::vector<int>& members);

struct RingHom {
  RingPtr src, dst;
  std::vector<int> map;
};

bool is_ring_hom(const RingHom& h);
bool is_isomorphism(const RingHom& h);

struct QuotientRing {
  RingPtr ring;
  RingHom projection;        // parent -> quotient
  std::vector<int> rep;      // quotient index -> lowest-index parent element
};

QuotientRing quotient_ring(RingPtr r, const std::vector<int>& ideal_members);

// R = union of eRe over e in E, and the union is directed.
bool has_local_units(const FiniteRing& r, const std::vector<int>& e_set);

// e R e as a plain subset.
std::vector<int> corner(const FiniteRing& r, int e);

// All ring homomorphisms src -> dst (not required to preserve units), found by
// pruned assignment search.  `limit` caps the result count.
std::vector<std::vector<int>> enumerate_ring_homs(const FiniteRing& src,
                                                  const FiniteRing& dst,
                                                  std::size_t limit = 1 << 20);

}  // namespace gckit
