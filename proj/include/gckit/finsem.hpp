#pragma once

#include <string>
#include <vector>

#include "gckit/common.hpp"

namespace gckit {

// Finite inverse semigroup on dense indices 0..n-1.  Everything is table
// driven; star and the idempotent list are derived and verified at build.
struct InverseSemigroup {
  int n = 0;
  std::vector<int> mul;          // row-major n*n
  std::vector<int> star;         // unique pseudo-inverse
  std::vector<int> idempotents;  // sorted
  std::vector<std::string> labels;

  int at(int s, int t) const { return mul[s * n + t]; }
  bool idempotent(int s) const { return at(s, s) == s; }
  bool is_group() const { return idempotents.size() == 1; }

  // Natural partial order: s <= t iff s s* t = s.  The equivalent criterion
  // t s* s = s is evaluated too and the two are checked to agree.
  bool leq(int s, int t) const;

  std::string label(int s) const;

  // Validates associativity and existence/uniqueness of pseudo-inverses,
  // then derives star and E(S).  Idempotent commutativity is re-checked even
  // though it follows from uniqueness.
  static InverseSemigroup build(int n, std::vector<int> mul,
                                std::vector<std::string> labels = {});
};

// phi(st) = phi(s)phi(t) for all s,t, cross-validated against the
// order-preserving + idempotent + (s*s = tt*) criterion.
bool is_homomorphism(const std::vector<int>& map, const InverseSemigroup& src,
                     const InverseSemigroup& dst);

InverseSemigroup cyclic_group(int n);

// Chain meet-semilattice e_0 > e_1 > ... > e_{k-1}; mul(i,j) = max(i,j).
InverseSemigroup chain_semilattice(int k);

struct SymmetricInverseMonoid {
  InverseSemigroup sg;
  std::vector<std::vector<int>> maps;  // maps[i][x] = image of x, -1 undefined

  int index_of(const std::vector<int>& pmap) const;
};

// All partial bijections of an n-set under composition (apply right first).
// Guarded at n <= 4 (|I_4| = 209).
SymmetricInverseMonoid symmetric_inverse_monoid(int n);

}  // namespace gckit
