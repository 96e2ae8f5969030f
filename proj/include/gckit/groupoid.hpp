#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gckit/common.hpp"
#include "gckit/finsem.hpp"

namespace gckit {

// Finite discrete groupoid; every subset of arrows is compact open, so the
// ample hypotheses of the ambient theory hold automatically.
struct FiniteGroupoid {
  int n_objects = 0;
  int n_arrows = 0;
  std::vector<int> d, r;     // per arrow
  std::vector<int> inv;      // derived
  std::vector<int> unit;     // per object -> its identity arrow (derived)
  std::vector<int> comp;     // row-major; comp[b*n_arrows+a] = b after a, -1 if d(b) != r(a)
  std::vector<std::string> arrow_labels;

  int compose(int b, int a) const { return comp[b * n_arrows + a]; }
  bool is_unit(int arrow) const { return unit[d[arrow]] == arrow && d[arrow] == r[arrow]; }

  std::string label(int arrow) const;

  // Validates da/ra laws, associativity on composable triples, identity laws
  // and invertibility; units and inverses are derived.
  static FiniteGroupoid build(int n_objects, std::vector<int> d, std::vector<int> r,
                              std::vector<int> comp,
                              std::vector<std::string> arrow_labels = {});

  // Arrow (i,j): j -> i; composed as (i,j)(j,k) = (i,k).
  static FiniteGroupoid pair_groupoid(int points);
  static FiniteGroupoid group_groupoid(const InverseSemigroup& group);
  static FiniteGroupoid units_groupoid(int points);
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;
GroupoidPtr make_groupoid(FiniteGroupoid g);

// Sorted arrow subset with d and r injective on it.
using Bisection = std::vector<int>;

bool is_bisection(const FiniteGroupoid& g, const Bisection& b);
Bisection bisection_product(const FiniteGroupoid& g, const Bisection& lhs,
                            const Bisection& rhs);
Bisection bisection_star(const FiniteGroupoid& g, const Bisection& b);
std::vector<int> bisection_sources(const FiniteGroupoid& g, const Bisection& b);
std::vector<int> bisection_ranges(const FiniteGroupoid& g, const Bisection& b);
std::string bisection_label(const FiniteGroupoid& g, const Bisection& b);

// An inverse semigroup whose elements are concrete bisections of a groupoid.
struct BisectionSemigroup {
  GroupoidPtr base;
  InverseSemigroup sg;
  std::vector<Bisection> elems;

  int index_of(const Bisection& b) const;
  // Index of the full unit-space bisection, if present.
  std::optional<int> unit_space_index() const;
};

// The inverse semigroup of all bisections; guarded since the count can reach
// 2^arrows.
BisectionSemigroup all_bisections(GroupoidPtr g, int max_arrows = 12);

// Smallest product- and star-closed family containing `gens` (the empty
// bisection is added whenever a product leaves the family).
BisectionSemigroup closure_semigroup(GroupoidPtr g, std::vector<Bisection> gens);

BisectionSemigroup singleton_bisections(GroupoidPtr g);

struct GermConditions {
  bool g1 = false;
  bool g2 = false;
};

// `sub` must be product- and star-closed (NotSubsemigroup otherwise).
GermConditions germ_conditions(const FiniteGroupoid& g,
                               const std::vector<Bisection>& sub);

// Non-degenerate Boolean action of S on a finite set: rho[s][x] = image of x
// under rho_s, or -1 outside dom(rho_s) = D_{s*}.
struct BooleanAction {
  std::shared_ptr<const InverseSemigroup> S;
  int n_points = 0;
  std::vector<std::vector<int>> rho;

  std::vector<int> dom(int s) const;    // D_{s*}
  std::vector<int> range(int s) const;  // D_s
  void validate() const;                // partial bijections, homomorphism, non-degeneracy
};

// Canonical action rho_U = r o (d|_U)^{-1} of a bisection semigroup on the
// unit space.
BooleanAction rho_from_bisections(const BisectionSemigroup& s);

struct GermGroupoid {
  GroupoidPtr gpd;                    // objects = points of the action
  std::vector<std::vector<int>> germ_of;  // [s][x] -> arrow, -1 outside D_{s*}
  std::vector<std::pair<int, int>> witness;  // arrow -> one representative (s, x)
  BisectionSemigroup u_semigroup;     // S~ = { U(s) }
  std::vector<int> u_of;              // s -> index into u_semigroup
};

// Groupoid of germs of a Boolean action: arrows are classes [s,x] of pairs
// under (s,x) ~ (t,x) iff some u <= s,t has x in D_{u*}.
GermGroupoid groupoid_of_germs(const BooleanAction& act);

// Brute-force isomorphism search (objects then (d,r)-fiber matching); guarded.
bool groupoids_isomorphic(const FiniteGroupoid& a, const FiniteGroupoid& b,
                          int max_arrows = 10);

}  // namespace gckit
