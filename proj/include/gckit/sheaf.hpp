#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gckit/common.hpp"
#include "gckit/finring.hpp"
#include "gckit/groupoid.hpp"

namespace gckit {

// Sheaf of unital rings over a finite discrete groupoid: a unital stalk ring
// per object and a unital ring isomorphism per arrow, functorially.  The
// continuity axioms (SR1)-(SR3) are vacuous at discrete scale and recorded as
// satisfied by construction.
struct RingSheaf {
  GroupoidPtr base;
  std::vector<RingPtr> stalk;            // per object
  std::vector<std::vector<int>> act;     // per arrow: stalk[d] -> stalk[r]

  const FiniteRing& stalk_at(int object) const { return *stalk[object]; }
  int apply(int arrow, int elem) const { return act[arrow][elem]; }
};

using SheafPtr = std::shared_ptr<const RingSheaf>;

// Checks (S1)-(S3) and (SR4); reports the first violated axiom.
SheafPtr validate_ring_sheaf(RingSheaf candidate);

SheafPtr constant_sheaf(GroupoidPtr base, RingPtr r);

// Same stalks over the unit groupoid of the base.
SheafPtr restrict_to_units(const RingSheaf& o);

// Finite unitary left module over a finite ring, table driven.
struct FiniteModule {
  RingPtr ring;
  int n = 0;
  std::vector<int> add;   // n*n
  int zero = 0;
  std::vector<int> smul;  // ring->n rows of n: smul[r*n+m]
  std::vector<int> neg;   // derived
  std::vector<std::string> labels;

  int a(int x, int y) const { return add[x * n + y]; }
  int s(int r, int x) const { return smul[r * n + x]; }
  std::string label(int x) const;

  // Validates the abelian group and module axioms; NotUnitary when the ring
  // is unital but 1 m != m somewhere.
  static FiniteModule build(RingPtr ring, int n, std::vector<int> add, int zero,
                            std::vector<int> smul,
                            std::vector<std::string> labels = {});
  static FiniteModule regular(RingPtr ring);
};

// Left submodule of the regular module spanned by `members` (checked closed
// under addition and left multiplication).
FiniteModule submodule(RingPtr ring, std::vector<int> members);

// Members of the left summand R * x (for an idempotent x this is a direct
// summand of the regular module).
std::vector<int> left_multiples(const FiniteRing& ring, int x);

// Sheaf of modules over a sheaf of rings: a stalk module per object, an
// additive bijection per arrow, with (SM3) tying the two actions together.
struct ModuleSheaf {
  SheafPtr over;
  std::vector<FiniteModule> stalk;       // stalk[x] over over->stalk[x]
  std::vector<std::vector<int>> act;     // per arrow
};

using ModuleSheafPtr = std::shared_ptr<const ModuleSheaf>;

ModuleSheafPtr validate_module_sheaf(ModuleSheaf candidate);

}  // namespace gckit
