#pragma once

#include <string>
#include <vector>

#include "gckit/boolalg.hpp"
#include "gckit/common.hpp"
#include "gckit/conv.hpp"
#include "gckit/finring.hpp"
#include "gckit/groupoid.hpp"
#include "gckit/skew.hpp"

namespace gckit {

// Generalized Stone data for a ring R and a generalized Boolean algebra
// B of central idempotents that is a set of local units for R.  Points are
// the characters of B; finitely, its atoms.
struct PierceSpectrum {
  RingPtr R;
  IdempotentAlgebra B;
  std::vector<int> atoms;           // B indices, ascending; point i = atom i
  std::vector<Character> chars;     // aligned with atoms
};

// B = E(Z(R)) by default, or any designated generalized Boolean subalgebra
// that is a set of local units (NotLocalUnits otherwise).
PierceSpectrum pierce_spectrum(RingPtr r);
PierceSpectrum pierce_spectrum(RingPtr r, std::vector<int> b_ring_elems);

// I_lambda = { r : e r = 0 for some e with lambda(e) = 1 }, R_lambda = R/I_lambda.
struct PierceStalk {
  int point = 0;
  std::vector<int> i_lambda;     // ideal members
  RingPtr r_lambda;              // unital quotient
  std::vector<int> classmap;     // ring element -> quotient index
};

// Builds R/I_lambda and, independently, the direct-limit corner description,
// asserting the two are isomorphic.
PierceStalk pierce_stalk(const PierceSpectrum& sp, int point);

// The sheaf of stalks over the unit groupoid on the points.
struct PierceSheaf {
  SheafPtr sheaf;                    // over units_groupoid(points)
  std::vector<PierceStalk> stalks;   // per point
};

PierceSheaf pierce_sheaf(const PierceSpectrum& sp);

// r-hat as a section: r-hat(lambda) = [r]_lambda.
ConvAlgebra::Elem gelfand(const PierceSheaf& ps, const ConvAlgebra& alg, int r);

// Psi : R -> Gamma_c(B-hat, O_B), verified additive, multiplicative,
// injective and surjective.
struct PierceIso {
  PierceSheaf sheaf;
  ConvAlgebra alg;
  RingHom psi;          // R -> alg.as_ring()
  std::vector<int> inverse;  // section index -> ring element
};

PierceIso pierce_iso(const PierceSpectrum& sp,
                     long long limit = default_size_limit);

// Induced Boolean action on the spectrum: D-hat_s = { lambda : lambda(1_{ss*}) = 1 },
// alpha-hat_s(lambda)(e) = lambda(alpha_{s*}(e 1_{ss*})).
BooleanAction hat_action(const SpectralAction& act, const PierceSpectrum& sp);

}  // namespace gckit
