#pragma once

#include <string>
#include <vector>

#include "gckit/common.hpp"
#include "gckit/conv.hpp"
#include "gckit/pierce.hpp"
#include "gckit/sheaf.hpp"
#include "gckit/skew.hpp"

namespace gckit {

struct IsoReport {
  std::string theorem;
  long long lhs_size = 0, rhs_size = 0;
  bool is_hom = false, injective = false, surjective = false;
  std::vector<std::string> witness_failures;

  bool ok() const {
    return is_hom && injective && surjective && lhs_size == rhs_size &&
           witness_failures.empty();
  }
  std::string to_json() const;
};

IsoReport report_from_hom(const std::string& theorem, const RingHom& h);

// The diagonal spectral action of a bisection subsemigroup on
// A = Gamma_c(G^0, O): D_s = A(r(s)), tilde-alpha_s(f)(r(g)) = alpha_g(f(d(g))).
struct DiagAction {
  BisectionSemigroup sub;
  ConvAlgebra diag;     // Gamma_c(G^0, O)
  RingPtr diag_ring;
  ActionPtr action;
};

// Requires (G1); each tilde-alpha_s is verified a ring isomorphism through the
// spectral-action validation.
DiagAction tilde_action(SheafPtr o, const BisectionSemigroup& sub,
                        long long limit = default_size_limit);

// The covariant triple (Gamma_c(G,O), theta-hat, phi-hat) with theta-hat the
// diagonal inclusion and phi-hat(s) = chi_s, plus the induced map, verified
// surjective.
struct HatCovariant {
  DiagAction diag;
  ConvAlgebra full;     // Gamma_c(G, O)
  RingPtr full_ring;
  CovariantSystem sys;
  SkewPtr skew;         // Gamma_c(G^0,O) x| S_sub
  RingHom pi;           // skew -> full, surjective
};

HatCovariant hat_covariant(SheafPtr o, const BisectionSemigroup& sub,
                           long long limit = default_size_limit);

// Gamma_c(G,O) iso Gamma_c(G^0,O) x| S_sub when sub satisfies (G1) and (G2).
IsoReport check_factor_through(SheafPtr o, const BisectionSemigroup& sub,
                               long long limit = default_size_limit);

// Disintegration data: stalks M_x = M/N_x with N_x the sections killed near x,
// and beta_g([m]) = [chi_U m] for a bisection U containing g.
struct SheafifiedModule {
  ModuleSheafPtr sheaf;
  std::vector<std::vector<int>> classmap;  // per object: module elem -> stalk elem
};

// `m` must be a unitary module over alg.as_ring() (element k = alg.decode(k)).
SheafifiedModule sheafify_module(const ConvAlgebra& alg, const FiniteModule& m);

// Gamma_c(G, M): per-object stalk choices with the convolution action.
class SectionsModule {
 public:
  SectionsModule(const ConvAlgebra& alg, RingPtr alg_ring,
                 const ModuleSheaf& msheaf, long long limit);

  const FiniteModule& mod() const { return mod_; }
  int encode(const std::vector<int>& per_object) const;
  std::vector<int> decode(int idx) const;

 private:
  std::vector<long long> stride_;
  std::vector<int> sizes_;
  FiniteModule mod_;
};

// eta : M -> Gamma_c(G, Sh(M)), m -> (x -> [m]_x), verified a module
// isomorphism; support control checked for every unit subset.
IsoReport disintegration_module_roundtrip(const ConvAlgebra& alg,
                                          RingPtr alg_ring,
                                          const FiniteModule& m,
                                          long long limit = default_size_limit);

// v : Sh(Gamma_c(G,M)) -> M, [t]_x -> t(x), verified an isomorphism of
// sheaves of modules.
IsoReport disintegration_sheaf_roundtrip(const ConvAlgebra& alg,
                                         RingPtr alg_ring,
                                         const ModuleSheaf& msheaf,
                                         long long limit = default_size_limit);

// The S x| A-hat sheaf on the Pierce stalks:
// alpha_{[s,l]}([a]_l) = [alpha_s(1_{s*s} a)]_{alpha-hat_s(l)}.
struct GermSheaf {
  PierceSpectrum spectrum;
  GermGroupoid germ;
  PierceSheaf stalks;
  SheafPtr sheaf;  // over germ.gpd
};

GermSheaf germ_sheaf_on_pierce(ActionPtr act);
GermSheaf germ_sheaf_on_pierce(ActionPtr act, std::vector<int> designated_b);

// A x| S iso Gamma_c(S x| A-hat, O_A): builds the two covariant systems of the
// proof, checks pi and pi' are mutually inverse, checks the hat/tilde
// compatibility, and composes with the factor-through isomorphism.
IsoReport check_main_theorem(ActionPtr act,
                             long long limit = default_size_limit);

}  // namespace gckit
