#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gckit/boolalg.hpp"
#include "gckit/common.hpp"
#include "gckit/finring.hpp"
#include "gckit/finsem.hpp"

namespace gckit {

// Spectral action of an inverse semigroup on a ring: partial ring
// automorphisms alpha_s : D_{s*} -> D_s between unital ideals, non-degenerate.
struct SpectralAction {
  std::shared_ptr<const InverseSemigroup> S;
  RingPtr A;
  std::vector<std::vector<int>> D;      // per s: sorted ideal members (= D_s)
  std::vector<std::vector<int>> alpha;  // per s: a -> alpha_s(a), -1 outside D_{s*}
  std::vector<int> unit;                // per s: 1_s for idempotents, else -1

  int apply(int s, int a) const { return alpha[s][a]; }
  bool in_domain(int s, int a) const { return alpha[s][a] >= 0; }

  // Full validation: ideals, partial isomorphisms, the homomorphism law
  // (cross-checked against the order/idempotent/(s*s = tt*) criterion),
  // non-degeneracy and the unit identities.  Derives missing 1_e.
  void validate();
};

using ActionPtr = std::shared_ptr<const SpectralAction>;
ActionPtr make_action(SpectralAction a);

// Convenience constructors for the worked instances.
ActionPtr trivial_group_action(const InverseSemigroup& group, RingPtr a);
// Group action by explicit automorphisms (maps[g] a permutation of A).
ActionPtr group_action(const InverseSemigroup& group, RingPtr a,
                       std::vector<std::vector<int>> maps);
// Chain semilattice e_0 > ... > e_{k-1} acting by identities on a descending
// chain of unital ideals.
ActionPtr chain_action(const InverseSemigroup& chain, RingPtr a,
                       std::vector<std::vector<int>> ideals);

// L = (+)_s D_s delta_s with (a delta_s)(b delta_t) = alpha_s(alpha_{s*}(a) b) delta_{st},
// N = < a delta_r - a delta_s : r <= s, a in D_r > (additively generated),
// and the quotient A x| S = L/N.
class SkewRing {
 public:
  using LElem = std::vector<int>;  // per s: element of D_s (A-element index)

  SkewRing(ActionPtr act, long long limit);

  const SpectralAction& action() const { return *act_; }
  long long l_size() const { return l_size_; }
  long long n_size() const { return static_cast<long long>(n_members_.size()); }

  LElem l_zero() const;
  LElem l_single(int s, int a) const;  // a delta_s
  LElem l_add(const LElem& x, const LElem& y) const;
  LElem l_neg(const LElem& x) const;
  LElem l_mul(const LElem& x, const LElem& y) const;
  long long l_encode(const LElem& x) const;
  LElem l_decode(long long idx) const;

  const std::vector<long long>& n_members() const { return n_members_; }

  // Quotient ring; element k corresponds to coset rep coset_rep(k).
  const FiniteRing& ring() const { return ring_; }
  RingPtr ring_ptr() const { return ring_ptr_; }
  int project(const LElem& x) const;
  LElem coset_rep(int k) const;

  int theta(int a) const;  // Theta: A -> A x| S
  int phi(int s) const;    // Phi(s) = 1_{ss*} delta_s + N
  const std::vector<int>& boolean_units() const { return b_elems_; }

  std::string format_coset(int k) const;

 private:
  void build_quotient(long long limit);
  void verify_embeddings();
  std::string format_coset_raw(const LElem& x) const;

  ActionPtr act_;
  std::vector<int> radix_;                    // |D_s|
  std::vector<long long> stride_;
  std::vector<std::vector<int>> pos_in_d_;    // per s: A element -> digit, -1
  long long l_size_ = 0;
  std::vector<long long> n_members_;
  std::vector<int> coset_of_;                 // L index -> quotient index
  std::vector<long long> rep_of_;             // quotient index -> L index
  FiniteRing ring_;
  RingPtr ring_ptr_;
  std::vector<int> theta_;                    // A element -> quotient index
  std::vector<int> phi_;                      // s -> quotient index
  std::vector<int> b_elems_;                  // Boolean algebra generated by units
};

using SkewPtr = std::shared_ptr<const SkewRing>;
SkewPtr build_skew_ring(ActionPtr act, long long limit = default_size_limit);

// A covariant system (R, theta, phi): theta a ring homomorphism, phi
// multiplicative, with (C1) theta(alpha_s(a)) = phi(s) theta(a) phi(s*) and
// (C2) theta(1_e) = phi(e).
struct CovariantSystem {
  RingPtr target;
  std::vector<int> theta;  // A -> R
  std::vector<int> phi;    // S -> R
};

// Throws NotCovariant naming the failed condition.
void validate_covariant(const SpectralAction& act, const CovariantSystem& sys);

// The universal map pi = theta x| phi with pi(a delta_s + N) = theta(a) phi(s);
// verified well defined, a ring homomorphism, and compatible with Theta/Phi.
RingHom induced_hom(const SkewRing& k, const CovariantSystem& sys);

}  // namespace gckit
