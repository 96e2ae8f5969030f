#include "doctest.h"
#include "gckit/conv.hpp"
#include "gckit/skew.hpp"

#include <numeric>

using namespace gckit;

namespace {

ActionPtr two_chain_action() {
  // e > f acting by identities on Z_2 x Z_2 > Z_2 x 0.
  auto a = make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
  return chain_action(chain_semilattice(2), a, {{0, 1, 2, 3}, {0, 2}});
}

bool covariant_ok(const SpectralAction& act, const CovariantSystem& sys) {
  try {
    validate_covariant(act, sys);
    return true;
  } catch (const error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("group actions give the skew group ring with N = 0") {
  auto act = trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2)));
  auto k = build_skew_ring(act);
  CHECK(k->n_size() == 1);  // only zero
  CHECK(k->ring().n == 4);

  // Table equality with the convolution picture of the group ring.
  auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
  auto conv_ring = alg.as_ring_ptr();
  std::vector<int> map(k->ring().n);
  for (int i = 0; i < k->ring().n; ++i) {
    auto rep = k->coset_rep(i);
    ConvAlgebra::Elem f = {rep[0], rep[1]};
    map[i] = alg.encode(f);
  }
  CHECK(is_isomorphism(RingHom{k->ring_ptr(), conv_ring, map}));
}

TEST_CASE("two-chain semilattice: N has two elements and the quotient is A") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);
  CHECK(k->l_size() == 8);
  CHECK(k->n_size() == 2);
  CHECK(k->ring().n == 4);
  // Theta is a bijection here, so A x| S is isomorphic to A.
  std::vector<int> theta_map(4);
  for (int a = 0; a < 4; ++a) theta_map[a] = k->theta(a);
  CHECK(is_isomorphism(RingHom{act->A, k->ring_ptr(), theta_map}));
}

TEST_CASE("one idempotent acting as identity recovers the ring") {
  auto a = make_ring(FiniteRing::zn(4));
  auto act = chain_action(chain_semilattice(1), a, {{0, 1, 2, 3}});
  auto k = build_skew_ring(act);
  CHECK(k->ring().n == 4);
  std::vector<int> theta_map(4);
  for (int x = 0; x < 4; ++x) theta_map[x] = k->theta(x);
  CHECK(is_isomorphism(RingHom{a, k->ring_ptr(), theta_map}));
}

TEST_CASE("Theta does not depend on the chosen decomposition") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);
  const FiniteRing& a = *act->A;
  for (int av = 0; av < a.n; ++av) {
    for (int af : act->D[1]) {
      int ae = a.sub(av, af);
      auto x = k->l_add(k->l_single(0, ae), k->l_single(1, af));
      CHECK(k->project(x) == k->theta(av));
    }
  }
}

TEST_CASE("Phi respects the semigroup and the embedding identities hold") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);  // identities asserted during construction
  const InverseSemigroup& s = *act->S;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      CHECK(k->phi(s.at(i, j)) == k->ring().m(k->phi(i), k->phi(j)));
  CHECK(k->theta(act->A->zero) == k->ring().zero);
}

TEST_CASE("size guard on L") {
  auto act = two_chain_action();
  CHECK_THROWS_WITH_AS(build_skew_ring(act, 4),
                       doctest::Contains("SizeLimit"), error);
}

TEST_CASE("induced homomorphism at the universal system is the identity") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);
  CovariantSystem sys;
  sys.target = k->ring_ptr();
  sys.theta.resize(act->A->n);
  for (int a = 0; a < act->A->n; ++a) sys.theta[a] = k->theta(a);
  sys.phi.resize(act->S->n);
  for (int s = 0; s < act->S->n; ++s) sys.phi[s] = k->phi(s);
  auto pi = induced_hom(*k, sys);
  for (int i = 0; i < k->ring().n; ++i) CHECK(pi.map[i] == i);
}

TEST_CASE("systems violating covariance are rejected") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);
  CovariantSystem sys;
  sys.target = make_ring(FiniteRing::zn(2));
  sys.theta.assign(act->A->n, 0);
  sys.phi.assign(act->S->n, 1);  // theta(1_e) = 0 != 1 = phi(e)
  CHECK_THROWS_WITH_AS(induced_hom(*k, sys), doctest::Contains("NotCovariant"),
                       error);
}

TEST_CASE("homomorphisms out of A x| S biject with covariant systems") {
  auto act = two_chain_action();
  auto k = build_skew_ring(act);
  const FiniteRing& a = *act->A;
  const InverseSemigroup& s = *act->S;

  std::vector<RingPtr> targets;
  targets.push_back(make_ring(FiniteRing::zn(2)));
  targets.push_back(make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2))));
  targets.push_back(make_ring(FiniteRing::zn(8)));

  for (const auto& target : targets) {
    auto pis = enumerate_ring_homs(k->ring(), *target);

    // All covariant systems (theta, phi).
    std::vector<CovariantSystem> systems;
    for (const auto& th : enumerate_ring_homs(a, *target)) {
      std::vector<int> phi(s.n);
      for (phi[0] = 0; phi[0] < target->n; ++phi[0])
        for (phi[1] = 0; phi[1] < target->n; ++phi[1]) {
          CovariantSystem sys{target, th, phi};
          if (covariant_ok(*act, sys)) systems.push_back(sys);
        }
    }
    CHECK(pis.size() == systems.size());

    // pi -> (pi Theta, pi Phi) is injective into the systems, and the
    // induced map of each system is a hom that restricts back to it.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> images;
    for (const auto& pi : pis) {
      std::vector<int> th(a.n), ph(s.n);
      for (int x = 0; x < a.n; ++x) th[x] = pi[k->theta(x)];
      for (int x = 0; x < s.n; ++x) ph[x] = pi[k->phi(x)];
      CHECK(covariant_ok(*act, CovariantSystem{target, th, ph}));
      images.emplace_back(th, ph);
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    for (const auto& sys : systems) {
      auto pi = induced_hom(*k, sys);
      for (int x = 0; x < a.n; ++x) CHECK(pi.map[k->theta(x)] == sys.theta[x]);
      for (int x = 0; x < s.n; ++x) CHECK(pi.map[k->phi(x)] == sys.phi[x]);
    }
  }
}
