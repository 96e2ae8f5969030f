#include "doctest.h"
#include "gckit/pierce.hpp"

using namespace gckit;

namespace {

RingPtr z2z2() {
  return make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
}

ActionPtr swap_action() {
  // Z_2 swapping the coordinates of Z_2 x Z_2.
  return group_action(cyclic_group(2), z2z2(),
                      {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

}  // namespace

TEST_CASE("stalks of a product ring") {
  auto sp = pierce_spectrum(z2z2());
  REQUIRE(sp.atoms.size() == 2);
  for (int p = 0; p < 2; ++p) {
    auto st = pierce_stalk(sp, p);
    CHECK(st.r_lambda->n == 2);
    CHECK(st.i_lambda.size() == 2);
  }
}

TEST_CASE("a unital ring with trivial idempotents is its own stalk") {
  auto z4 = make_ring(FiniteRing::zn(4));
  auto sp = pierce_spectrum(z4);
  REQUIRE(sp.atoms.size() == 1);
  auto st = pierce_stalk(sp, 0);
  CHECK(st.r_lambda->n == 4);
  CHECK(st.i_lambda == std::vector<int>{0});
}

TEST_CASE("CRT stalks of Z_6 and a three-factor product") {
  auto sp = pierce_spectrum(make_ring(FiniteRing::zn(6)));
  REQUIRE(sp.atoms.size() == 2);
  std::vector<int> sizes;
  for (int p = 0; p < 2; ++p) sizes.push_back(pierce_stalk(sp, p).r_lambda->n);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 3});

  auto z232 = make_ring(FiniteRing::product(
      FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)),
      FiniteRing::zn(2)));
  auto sp3 = pierce_spectrum(z232);
  REQUIRE(sp3.atoms.size() == 3);
  std::vector<int> sizes3;
  for (int p = 0; p < 3; ++p)
    sizes3.push_back(pierce_stalk(sp3, p).r_lambda->n);
  std::sort(sizes3.begin(), sizes3.end());
  CHECK(sizes3 == std::vector<int>{2, 2, 3});
}

TEST_CASE("sections recover the ring") {
  std::vector<RingPtr> rings;
  rings.push_back(z2z2());
  rings.push_back(make_ring(FiniteRing::zn(6)));
  rings.push_back(make_ring(FiniteRing::matrix_ring(2, 2, true)));
  for (auto& r : rings) {
    auto iso = pierce_iso(pierce_spectrum(r));
    CHECK(is_isomorphism(iso.psi));
    CHECK(iso.psi.dst->n == r->n);
    if (r->commutative()) {
      // Stalks of commutative rings are indecomposable.
      for (const auto& st : iso.sheaf.stalks) {
        int count = 0;
        for (int e = 0; e < st.r_lambda->n; ++e)
          if (st.r_lambda->is_idempotent(e)) ++count;
        CHECK(count == 2);
      }
    }
  }
}

TEST_CASE("gelfand sections") {
  auto sp = pierce_spectrum(z2z2());
  auto iso = pierce_iso(sp);
  // zero maps to the zero section, the unit to the unit section.
  CHECK(iso.psi.map[0] == iso.alg.encode(iso.alg.zero()));
  CHECK(iso.psi.map[3] == iso.alg.encode(iso.alg.identity()));
  // (1,0) is [1] at one atom and [0] at the other.
  auto f = iso.alg.decode(iso.psi.map[2]);
  int nonzero = 0;
  for (int p = 0; p < 2; ++p)
    if (f[p] != iso.sheaf.stalks[p].r_lambda->zero) ++nonzero;
  CHECK(nonzero == 1);
}

TEST_CASE("designated subalgebras") {
  auto r = z2z2();
  // The full algebra and the trivial {0,1} subalgebra both work.
  auto sp_full = pierce_spectrum(r);
  CHECK(sp_full.atoms.size() == 2);
  auto sp_small = pierce_spectrum(r, {3});
  CHECK(sp_small.atoms.size() == 1);
  CHECK(pierce_stalk(sp_small, 0).r_lambda->n == 4);
  // A non-covering subalgebra is rejected.
  CHECK_THROWS_WITH_AS(pierce_spectrum(r, {2}),
                       doctest::Contains("NotLocalUnits"), error);
}

TEST_CASE("hat action of a trivial group action is trivial") {
  auto act = trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(4)));
  auto sp = pierce_spectrum(act->A);
  auto hat = hat_action(*act, sp);
  CHECK(hat.n_points == 1);
  CHECK(hat.rho[0][0] == 0);
  CHECK(hat.rho[1][0] == 0);
}

TEST_CASE("hat action of the swap exchanges the atoms") {
  auto act = swap_action();
  auto sp = pierce_spectrum(act->A);
  auto hat = hat_action(*act, sp);
  REQUIRE(hat.n_points == 2);
  CHECK(hat.rho[1][0] == 1);
  CHECK(hat.rho[1][1] == 0);
  CHECK(hat.rho[0][0] == 0);
  CHECK(hat.rho[0][1] == 1);
}

TEST_CASE("hat action of the two-chain restricts domains") {
  auto a = z2z2();
  auto act = chain_action(chain_semilattice(2), a, {{0, 1, 2, 3}, {0, 2}});
  auto sp = pierce_spectrum(act->A);
  auto hat = hat_action(*act, sp);
  REQUIRE(hat.n_points == 2);
  // D-hat_f = { lambda : lambda((1,0)) = 1 } is a single point.
  int dom = 0;
  for (int p = 0; p < 2; ++p)
    if (hat.rho[1][p] >= 0) ++dom;
  CHECK(dom == 1);
}
