#include "doctest.h"
#include "gckit/equiv.hpp"

#include <numeric>

using namespace gckit;

namespace {

RingPtr z2z2() {
  return make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
}

SheafPtr swap_sheaf_over_z2_group() {
  auto base = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  RingSheaf o;
  o.base = base;
  o.stalk = {z2z2()};
  std::vector<int> id(4);
  std::iota(id.begin(), id.end(), 0);
  o.act = {id, {0, 2, 1, 3}};
  return validate_ring_sheaf(std::move(o));
}

// Stalk Z_2 x Z_2 on both points of the pair groupoid, swapped across.
SheafPtr crossed_swap_sheaf_over_pair() {
  auto base = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  RingSheaf o;
  o.base = base;
  o.stalk = {z2z2(), z2z2()};
  std::vector<int> id = {0, 1, 2, 3}, swap = {0, 2, 1, 3};
  o.act = {id, swap, swap, id};  // arrows (0,0),(0,1),(1,0),(1,1)
  return validate_ring_sheaf(std::move(o));
}

ModuleSheaf self_module_sheaf(SheafPtr o) {
  ModuleSheaf m;
  m.over = o;
  for (int x = 0; x < o->base->n_objects; ++x)
    m.stalk.push_back(FiniteModule::regular(o->stalk[x]));
  m.act = o->act;
  return m;
}

}  // namespace

TEST_CASE("tilde action moves diagonal values along bisections") {
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto o = constant_sheaf(pg, make_ring(FiniteRing::zn(2)));
  auto sub = all_bisections(pg);
  auto da = tilde_action(o, sub, 4096);
  int s = sub.index_of({1});  // arrow (0,1): point 1 -> point 0
  // the section supported at point 1 with value 1 maps to the one at point 0
  int f = da.diag.encode({0, 1});
  int g = da.diag.encode({1, 0});
  CHECK(da.action->apply(s, f) == g);

  auto ug = make_groupoid(FiniteGroupoid::units_groupoid(2));
  auto ou = constant_sheaf(ug, make_ring(FiniteRing::zn(2)));
  auto subu = all_bisections(ug);
  auto dau = tilde_action(ou, subu, 4096);
  for (int si = 0; si < subu.sg.n; ++si)
    for (int i = 0; i < dau.diag_ring->n; ++i)
      if (dau.action->in_domain(si, i)) {
        auto before = dau.diag.decode(i);
        auto after = dau.diag.decode(dau.action->apply(si, i));
        for (int x = 0; x < 2; ++x)
          if (after[x] != 0) CHECK(after[x] == before[x]);
      }
}

TEST_CASE("tilde action on the swap sheaf applies the stalk swap") {
  auto o = swap_sheaf_over_z2_group();
  auto sub = all_bisections(o->base);
  auto da = tilde_action(o, sub, 4096);
  int s = sub.index_of({1});  // the group generator
  // diag elements are single stalk values; (1,0) must go to (0,1).
  int f10 = da.diag.encode({2});
  int f01 = da.diag.encode({1});
  CHECK(da.action->apply(s, f10) == f01);
}

TEST_CASE("factor-through isomorphism on the reference grid") {
  struct Case {
    SheafPtr o;
    long long lhs;
  };
  std::vector<Case> cases;
  cases.push_back({constant_sheaf(
      make_groupoid(FiniteGroupoid::units_groupoid(2)),
      make_ring(FiniteRing::zn(2))), 4});
  cases.push_back({constant_sheaf(
      make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2))),
      make_ring(FiniteRing::zn(2))), 4});
  cases.push_back({constant_sheaf(
      make_groupoid(FiniteGroupoid::pair_groupoid(2)),
      make_ring(FiniteRing::zn(2))), 16});
  for (auto& c : cases) {
    for (bool singles : {false, true}) {
      auto sub = singles ? singleton_bisections(c.o->base)
                         : all_bisections(c.o->base);
      auto rep = check_factor_through(c.o, sub, 1 << 18);
      CHECK(rep.ok());
      CHECK(rep.lhs_size == c.lhs);
      CHECK(rep.rhs_size == c.lhs);
    }
  }
}

TEST_CASE("factor-through on non-constant sheaves") {
  auto swap = swap_sheaf_over_z2_group();
  auto rep = check_factor_through(swap, all_bisections(swap->base), 4096);
  CHECK(rep.ok());
  CHECK(rep.lhs_size == 16);

  auto crossed = crossed_swap_sheaf_over_pair();
  auto rep2 = check_factor_through(crossed, singleton_bisections(crossed->base),
                                   4096);
  CHECK(rep2.ok());
  CHECK(rep2.lhs_size == 256);
}

TEST_CASE("germ-condition gate") {
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto o = constant_sheaf(pg, make_ring(FiniteRing::zn(2)));
  auto partial = closure_semigroup(pg, {Bisection{}, Bisection{0}});
  CHECK_THROWS_WITH_AS(check_factor_through(o, partial, 4096),
                       doctest::Contains("GermConditionsFail"), error);
}

TEST_CASE("disintegration of the regular module") {
  auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
  ConvAlgebra alg(o, 4096);
  auto ring = alg.as_ring_ptr();
  auto rep = disintegration_module_roundtrip(alg, ring,
                                             FiniteModule::regular(ring), 4096);
  CHECK(rep.ok());
  CHECK(rep.lhs_size == 4);
}

TEST_CASE("disintegration of unit summands") {
  auto g = make_groupoid(FiniteGroupoid::units_groupoid(2));
  auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
  ConvAlgebra alg(o, 4096);
  auto ring = alg.as_ring_ptr();
  for (const Bisection& u : {Bisection{0}, Bisection{1}, Bisection{0, 1}}) {
    auto members = left_multiples(*ring, alg.encode(alg.chi(u)));
    auto m = submodule(ring, members);
    auto rep = disintegration_module_roundtrip(alg, ring, m, 4096);
    CHECK(rep.ok());
  }
}

TEST_CASE("sheaf-side disintegration round trip") {
  for (auto o : {constant_sheaf(
                     make_groupoid(FiniteGroupoid::units_groupoid(2)),
                     make_ring(FiniteRing::zn(2))),
                 swap_sheaf_over_z2_group()}) {
    ConvAlgebra alg(o, 4096);
    auto ring = alg.as_ring_ptr();
    auto rep = disintegration_sheaf_roundtrip(alg, ring, self_module_sheaf(o),
                                              1 << 16);
    CHECK(rep.ok());
  }
}

TEST_CASE("germ sheaf of a trivial group action") {
  auto act = trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2)));
  auto gs = germ_sheaf_on_pierce(act);
  CHECK(gs.germ.gpd->n_objects == 1);
  CHECK(gs.germ.gpd->n_arrows == 2);
  CHECK(gs.sheaf->stalk[0]->n == 2);
}

TEST_CASE("germ sheaf of the swap action looks like the pair groupoid") {
  auto act = group_action(cyclic_group(2), z2z2(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  auto gs = germ_sheaf_on_pierce(act);
  CHECK(gs.germ.gpd->n_objects == 2);
  CHECK(gs.germ.gpd->n_arrows == 4);
  CHECK(groupoids_isomorphic(*gs.germ.gpd, FiniteGroupoid::pair_groupoid(2)));
  for (auto& st : gs.stalks.stalks) CHECK(st.r_lambda->n == 2);
}

TEST_CASE("main theorem instances") {
  // Z_2 acting trivially on Z_2: both sides are the group ring, size 4.
  auto rep1 = check_main_theorem(
      trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2))));
  CHECK(rep1.ok());
  CHECK(rep1.lhs_size == 4);

  // The two-chain semilattice on Z_2 x Z_2: both sides A, size 4.
  auto rep2 = check_main_theorem(chain_action(
      chain_semilattice(2), z2z2(), {{0, 1, 2, 3}, {0, 2}}));
  CHECK(rep2.ok());
  CHECK(rep2.lhs_size == 4);

  // The swap: both sides the 2x2 matrix picture over Z_2, size 16.
  auto rep3 = check_main_theorem(
      group_action(cyclic_group(2), z2z2(), {{0, 1, 2, 3}, {0, 2, 1, 3}}),
      1 << 18);
  CHECK(rep3.ok());
  CHECK(rep3.lhs_size == 16);
}
