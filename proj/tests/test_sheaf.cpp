#include "doctest.h"
#include "gckit/sheaf.hpp"

#include <numeric>

using namespace gckit;

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// Z_2 x Z_2 with the coordinate swap automorphism.
RingSheaf swap_sheaf_over_z2() {
  auto base = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  auto stalk = make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
  RingSheaf o;
  o.base = base;
  o.stalk = {stalk};
  o.act = {identity_map(4), {0, 2, 1, 3}};
  return o;
}

}  // namespace

TEST_CASE("constant sheaves validate") {
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto o = constant_sheaf(pg, make_ring(FiniteRing::zn(2)));
  CHECK(o->stalk.size() == 2);

  auto ug = make_groupoid(FiniteGroupoid::units_groupoid(3));
  CHECK(constant_sheaf(ug, make_ring(FiniteRing::zn(4)))->stalk.size() == 3);
}

TEST_CASE("order-two arrows force involutive stalk maps") {
  auto base = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));

  RingSheaf ok;
  ok.base = base;
  ok.stalk = {make_ring(FiniteRing::zn(3))};
  ok.act = {identity_map(3), identity_map(3)};
  CHECK_NOTHROW(validate_ring_sheaf(std::move(ok)));

  CHECK_NOTHROW(validate_ring_sheaf(swap_sheaf_over_z2()));

  // Coordinate rotation on Z_2^3 is a ring automorphism of order three, so
  // S3 fails over an order-two arrow.
  auto z2cubed = make_ring(FiniteRing::product(
      FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)),
      FiniteRing::zn(2)));
  std::vector<int> rot(8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) rot[(a * 2 + b) * 2 + c] = (c * 2 + a) * 2 + b;
  RingSheaf bad;
  bad.base = base;
  bad.stalk = {z2cubed};
  bad.act = {identity_map(8), rot};
  CHECK_THROWS_WITH_AS(validate_ring_sheaf(std::move(bad)),
                       doctest::Contains("S3"), error);
}

TEST_CASE("restriction to units") {
  auto o = std::make_shared<const RingSheaf>(swap_sheaf_over_z2());
  auto diag = restrict_to_units(*o);
  CHECK(diag->base->n_arrows == 1);
  CHECK(diag->stalk[0]->n == 4);
  for (int v = 0; v < 4; ++v) CHECK(diag->act[0][v] == v);
}

TEST_CASE("module sheaves") {
  auto o = std::make_shared<const RingSheaf>(swap_sheaf_over_z2());

  // Each stalk ring acting on itself; beta = the swap again.
  ModuleSheaf m;
  m.over = o;
  m.stalk = {FiniteModule::regular(o->stalk[0])};
  m.act = {identity_map(4), {0, 2, 1, 3}};
  CHECK_NOTHROW(validate_module_sheaf(std::move(m)));

  // Zero modules are fine.
  ModuleSheaf z;
  z.over = o;
  z.stalk = {FiniteModule::build(o->stalk[0], 1, {0}, 0,
                                 std::vector<int>(4, 0))};
  z.act = {std::vector<int>{0}, std::vector<int>{0}};
  CHECK_NOTHROW(validate_module_sheaf(std::move(z)));

  // A collapsing arrow map is rejected.
  ModuleSheaf bad;
  bad.over = o;
  bad.stalk = {FiniteModule::regular(o->stalk[0])};
  bad.act = {identity_map(4), std::vector<int>(4, 0)};
  CHECK_THROWS_AS(validate_module_sheaf(std::move(bad)), error);

  // (SM3) failure: beta the identity while alpha swaps.
  ModuleSheaf sm3;
  sm3.over = o;
  sm3.stalk = {FiniteModule::regular(o->stalk[0])};
  sm3.act = {identity_map(4), identity_map(4)};
  CHECK_THROWS_WITH_AS(validate_module_sheaf(std::move(sm3)),
                       doctest::Contains("SM3"), error);
}

TEST_CASE("submodules of the regular module") {
  auto z6 = make_ring(FiniteRing::zn(6));
  auto members = left_multiples(*z6, 3);
  CHECK(members == std::vector<int>{0, 3});
  auto m = submodule(z6, members);
  CHECK(m.n == 2);
}
