#include "doctest.h"
#include "gckit/conv.hpp"

#include <numeric>

using namespace gckit;

namespace {

// Independent classical convolution oracle for constant coefficients:
// (f*g)(c) = sum over compositions ab = c of f(a) g(b), straight from the
// composition table.
std::vector<int> steinberg_convolve(const FiniteGroupoid& g, const FiniteRing& r,
                                    const std::vector<int>& f,
                                    const std::vector<int>& h) {
  std::vector<int> out(g.n_arrows, r.zero);
  for (int a = 0; a < g.n_arrows; ++a)
    for (int b = 0; b < g.n_arrows; ++b) {
      int c = g.compose(a, b);
      if (c >= 0) out[c] = r.a(out[c], r.m(f[a], h[b]));
    }
  return out;
}

ConvAlgebra constant_algebra(GroupoidPtr g, int zn, long long limit = 4096) {
  return ConvAlgebra(constant_sheaf(std::move(g), make_ring(FiniteRing::zn(zn))),
                     limit);
}

}  // namespace

TEST_CASE("group ring square over the constant sheaf") {
  auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  auto alg = constant_algebra(g, 4);
  ConvAlgebra::Elem f = {1, 1};
  CHECK(alg.convolve(f, f) == ConvAlgebra::Elem{2, 2});
  CHECK(alg.convolve(f, alg.zero()) == alg.zero());
}

TEST_CASE("units-only groupoids convolve pointwise") {
  auto g = make_groupoid(FiniteGroupoid::units_groupoid(3));
  auto alg = constant_algebra(g, 4);
  ConvAlgebra::Elem f = {1, 2, 3}, h = {3, 2, 1};
  ConvAlgebra::Elem expect = {3, 0, 3};
  CHECK(alg.convolve(f, h) == expect);
}

TEST_CASE("characteristic functions multiply along bisections") {
  auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto bis = all_bisections(g);
  auto alg = constant_algebra(g, 2);
  CHECK(alg.is_zero(alg.chi({})));
  for (const auto& u : bis.elems)
    for (const auto& v : bis.elems)
      CHECK(alg.convolve(alg.chi(u), alg.chi(v)) ==
            alg.chi(bisection_product(*g, u, v)));
  // chi_U * chi_{U*} = chi over the ranges of U.
  Bisection u = {1, 2};
  auto prod = alg.convolve(alg.chi(u), alg.chi(bisection_star(*g, u)));
  CHECK(prod == alg.chi({0, 3}));
}

TEST_CASE("identity element") {
  auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto alg = constant_algebra(g, 2);
  auto one = alg.identity();
  for (int i = 0; i < alg.carrier_size(); ++i) {
    auto f = alg.decode(i);
    CHECK(alg.convolve(one, f) == f);
    CHECK(alg.convolve(f, one) == f);
  }
}

TEST_CASE("local units are directed central idempotents on the diagonal") {
  auto g = make_groupoid(FiniteGroupoid::units_groupoid(2));
  auto alg = constant_algebra(g, 3);
  auto lu = alg.local_units();
  CHECK(lu.size() == 4);
  for (const auto& u : lu) CHECK(alg.convolve(u, u) == u);
  // chi_U * chi_V = chi_{U cap V} on unit subsets.
  CHECK(alg.convolve(alg.chi({0}), alg.chi({1})) == alg.zero());
  CHECK(alg.convolve(alg.chi({0, 1}), alg.chi({1})) == alg.chi({1}));
  auto ring = alg.as_ring();
  std::vector<int> encs;
  for (const auto& u : lu) encs.push_back(alg.encode(u));
  std::sort(encs.begin(), encs.end());
  CHECK(has_local_units(ring, encs));
}

TEST_CASE("the enumerated ring validates and matches the oracle") {
  struct Case {
    GroupoidPtr g;
    int zn;
  };
  std::vector<Case> cases;
  cases.push_back({make_groupoid(FiniteGroupoid::units_groupoid(2)), 3});
  cases.push_back({make_groupoid(FiniteGroupoid::pair_groupoid(2)), 2});
  cases.push_back({make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2))), 4});
  for (auto& c : cases) {
    auto ring = FiniteRing::zn(c.zn);
    auto alg = constant_algebra(c.g, c.zn);
    auto mat = alg.as_ring();  // build validates associativity etc.
    for (int i = 0; i < mat.n; ++i)
      for (int j = 0; j < mat.n; ++j) {
        auto expect = steinberg_convolve(*c.g, ring, alg.decode(i), alg.decode(j));
        CHECK(alg.decode(mat.m(i, j)) == expect);
      }
  }
}

TEST_CASE("center equals the class functions") {
  // Commutative group ring: everything is central.
  auto zg = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  auto alg = constant_algebra(zg, 2);
  auto cen = alg.center();
  CHECK(cen.size() == 4);
  int class_count = 0;
  for (int i = 0; i < alg.carrier_size(); ++i)
    if (alg.is_class_function(alg.decode(i))) ++class_count;
  CHECK(class_count == 4);

  // The pair groupoid gives a matrix algebra: center = {0, 1}.
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto alg2 = constant_algebra(pg, 2);
  auto cen2 = alg2.center();
  CHECK(cen2.size() == 2);
  for (int i = 0; i < alg2.carrier_size(); ++i) {
    auto f = alg2.decode(i);
    bool central = std::find(cen2.begin(), cen2.end(), f) != cen2.end();
    CHECK(central == alg2.is_class_function(f));
  }
  CHECK(alg2.is_class_function(alg2.zero()));
}

TEST_CASE("spanned by sufficiently large bisection families") {
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  auto alg = constant_algebra(pg, 2);
  CHECK(alg.spans_by(all_bisections(pg).elems));
  CHECK(alg.spans_by(singleton_bisections(pg).elems));
  CHECK_THROWS_WITH_AS(alg.spans_by({Bisection{}, Bisection{0}}),
                       doctest::Contains("G1Fails"), error);
}

TEST_CASE("size guard") {
  auto pg = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  ConvAlgebra small(constant_sheaf(pg, make_ring(FiniteRing::zn(4))), 100);
  CHECK_THROWS_WITH_AS(small.as_ring(), doctest::Contains("SizeLimit"), error);
}
