#include "doctest.h"
#include "gckit/finsem.hpp"

#include <numeric>

using namespace gckit;

namespace {

// Independent count of partial bijections: sum over k of C(n,k)^2 k!.
long long partial_bijection_count(int n) {
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long long total = 0;
  for (int k = 0; k <= n; ++k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    total += binom(n, k) * binom(n, k) * f;
  }
  return total;
}

}  // namespace

TEST_CASE("trivial semigroup") {
  auto s = InverseSemigroup::build(1, {0});
  CHECK(s.star[0] == 0);
  CHECK(s.idempotents == std::vector<int>{0});
}

TEST_CASE("groups are inverse semigroups with star the inverse") {
  auto z2 = cyclic_group(2);
  CHECK(z2.star == std::vector<int>{0, 1});
  CHECK(z2.idempotents == std::vector<int>{0});
  auto z3 = cyclic_group(3);
  CHECK(z3.star == std::vector<int>{0, 2, 1});
  for (int s = 0; s < z3.n; ++s)
    for (int t = 0; t < z3.n; ++t) CHECK(z3.leq(s, t) == (s == t));
}

TEST_CASE("rejects a non-associative table") {
  CHECK_THROWS_WITH_AS(InverseSemigroup::build(2, {1, 1, 0, 0}),
                       doctest::Contains("NotAssociative"), error);
}

TEST_CASE("rejects a left-zero semigroup (no unique pseudo-inverse)") {
  // mul(x,y) = x is associative but every element pseudo-inverts everything.
  CHECK_THROWS_WITH_AS(InverseSemigroup::build(2, {0, 0, 1, 1}),
                       doctest::Contains("NoUniquePseudoInverse"), error);
}

TEST_CASE("symmetric inverse monoid sizes against the counting oracle") {
  CHECK(symmetric_inverse_monoid(0).sg.n == 1);
  CHECK(symmetric_inverse_monoid(1).sg.n == 2);
  CHECK(symmetric_inverse_monoid(2).sg.n == partial_bijection_count(2));
  CHECK(partial_bijection_count(2) == 7);
  CHECK(symmetric_inverse_monoid(3).sg.n == partial_bijection_count(3));
  CHECK(partial_bijection_count(3) == 34);
  CHECK_THROWS_AS(symmetric_inverse_monoid(5), error);
}

TEST_CASE("I_2 idempotents and natural order") {
  auto i2 = symmetric_inverse_monoid(2);
  CHECK(i2.sg.idempotents.size() == 4);

  int empty = i2.index_of({-1, -1});
  int id1 = i2.index_of({-1, 1});
  int full = i2.index_of({0, 1});
  for (int t = 0; t < i2.sg.n; ++t) CHECK(i2.sg.leq(empty, t));
  CHECK(i2.sg.leq(id1, full));
  CHECK_FALSE(i2.sg.leq(full, id1));
}

TEST_CASE("star reverses products and idempotents commute") {
  for (int n : {2, 3}) {
    auto in = symmetric_inverse_monoid(n).sg;
    for (int s = 0; s < in.n; ++s)
      for (int t = 0; t < in.n; ++t)
        CHECK(in.star[in.at(s, t)] == in.at(in.star[t], in.star[s]));
    for (int e : in.idempotents)
      for (int f : in.idempotents) CHECK(in.at(e, f) == in.at(f, e));
  }
}

TEST_CASE("natural order is compatible with multiplication") {
  auto i2 = symmetric_inverse_monoid(2).sg;
  for (int s = 0; s < i2.n; ++s)
    for (int t = 0; t < i2.n; ++t) {
      if (!i2.leq(s, t)) continue;
      for (int u = 0; u < i2.n; ++u)
        for (int v = 0; v < i2.n; ++v)
          if (i2.leq(u, v)) CHECK(i2.leq(i2.at(s, u), i2.at(t, v)));
    }
}

TEST_CASE("homomorphism checking") {
  auto i2 = symmetric_inverse_monoid(2);
  std::vector<int> ident(i2.sg.n);
  std::iota(ident.begin(), ident.end(), 0);
  CHECK(is_homomorphism(ident, i2.sg, i2.sg));

  // Constant map onto a non-idempotent.
  int shift = i2.index_of({1, -1});
  CHECK_FALSE(i2.sg.idempotent(shift));
  std::vector<int> constant(i2.sg.n, shift);
  CHECK_FALSE(is_homomorphism(constant, i2.sg, i2.sg));

  // Non-empty -> top, empty -> bottom over the 2-chain: fails because the
  // product of two rank-1 maps can be empty.
  auto chain = chain_semilattice(2);  // 0 = top, 1 = bottom
  int empty = i2.index_of({-1, -1});
  std::vector<int> nonempty_map(i2.sg.n, 0);
  nonempty_map[empty] = 1;
  CHECK_FALSE(is_homomorphism(nonempty_map, i2.sg, chain));
}
