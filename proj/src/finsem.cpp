#include "gckit/finsem.hpp"

#include <algorithm>

namespace gckit {

namespace {

std::string witness3(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

bool InverseSemigroup::leq(int s, int t) const {
  bool left = at(at(s, star[s]), t) == s;
  bool right = at(t, at(star[s], s)) == s;
  check(left == right, "natural order: ss*t = s must agree with ts*s = s");
  return left;
}

std::string InverseSemigroup::label(int s) const {
  if (s >= 0 && s < static_cast<int>(labels.size())) return labels[s];
  return std::to_string(s);
}

InverseSemigroup InverseSemigroup::build(int n, std::vector<int> mul,
                                         std::vector<std::string> labels) {
  if (n <= 0 || static_cast<int>(mul.size()) != n * n)
    fail(errc::parse_error, "multiplication table must be n*n with n >= 1");
  for (int v : mul)
    if (v < 0 || v >= n)
      fail(errc::parse_error, "table entry out of range");

  InverseSemigroup s;
  s.n = n;
  s.mul = std::move(mul);
  s.labels = std::move(labels);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c)))
          fail(errc::not_associative, "product is not associative at " + witness3(a, b, c),
               witness3(a, b, c));

  s.star.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    int count = 0;
    for (int t = 0; t < n; ++t) {
      if (s.at(s.at(a, t), a) == a && s.at(s.at(t, a), t) == t) {
        found = t;
        ++count;
      }
    }
    if (count != 1)
      fail(errc::no_unique_pseudo_inverse,
           "element " + std::to_string(a) + " has " + std::to_string(count) +
               " pseudo-inverses",
           std::to_string(a));
    s.star[a] = found;
  }

  for (int a = 0; a < n; ++a)
    if (s.idempotent(a)) s.idempotents.push_back(a);

  // Commutes by the uniqueness theorem; re-checked as a transcription guard.
  for (int e : s.idempotents)
    for (int f : s.idempotents)
      check(s.at(e, f) == s.at(f, e), "idempotents must commute");

  return s;
}

bool is_homomorphism(const std::vector<int>& map, const InverseSemigroup& src,
                     const InverseSemigroup& dst) {
  if (static_cast<int>(map.size()) != src.n)
    fail(errc::parse_error, "map must be total on the source");
  for (int v : map)
    if (v < 0 || v >= dst.n) fail(errc::parse_error, "map image out of range");

  bool direct = true;
  for (int a = 0; a < src.n && direct; ++a)
    for (int b = 0; b < src.n && direct; ++b)
      if (map[src.at(a, b)] != dst.at(map[a], map[b])) direct = false;

  // Criterion: order preserving, homomorphism on idempotents, multiplicative
  // whenever s*s = tt*.
  bool criterion = true;
  for (int e : src.idempotents)
    for (int f : src.idempotents)
      if (map[src.at(e, f)] != dst.at(map[e], map[f])) criterion = false;
  for (int a = 0; a < src.n && criterion; ++a)
    for (int b = 0; b < src.n && criterion; ++b)
      if (src.leq(a, b) && !dst.leq(map[a], map[b])) criterion = false;
  for (int a = 0; a < src.n && criterion; ++a)
    for (int b = 0; b < src.n && criterion; ++b) {
      if (src.at(src.star[a], a) == src.at(b, src.star[b]) &&
          map[src.at(a, b)] != dst.at(map[a], map[b]))
        criterion = false;
    }

  check(direct == criterion,
        "homomorphism criterion must agree with the definition");
  return direct;
}

InverseSemigroup cyclic_group(int n) {
  if (n <= 0) fail(errc::parse_error, "cyclic group order must be positive");
  std::vector<int> mul(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g" + std::to_string(i);
    for (int j = 0; j < n; ++j) mul[i * n + j] = (i + j) % n;
  }
  return InverseSemigroup::build(n, std::move(mul), std::move(labels));
}

InverseSemigroup chain_semilattice(int k) {
  if (k <= 0) fail(errc::parse_error, "chain length must be positive");
  std::vector<int> mul(k * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = "e" + std::to_string(i);
    for (int j = 0; j < k; ++j) mul[i * k + j] = std::max(i, j);
  }
  return InverseSemigroup::build(k, std::move(mul), std::move(labels));
}

int SymmetricInverseMonoid::index_of(const std::vector<int>& pmap) const {
  for (int i = 0; i < static_cast<int>(maps.size()); ++i)
    if (maps[i] == pmap) return i;
  fail(errc::parse_error, "partial map is not an element");
}

namespace {

void enumerate_partial_bijections(int n, int pos, std::vector<int>& cur,
                                  std::vector<bool>& used,
                                  std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  cur[pos] = -1;
  enumerate_partial_bijections(n, pos + 1, cur, used, out);
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    cur[pos] = v;
    used[v] = true;
    enumerate_partial_bijections(n, pos + 1, cur, used, out);
    used[v] = false;
  }
  cur[pos] = -1;
}

std::string pmap_label(const std::vector<int>& m) {
  std::string out = "[";
  bool first = true;
  for (int x = 0; x < static_cast<int>(m.size()); ++x) {
    if (m[x] < 0) continue;
    if (!first) out += " ";
    out += std::to_string(x) + ">" + std::to_string(m[x]);
    first = false;
  }
  out += "]";
  return out;
}

}  // namespace

SymmetricInverseMonoid symmetric_inverse_monoid(int n) {
  if (n < 0 || n > 4)
    fail(errc::size_limit, "symmetric inverse monoid guarded at n <= 4");

  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  std::vector<bool> used(n, false);
  enumerate_partial_bijections(n, 0, cur, used, maps);

  int m = static_cast<int>(maps.size());
  std::vector<int> mul(m * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = pmap_label(maps[i]);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> comp(n, -1);
      for (int x = 0; x < n; ++x) {
        int y = maps[j][x];
        if (y >= 0) comp[x] = maps[i][y];
      }
      int k = -1;
      for (int t = 0; t < m; ++t)
        if (maps[t] == comp) {
          k = t;
          break;
        }
      check(k >= 0, "composition of partial bijections stays in the monoid");
      mul[i * m + j] = k;
    }
  }

  SymmetricInverseMonoid out;
  out.sg = InverseSemigroup::build(m, std::move(mul), std::move(labels));
  out.maps = std::move(maps);
  return out;
}

}  // namespace gckit
