#include "gckit/finring.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gckit {

bool FiniteRing::is_central(int e) const {
  for (int x = 0; x < n; ++x)
    if (m(e, x) != m(x, e)) return false;
  return true;
}

bool FiniteRing::commutative() const {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m(x, y) != m(y, x)) return false;
  return true;
}

std::string FiniteRing::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size())) return labels[x];
  return std::to_string(x);
}

FiniteRing FiniteRing::build(int n, std::vector<int> add, std::vector<int> mul,
                             int zero, std::optional<int> one,
                             std::vector<std::string> labels, long long limit) {
  if (n <= 0) fail(errc::parse_error, "ring carrier must be non-empty");
  if (n > limit)
    fail(errc::size_limit,
         "ring carrier " + std::to_string(n) + " exceeds limit " +
             std::to_string(limit));
  if (static_cast<int>(add.size()) != n * n ||
      static_cast<int>(mul.size()) != n * n)
    fail(errc::parse_error, "ring tables must be n*n");
  auto in_range = [&](const std::vector<int>& t) {
    for (int v : t)
      if (v < 0 || v >= n) return false;
    return true;
  };
  if (!in_range(add) || !in_range(mul) || zero < 0 || zero >= n)
    fail(errc::parse_error, "ring table entry out of range");

  FiniteRing r;
  r.n = n;
  r.add = std::move(add);
  r.mul = std::move(mul);
  r.zero = zero;
  r.one = one;
  r.labels = std::move(labels);

  auto axiom = [&](bool ok, const std::string& what, const std::string& wit) {
    if (!ok) fail(errc::axiom_violated, what, wit);
  };

  for (int x = 0; x < n; ++x) {
    axiom(r.a(x, zero) == x && r.a(zero, x) == x, "zero is not additive identity",
          std::to_string(x));
  }
  r.neg.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (r.a(x, y) == zero && r.a(y, x) == zero) {
        r.neg[x] = y;
        break;
      }
    axiom(r.neg[x] >= 0, "missing additive inverse", std::to_string(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      axiom(r.a(x, y) == r.a(y, x), "addition is not commutative",
            std::to_string(x) + "," + std::to_string(y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        axiom(r.a(r.a(x, y), z) == r.a(x, r.a(y, z)),
              "addition is not associative",
              std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
        axiom(r.m(r.m(x, y), z) == r.m(x, r.m(y, z)),
              "multiplication is not associative",
              std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
        axiom(r.m(x, r.a(y, z)) == r.a(r.m(x, y), r.m(x, z)),
              "left distributivity fails",
              std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
        axiom(r.m(r.a(x, y), z) == r.a(r.m(x, z), r.m(y, z)),
              "right distributivity fails",
              std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
      }
  if (one) {
    axiom(*one >= 0 && *one < n, "unit out of range", std::to_string(*one));
    for (int x = 0; x < n; ++x)
      axiom(r.m(*one, x) == x && r.m(x, *one) == x,
            "claimed unit is not a two-sided identity", std::to_string(x));
  }
  return r;
}

RingPtr make_ring(FiniteRing r) {
  return std::make_shared<const FiniteRing>(std::move(r));
}

FiniteRing FiniteRing::zn(int n, long long limit) {
  if (n <= 0) fail(errc::parse_error, "Z_n needs n >= 1");
  std::vector<int> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = (i + j) % n;
      mul[i * n + j] = (i * j) % n;
    }
  }
  std::optional<int> one;
  if (n > 1) one = 1;
  else one = 0;  // zero ring: 0 = 1
  return build(n, std::move(add), std::move(mul), 0, one, std::move(labels), limit);
}

FiniteRing FiniteRing::product(const FiniteRing& lhs, const FiniteRing& rhs,
                               long long limit) {
  long long n = static_cast<long long>(lhs.n) * rhs.n;
  if (n > limit) fail(errc::size_limit, "product ring exceeds carrier limit");
  int nn = static_cast<int>(n);
  auto pack = [&](int x, int y) { return x * rhs.n + y; };
  std::vector<int> add(nn * nn), mul(nn * nn);
  std::vector<std::string> labels(nn);
  for (int x1 = 0; x1 < lhs.n; ++x1)
    for (int y1 = 0; y1 < rhs.n; ++y1) {
      int i = pack(x1, y1);
      labels[i] = "(" + lhs.label(x1) + "," + rhs.label(y1) + ")";
      for (int x2 = 0; x2 < lhs.n; ++x2)
        for (int y2 = 0; y2 < rhs.n; ++y2) {
          int j = pack(x2, y2);
          add[i * nn + j] = pack(lhs.a(x1, x2), rhs.a(y1, y2));
          mul[i * nn + j] = pack(lhs.m(x1, x2), rhs.m(y1, y2));
        }
    }
  std::optional<int> one;
  if (lhs.one && rhs.one) one = pack(*lhs.one, *rhs.one);
  return build(nn, std::move(add), std::move(mul), pack(lhs.zero, rhs.zero), one,
               std::move(labels), limit);
}

FiniteRing FiniteRing::matrix_ring(int p, int dim, bool upper_triangular,
                                   long long limit) {
  if (p < 2 || p > 3 || dim < 1 || dim > 2)
    fail(errc::size_limit, "matrix rings guarded at p <= 3, dim <= 2");
  // Entry layout: row-major, upper-triangular stores (0,0),(0,1),(1,1).
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!upper_triangular || j >= i) slots.emplace_back(i, j);
  int k = static_cast<int>(slots.size());
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;

  auto decode = [&](int idx) {
    std::vector<std::vector<int>> mat(dim, std::vector<int>(dim, 0));
    for (int s = 0; s < k; ++s) {
      mat[slots[s].first][slots[s].second] = idx % p;
      idx /= p;
    }
    return mat;
  };
  auto encode = [&](const std::vector<std::vector<int>>& mat) {
    int idx = 0;
    for (int s = k - 1; s >= 0; --s)
      idx = idx * p + mat[slots[s].first][slots[s].second];
    return idx;
  };

  std::vector<int> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    auto mi = decode(i);
    std::string lab = "[";
    for (int rr = 0; rr < dim; ++rr) {
      for (int cc = 0; cc < dim; ++cc) lab += std::to_string(mi[rr][cc]);
      if (rr + 1 < dim) lab += ";";
    }
    lab += "]";
    labels[i] = lab;
    for (int j = 0; j < n; ++j) {
      auto mj = decode(j);
      std::vector<std::vector<int>> s(dim, std::vector<int>(dim, 0));
      std::vector<std::vector<int>> pr(dim, std::vector<int>(dim, 0));
      for (int rr = 0; rr < dim; ++rr)
        for (int cc = 0; cc < dim; ++cc) {
          s[rr][cc] = (mi[rr][cc] + mj[rr][cc]) % p;
          int acc = 0;
          for (int t = 0; t < dim; ++t) acc += mi[rr][t] * mj[t][cc];
          pr[rr][cc] = acc % p;
        }
      add[i * n + j] = encode(s);
      mul[i * n + j] = encode(pr);
    }
  }
  std::vector<std::vector<int>> id(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < dim; ++i) id[i][i] = 1;
  return build(n, std::move(add), std::move(mul), 0, encode(id),
               std::move(labels), limit);
}

FiniteRing FiniteRing::function_ring(int xsize, const FiniteRing& r,
                                     long long limit) {
  if (xsize <= 0) fail(errc::parse_error, "function ring needs |X| >= 1");
  FiniteRing out = r;
  for (int i = 1; i < xsize; ++i) out = product(out, r, limit);
  return out;
}

std::vector<int> central_idempotents(const FiniteRing& r) {
  std::vector<int> out;
  for (int e = 0; e < r.n; ++e)
    if (r.is_idempotent(e) && r.is_central(e)) out.push_back(e);
  return out;
}

std::vector<int> additive_closure(const FiniteRing& r, std::vector<int> gens) {
  std::vector<char> in(r.n, 0);
  in[r.zero] = 1;
  for (int g : gens) {
    if (g < 0 || g >= r.n) fail(errc::parse_error, "generator out of range");
    in[g] = 1;
    in[r.neg[g]] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < r.n; ++x)
      if (in[x])
        for (int y = 0; y < r.n; ++y)
          if (in[y] && !in[r.a(x, y)]) {
            in[r.a(x, y)] = 1;
            grew = true;
          }
  }
  std::vector<int> members;
  for (int x = 0; x < r.n; ++x)
    if (in[x]) members.push_back(x);
  return members;
}

bool is_ideal(const FiniteRing& r, const std::vector<int>& members) {
  std::vector<char> in(r.n, 0);
  for (int x : members) {
    if (x < 0 || x >= r.n) return false;
    in[x] = 1;
  }
  if (!in[r.zero]) return false;
  for (int x : members) {
    if (!in[r.neg[x]]) return false;
    for (int y : members)
      if (!in[r.a(x, y)]) return false;
    for (int y = 0; y < r.n; ++y)
      if (!in[r.m(x, y)] || !in[r.m(y, x)]) return false;
  }
  return true;
}

bool is_ring_hom(const RingHom& h) {
  if (!h.src || !h.dst) return false;
  if (static_cast<int>(h.map.size()) != h.src->n) return false;
  for (int v : h.map)
    if (v < 0 || v >= h.dst->n) return false;
  for (int x = 0; x < h.src->n; ++x)
    for (int y = 0; y < h.src->n; ++y) {
      if (h.map[h.src->a(x, y)] != h.dst->a(h.map[x], h.map[y])) return false;
      if (h.map[h.src->m(x, y)] != h.dst->m(h.map[x], h.map[y])) return false;
    }
  return true;
}

bool is_isomorphism(const RingHom& h) {
  if (!is_ring_hom(h)) return false;
  if (h.src->n != h.dst->n) return false;
  std::vector<char> hit(h.dst->n, 0);
  for (int v : h.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

QuotientRing quotient_ring(RingPtr r, const std::vector<int>& ideal_members) {
  if (!is_ideal(*r, ideal_members))
    fail(errc::not_an_ideal, "quotient requires a two-sided ideal");

  // Coset representative: lowest-index element of x + I.
  std::vector<int> rep_of(r->n, -1);
  for (int x = 0; x < r->n; ++x) {
    int best = x;
    for (int i : ideal_members) best = std::min(best, r->a(x, i));
    rep_of[x] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < r->n; ++x)
    if (rep_of[x] == x) reps.push_back(x);
  int m = static_cast<int>(reps.size());
  std::vector<int> index_of(r->n, -1);
  for (int i = 0; i < m; ++i) index_of[reps[i]] = i;

  std::vector<int> add(m * m), mul(m * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "[" + r->label(reps[i]) + "]";
    for (int j = 0; j < m; ++j) {
      add[i * m + j] = index_of[rep_of[r->a(reps[i], reps[j])]];
      mul[i * m + j] = index_of[rep_of[r->m(reps[i], reps[j])]];
    }
  }
  std::optional<int> one;
  if (r->one) one = index_of[rep_of[*r->one]];
  // The quotient of a unital ring is unital; a non-unital parent can still
  // have a unital quotient, so look for one.
  QuotientRing q;
  FiniteRing ring = FiniteRing::build(m, std::move(add), std::move(mul),
                                      index_of[rep_of[r->zero]], one,
                                      std::move(labels), r->n);
  if (!ring.one) {
    for (int u = 0; u < m; ++u) {
      bool ok = true;
      for (int x = 0; x < m && ok; ++x)
        if (ring.m(u, x) != x || ring.m(x, u) != x) ok = false;
      if (ok) {
        ring.one = u;
        break;
      }
    }
  }
  q.ring = make_ring(std::move(ring));
  std::vector<int> proj(r->n);
  for (int x = 0; x < r->n; ++x) proj[x] = index_of[rep_of[x]];
  q.projection = RingHom{r, q.ring, std::move(proj)};
  q.rep = std::move(reps);
  check(is_ring_hom(q.projection), "quotient projection is a ring hom");
  return q;
}

std::vector<int> corner(const FiniteRing& r, int e) {
  std::vector<char> in(r.n, 0);
  for (int x = 0; x < r.n; ++x) in[r.m(r.m(e, x), e)] = 1;
  std::vector<int> out;
  for (int x = 0; x < r.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool has_local_units(const FiniteRing& r, const std::vector<int>& e_set) {
  for (int e : e_set)
    if (!r.is_idempotent(e)) return false;
  std::vector<std::vector<int>> corners;
  corners.reserve(e_set.size());
  std::vector<char> covered(r.n, 0);
  for (int e : e_set) {
    corners.push_back(corner(r, e));
    for (int x : corners.back()) covered[x] = 1;
  }
  for (int x = 0; x < r.n; ++x)
    if (!covered[x]) return false;
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t i = 0; i < e_set.size(); ++i)
    for (std::size_t j = 0; j < e_set.size(); ++j) {
      bool ok = false;
      for (std::size_t k = 0; k < e_set.size() && !ok; ++k)
        if (subset(corners[i], corners[k]) && subset(corners[j], corners[k]))
          ok = true;
      if (!ok) return false;
    }
  return true;
}

namespace {

// Assign images in index order; reject as soon as an already-determined
// add/mul pair disagrees.
void hom_search(const FiniteRing& src, const FiniteRing& dst,
                std::vector<int>& img, int pos,
                std::vector<std::vector<int>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (pos == src.n) {
    out.push_back(img);
    return;
  }
  for (int v = 0; v < dst.n; ++v) {
    img[pos] = v;
    bool ok = true;
    for (int x = 0; x <= pos && ok; ++x) {
      int s1 = src.a(x, pos), s2 = src.a(pos, x);
      int m1 = src.m(x, pos), m2 = src.m(pos, x);
      if (s1 <= pos && img[s1] != dst.a(img[x], v)) ok = false;
      if (ok && s2 <= pos && img[s2] != dst.a(v, img[x])) ok = false;
      if (ok && m1 <= pos && img[m1] != dst.m(img[x], v)) ok = false;
      if (ok && m2 <= pos && img[m2] != dst.m(v, img[x])) ok = false;
    }
    if (ok) hom_search(src, dst, img, pos + 1, out, limit);
  }
  img[pos] = -1;
}

}  // namespace

std::vector<std::vector<int>> enumerate_ring_homs(const FiniteRing& src,
                                                  const FiniteRing& dst,
                                                  std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(src.n, -1);
  hom_search(src, dst, img, 0, out, limit);
  // The search fixes images left to right, so partial constraints referencing
  // later indices were skipped; re-filter with the full predicate.
  std::vector<std::vector<int>> checked;
  for (auto& cand : out) {
    bool ok = true;
    for (int x = 0; x < src.n && ok; ++x)
      for (int y = 0; y < src.n && ok; ++y) {
        if (cand[src.a(x, y)] != dst.a(cand[x], cand[y])) ok = false;
        if (ok && cand[src.m(x, y)] != dst.m(cand[x], cand[y])) ok = false;
      }
    if (ok) checked.push_back(std::move(cand));
  }
  return checked;
}

}  // namespace gckit
