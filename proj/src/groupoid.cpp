#include "gckit/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gckit {

std::string FiniteGroupoid::label(int arrow) const {
  if (arrow >= 0 && arrow < static_cast<int>(arrow_labels.size()))
    return arrow_labels[arrow];
  return "a" + std::to_string(arrow);
}

FiniteGroupoid FiniteGroupoid::build(int n_objects, std::vector<int> d,
                                     std::vector<int> r, std::vector<int> comp,
                                     std::vector<std::string> arrow_labels) {
  FiniteGroupoid g;
  g.n_objects = n_objects;
  g.n_arrows = static_cast<int>(d.size());
  g.d = std::move(d);
  g.r = std::move(r);
  g.comp = std::move(comp);
  g.arrow_labels = std::move(arrow_labels);
  int n = g.n_arrows;
  if (n_objects <= 0 || n <= 0 || static_cast<int>(g.r.size()) != n ||
      static_cast<int>(g.comp.size()) != n * n)
    fail(errc::parse_error, "groupoid tables are inconsistent");
  for (int a = 0; a < n; ++a)
    if (g.d[a] < 0 || g.d[a] >= n_objects || g.r[a] < 0 || g.r[a] >= n_objects)
      fail(errc::parse_error, "arrow endpoint out of range");

  auto axiom = [&](bool ok, const std::string& what) {
    if (!ok) fail(errc::axiom_violated, what);
  };

  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      int c = g.compose(b, a);
      if (g.d[b] != g.r[a]) {
        axiom(c == -1, "composition defined on a non-composable pair");
      } else {
        axiom(c >= 0 && c < n, "composition missing on a composable pair");
        axiom(g.d[c] == g.d[a] && g.r[c] == g.r[b],
              "composite endpoints are wrong");
      }
    }
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (g.d[c] == g.r[b] && g.d[b] == g.r[a])
          axiom(g.compose(g.compose(c, b), a) == g.compose(c, g.compose(b, a)),
                "composition is not associative");

  // Units: for each object the unique loop acting as identity on both sides.
  g.unit.assign(n_objects, -1);
  for (int u = 0; u < n; ++u) {
    if (g.d[u] != g.r[u]) continue;
    bool ident = true;
    for (int a = 0; a < n && ident; ++a) {
      if (g.r[a] == g.d[u] && g.compose(u, a) != a) ident = false;
      if (g.d[a] == g.d[u] && g.compose(a, u) != a) ident = false;
    }
    if (ident) {
      axiom(g.unit[g.d[u]] == -1, "two identity arrows at one object");
      g.unit[g.d[u]] = u;
    }
  }
  for (int x = 0; x < n_objects; ++x)
    axiom(g.unit[x] >= 0, "object without identity arrow");

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.d[b] == g.r[a] && g.r[b] == g.d[a] &&
          g.compose(b, a) == g.unit[g.d[a]] && g.compose(a, b) == g.unit[g.r[a]]) {
        g.inv[a] = b;
        break;
      }
    axiom(g.inv[a] >= 0, "arrow without inverse");
    axiom(g.d[g.inv[a]] == g.r[a] && g.r[g.inv[a]] == g.d[a],
          "inverse endpoints are wrong");
  }
  return g;
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(int points) {
  if (points <= 0) fail(errc::parse_error, "pair groupoid needs points >= 1");
  int n = points * points;
  auto id = [&](int i, int j) { return i * points + j; };  // arrow j -> i
  std::vector<int> d(n), r(n), comp(n * n, -1);
  std::vector<std::string> labels(n);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) {
      d[id(i, j)] = j;
      r[id(i, j)] = i;
      labels[id(i, j)] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j)
      for (int k = 0; k < points; ++k)
        comp[id(i, j) * n + id(j, k)] = id(i, k);
  return build(points, std::move(d), std::move(r), std::move(comp),
               std::move(labels));
}

FiniteGroupoid FiniteGroupoid::group_groupoid(const InverseSemigroup& group) {
  if (!group.is_group())
    fail(errc::parse_error, "group groupoid needs a group (single idempotent)");
  int n = group.n;
  std::vector<int> d(n, 0), r(n, 0), comp(n * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = group.label(a);
    for (int b = 0; b < n; ++b) comp[a * n + b] = group.at(a, b);
  }
  return build(1, std::move(d), std::move(r), std::move(comp), std::move(labels));
}

FiniteGroupoid FiniteGroupoid::units_groupoid(int points) {
  if (points <= 0) fail(errc::parse_error, "units groupoid needs points >= 1");
  std::vector<int> d(points), r(points), comp(points * points, -1);
  std::vector<std::string> labels(points);
  for (int i = 0; i < points; ++i) {
    d[i] = r[i] = i;
    comp[i * points + i] = i;
    labels[i] = "x" + std::to_string(i);
  }
  return build(points, std::move(d), std::move(r), std::move(comp),
               std::move(labels));
}

GroupoidPtr make_groupoid(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

bool is_bisection(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<char> sd(g.n_objects, 0), sr(g.n_objects, 0);
  int prev = -1;
  for (int a : b) {
    if (a < 0 || a >= g.n_arrows || a <= prev) return false;  // sorted, unique
    prev = a;
    if (sd[g.d[a]] || sr[g.r[a]]) return false;
    sd[g.d[a]] = 1;
    sr[g.r[a]] = 1;
  }
  return true;
}

Bisection bisection_product(const FiniteGroupoid& g, const Bisection& lhs,
                            const Bisection& rhs) {
  Bisection out;
  for (int b : lhs)
    for (int c : rhs)
      if (g.d[b] == g.r[c]) out.push_back(g.compose(b, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  check(is_bisection(g, out), "product of bisections is a bisection");
  return out;
}

Bisection bisection_star(const FiniteGroupoid& g, const Bisection& b) {
  Bisection out;
  for (int a : b) out.push_back(g.inv[a]);
  std::sort(out.begin(), out.end());
  check(is_bisection(g, out), "inverse of a bisection is a bisection");
  return out;
}

std::vector<int> bisection_sources(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<int> out;
  for (int a : b) out.push_back(g.d[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bisection_ranges(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<int> out;
  for (int a : b) out.push_back(g.r[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string bisection_label(const FiniteGroupoid& g, const Bisection& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += g.label(b[i]);
  }
  return out + "}";
}

int BisectionSemigroup::index_of(const Bisection& b) const {
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (elems[i] == b) return i;
  fail(errc::parse_error, "bisection is not an element of the semigroup");
}

std::optional<int> BisectionSemigroup::unit_space_index() const {
  Bisection all_units;
  for (int x = 0; x < base->n_objects; ++x) all_units.push_back(base->unit[x]);
  std::sort(all_units.begin(), all_units.end());
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (elems[i] == all_units) return i;
  return std::nullopt;
}

namespace {

BisectionSemigroup semigroup_from(GroupoidPtr g, std::vector<Bisection> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  int m = static_cast<int>(elems.size());
  auto idx = [&](const Bisection& b) {
    auto it = std::lower_bound(elems.begin(), elems.end(), b);
    if (it == elems.end() || *it != b)
      fail(errc::not_subsemigroup, "family is not closed under products/star",
           bisection_label(*g, b));
    return static_cast<int>(it - elems.begin());
  };
  std::vector<int> mul(m * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = bisection_label(*g, elems[i]);
    for (int j = 0; j < m; ++j)
      mul[i * m + j] = idx(bisection_product(*g, elems[i], elems[j]));
  }
  for (int i = 0; i < m; ++i) idx(bisection_star(*g, elems[i]));
  BisectionSemigroup out;
  out.base = std::move(g);
  out.sg = InverseSemigroup::build(m, std::move(mul), std::move(labels));
  out.elems = std::move(elems);
  // The semigroup star must be the elementwise arrow inverse.
  for (int i = 0; i < m; ++i)
    check(out.elems[out.sg.star[i]] == bisection_star(*out.base, out.elems[i]),
          "pseudo-inverse of a bisection is its pointwise inverse");
  return out;
}

}  // namespace

BisectionSemigroup all_bisections(GroupoidPtr g, int max_arrows) {
  if (g->n_arrows > max_arrows)
    fail(errc::size_limit, "all_bisections guarded at " +
                               std::to_string(max_arrows) + " arrows");
  std::vector<Bisection> elems;
  for (unsigned mask = 0; mask < (1u << g->n_arrows); ++mask) {
    Bisection b;
    for (int a = 0; a < g->n_arrows; ++a)
      if (mask & (1u << a)) b.push_back(a);
    if (is_bisection(*g, b)) elems.push_back(std::move(b));
  }
  return semigroup_from(std::move(g), std::move(elems));
}

BisectionSemigroup closure_semigroup(GroupoidPtr g, std::vector<Bisection> gens) {
  std::set<Bisection> in;
  for (auto& b : gens) {
    if (!is_bisection(*g, b))
      fail(errc::not_a_bisection, bisection_label(*g, b));
    in.insert(b);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bisection> cur(in.begin(), in.end());
    for (const auto& x : cur) {
      if (in.insert(bisection_star(*g, x)).second) grew = true;
      for (const auto& y : cur)
        if (in.insert(bisection_product(*g, x, y)).second) grew = true;
    }
  }
  return semigroup_from(std::move(g), std::vector<Bisection>(in.begin(), in.end()));
}

BisectionSemigroup singleton_bisections(GroupoidPtr g) {
  std::vector<Bisection> gens;
  for (int a = 0; a < g->n_arrows; ++a) gens.push_back({a});
  return closure_semigroup(std::move(g), std::move(gens));
}

GermConditions germ_conditions(const FiniteGroupoid& g,
                               const std::vector<Bisection>& sub) {
  std::set<Bisection> in(sub.begin(), sub.end());
  for (const auto& x : sub) {
    if (!is_bisection(g, x)) fail(errc::not_a_bisection, bisection_label(g, x));
    if (!in.count(bisection_star(g, x)))
      fail(errc::not_subsemigroup, "family not closed under star");
    for (const auto& y : sub)
      if (!in.count(bisection_product(g, x, y)))
        fail(errc::not_subsemigroup, "family not closed under products");
  }
  GermConditions out;
  std::vector<char> covered(g.n_arrows, 0);
  for (const auto& x : sub)
    for (int a : x) covered[a] = 1;
  out.g1 = std::all_of(covered.begin(), covered.end(), [](char c) { return c; });

  out.g2 = true;
  for (const auto& u : sub)
    for (const auto& v : sub) {
      Bisection inter;
      std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                            std::back_inserter(inter));
      for (int a : inter) {
        bool found = false;
        for (const auto& w : sub) {
          if (std::find(w.begin(), w.end(), a) == w.end()) continue;
          if (std::includes(inter.begin(), inter.end(), w.begin(), w.end())) {
            found = true;
            break;
          }
        }
        if (!found) out.g2 = false;
      }
    }
  return out;
}

std::vector<int> BooleanAction::dom(int s) const {
  std::vector<int> out;
  for (int x = 0; x < n_points; ++x)
    if (rho[s][x] >= 0) out.push_back(x);
  return out;
}

std::vector<int> BooleanAction::range(int s) const {
  std::vector<int> out;
  for (int x = 0; x < n_points; ++x)
    if (rho[s][x] >= 0) out.push_back(rho[s][x]);
  std::sort(out.begin(), out.end());
  return out;
}

void BooleanAction::validate() const {
  if (!S || static_cast<int>(rho.size()) != S->n)
    fail(errc::parse_error, "action table size mismatch");
  for (int s = 0; s < S->n; ++s) {
    if (static_cast<int>(rho[s].size()) != n_points)
      fail(errc::parse_error, "action row size mismatch");
    std::vector<char> hit(n_points, 0);
    for (int x = 0; x < n_points; ++x) {
      int y = rho[s][x];
      if (y < -1 || y >= n_points)
        fail(errc::parse_error, "action image out of range");
      if (y >= 0) {
        if (hit[y]) fail(errc::parse_error, "rho_s is not injective");
        hit[y] = 1;
      }
    }
  }
  // Homomorphism into I_X: rho_{st} = rho_s . rho_t as partial maps.
  for (int s = 0; s < S->n; ++s)
    for (int t = 0; t < S->n; ++t) {
      int st = S->at(s, t);
      for (int x = 0; x < n_points; ++x) {
        int throu = rho[t][x] >= 0 ? rho[s][rho[t][x]] : -1;
        if (throu != rho[st][x])
          fail(errc::parse_error, "rho is not a semigroup homomorphism");
      }
    }
  // rho_{s*} must invert rho_s.
  for (int s = 0; s < S->n; ++s)
    for (int x = 0; x < n_points; ++x)
      if (rho[s][x] >= 0 && rho[S->star[s]][rho[s][x]] != x)
        fail(errc::parse_error, "rho_{s*} does not invert rho_s");
  // Non-degeneracy: X covered by idempotent domains.
  std::vector<char> covered(n_points, 0);
  for (int e : S->idempotents)
    for (int x = 0; x < n_points; ++x)
      if (rho[e][x] >= 0) {
        if (rho[e][x] != x)
          fail(errc::parse_error, "rho_e must be a partial identity");
        covered[x] = 1;
      }
  for (int x = 0; x < n_points; ++x)
    if (!covered[x])
      fail(errc::degenerate_action,
           "point " + std::to_string(x) + " not in any idempotent domain");
}

BooleanAction rho_from_bisections(const BisectionSemigroup& s) {
  BooleanAction act;
  act.S = std::make_shared<const InverseSemigroup>(s.sg);
  act.n_points = s.base->n_objects;
  act.rho.assign(s.sg.n, std::vector<int>(act.n_points, -1));
  for (int i = 0; i < s.sg.n; ++i)
    for (int a : s.elems[i]) act.rho[i][s.base->d[a]] = s.base->r[a];
  act.validate();
  return act;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GermGroupoid groupoid_of_germs(const BooleanAction& act) {
  act.validate();
  const InverseSemigroup& S = *act.S;
  int np = act.n_points;

  auto pid = [&](int s, int x) { return s * np + x; };
  std::vector<int> pair_alive(S.n * np, 0);
  for (int s = 0; s < S.n; ++s)
    for (int x = 0; x < np; ++x) pair_alive[pid(s, x)] = act.rho[s][x] >= 0;

  // (s,x) ~ (t,x) iff some u <= s,t has x in D_{u*}.
  UnionFind uf(S.n * np);
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t)
      for (int u = 0; u < S.n; ++u) {
        if (!S.leq(u, s) || !S.leq(u, t)) continue;
        for (int x = 0; x < np; ++x)
          if (act.rho[u][x] >= 0) {
            check(pair_alive[pid(s, x)] && pair_alive[pid(t, x)],
                  "domains grow along the natural order");
            uf.unite(pid(s, x), pid(t, x));
          }
      }

  std::map<int, int> arrow_of_root;
  std::vector<std::pair<int, int>> witness;
  std::vector<int> d, r;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> germ(S.n, std::vector<int>(np, -1));
  for (int s = 0; s < S.n; ++s)
    for (int x = 0; x < np; ++x) {
      if (!pair_alive[pid(s, x)]) continue;
      int root = uf.find(pid(s, x));
      auto it = arrow_of_root.find(root);
      int arrow;
      if (it == arrow_of_root.end()) {
        arrow = static_cast<int>(witness.size());
        arrow_of_root.emplace(root, arrow);
        witness.emplace_back(s, x);
        d.push_back(x);
        r.push_back(act.rho[s][x]);
        labels.push_back("[" + S.label(s) + "," + std::to_string(x) + "]");
      } else {
        arrow = it->second;
        // d and r are class invariants.
        check(d[arrow] == x && r[arrow] == act.rho[s][x],
              "equivalent germs share source and range");
      }
      germ[s][x] = arrow;
    }

  int n = static_cast<int>(witness.size());
  std::vector<int> comp(n * n, -1);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (d[b] != r[a]) continue;
      auto [s, y] = witness[b];
      auto [t, x] = witness[a];
      check(y == act.rho[t][x], "witnesses compose at matching points");
      int st = S.at(s, t);
      check(germ[st][x] >= 0, "composite germ exists");
      comp[b * n + a] = germ[st][x];
    }
  // Composites are independent of the representatives.
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (comp[b * n + a] < 0) continue;
      for (int s = 0; s < S.n; ++s)
        for (int t = 0; t < S.n; ++t) {
          int x = d[a];
          if (germ[t][x] != a) continue;
          int y = act.rho[t][x];
          if (germ[s][y] != b) continue;
          check(germ[S.at(s, t)][x] == comp[b * n + a],
                "germ composition is representative independent");
        }
    }

  GermGroupoid out;
  out.gpd = make_groupoid(
      FiniteGroupoid::build(np, std::move(d), std::move(r), std::move(comp),
                            std::move(labels)));
  out.germ_of = std::move(germ);
  out.witness = std::move(witness);

  // [s,x]^{-1} = [s*, rho_s(x)].
  for (int s = 0; s < S.n; ++s)
    for (int x = 0; x < np; ++x)
      if (out.germ_of[s][x] >= 0)
        check(out.gpd->inv[out.germ_of[s][x]] ==
                  out.germ_of[S.star[s]][act.rho[s][x]],
              "germ inverse formula");

  // S~ = { U(s) }: U(s)U(t) = U(st) and the germ conditions hold.
  std::vector<Bisection> u(S.n);
  for (int s = 0; s < S.n; ++s) {
    for (int x = 0; x < np; ++x)
      if (out.germ_of[s][x] >= 0) u[s].push_back(out.germ_of[s][x]);
    std::sort(u[s].begin(), u[s].end());
    check(is_bisection(*out.gpd, u[s]), "U(s) is a bisection");
  }
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t)
      check(bisection_product(*out.gpd, u[s], u[t]) == u[S.at(s, t)],
            "U(s)U(t) = U(st)");
  out.u_semigroup = semigroup_from(out.gpd, u);
  out.u_of.resize(S.n);
  for (int s = 0; s < S.n; ++s) out.u_of[s] = out.u_semigroup.index_of(u[s]);
  GermConditions gc = germ_conditions(*out.gpd, out.u_semigroup.elems);
  check(gc.g1 && gc.g2, "S~ satisfies the germ conditions");
  return out;
}

namespace {

bool match_arrows(const FiniteGroupoid& a, const FiniteGroupoid& b,
                  const std::vector<int>& obj_map, std::vector<int>& arrow_map,
                  std::vector<char>& used, int next) {
  if (next == a.n_arrows) {
    for (int x = 0; x < a.n_arrows; ++x)
      for (int y = 0; y < a.n_arrows; ++y) {
        int c = a.compose(x, y);
        int cb = b.compose(arrow_map[x], arrow_map[y]);
        if ((c < 0) != (cb < 0)) return false;
        if (c >= 0 && arrow_map[c] != cb) return false;
      }
    return true;
  }
  for (int t = 0; t < b.n_arrows; ++t) {
    if (used[t]) continue;
    if (b.d[t] != obj_map[a.d[next]] || b.r[t] != obj_map[a.r[next]]) continue;
    bool ok = true;
    arrow_map[next] = t;
    used[t] = 1;
    // partial composition consistency
    for (int x = 0; x <= next && ok; ++x) {
      int c1 = a.compose(next, x), c2 = a.compose(x, next);
      if (c1 >= 0 && c1 <= next) {
        int cb = b.compose(t, arrow_map[x]);
        if (cb < 0 || arrow_map[c1] != cb) ok = false;
      }
      if (ok && c2 >= 0 && c2 <= next) {
        int cb = b.compose(arrow_map[x], t);
        if (cb < 0 || arrow_map[c2] != cb) ok = false;
      }
    }
    if (ok && match_arrows(a, b, obj_map, arrow_map, used, next + 1)) return true;
    used[t] = 0;
    arrow_map[next] = -1;
  }
  return false;
}

}  // namespace

bool groupoids_isomorphic(const FiniteGroupoid& a, const FiniteGroupoid& b,
                          int max_arrows) {
  if (a.n_arrows > max_arrows || b.n_arrows > max_arrows)
    fail(errc::size_limit, "isomorphism search guarded at " +
                               std::to_string(max_arrows) + " arrows");
  if (a.n_objects != b.n_objects || a.n_arrows != b.n_arrows) return false;
  std::vector<int> perm(a.n_objects);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> arrow_map(a.n_arrows, -1);
    std::vector<char> used(b.n_arrows, 0);
    if (match_arrows(a, b, perm, arrow_map, used, 0)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gckit
