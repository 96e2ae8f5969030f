#include "gckit/boolalg.hpp"

#include <algorithm>
#include <set>

namespace gckit {

std::vector<int> GenBooleanAlgebra::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < n; ++a) {
    if (a == zero) continue;
    bool minimal = true;
    for (int x = 0; x < n && minimal; ++x)
      if (x != zero && x != a && leq(x, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

int GenBooleanAlgebra::top() const {
  int t = zero;
  for (int a = 0; a < n; ++a) t = jn(t, a);
  return t;
}

std::string GenBooleanAlgebra::label(int a) const {
  if (a >= 0 && a < static_cast<int>(labels.size())) return labels[a];
  return std::to_string(a);
}

GenBooleanAlgebra GenBooleanAlgebra::build(int n, std::vector<int> meet,
                                           std::vector<int> join,
                                           std::vector<int> relcomp, int zero,
                                           std::vector<std::string> labels) {
  if (n <= 0) fail(errc::parse_error, "algebra carrier must be non-empty");
  if (static_cast<int>(meet.size()) != n * n ||
      static_cast<int>(join.size()) != n * n ||
      static_cast<int>(relcomp.size()) != n * n)
    fail(errc::parse_error, "algebra tables must be n*n");

  GenBooleanAlgebra b;
  b.n = n;
  b.meet = std::move(meet);
  b.join = std::move(join);
  b.relcomp = std::move(relcomp);
  b.zero = zero;
  b.labels = std::move(labels);

  auto axiom = [&](bool ok, const std::string& what) {
    if (!ok) fail(errc::axiom_violated, what);
  };
  for (int x = 0; x < n; ++x) {
    axiom(b.mt(x, x) == x && b.jn(x, x) == x, "lattice idempotency fails");
    axiom(b.mt(b.zero, x) == b.zero, "zero is not bottom");
    axiom(b.jn(b.zero, x) == x, "zero is not neutral for join");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      axiom(b.mt(x, y) == b.mt(y, x) && b.jn(x, y) == b.jn(y, x),
            "lattice commutativity fails");
      axiom(b.mt(x, b.jn(x, y)) == x && b.jn(x, b.mt(x, y)) == x,
            "absorption fails");
      axiom(b.mt(b.rc(x, y), y) == b.zero, "(a\\b) meet b must be 0");
      axiom(b.jn(b.rc(x, y), b.mt(x, y)) == x, "(a\\b) join (a meet b) must be a");
      axiom(b.jn(x, y) == b.jn(b.jn(b.rc(x, y), b.rc(y, x)), b.mt(x, y)),
            "join decomposition a\\b + b\\a + ab fails");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        axiom(b.mt(b.mt(x, y), z) == b.mt(x, b.mt(y, z)) &&
                  b.jn(b.jn(x, y), z) == b.jn(x, b.jn(y, z)),
              "lattice associativity fails");
        axiom(b.mt(x, b.jn(y, z)) == b.jn(b.mt(x, y), b.mt(x, z)),
              "distributivity fails");
      }
  return b;
}

GenBooleanAlgebra GenBooleanAlgebra::free_boolean(int atoms) {
  if (atoms < 0 || atoms > 16) fail(errc::size_limit, "free algebra guarded at 16 atoms");
  int n = 1 << atoms;
  std::vector<int> meet(static_cast<std::size_t>(n) * n),
      join(static_cast<std::size_t>(n) * n), rel(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    std::string lab = "{";
    bool first = true;
    for (int i = 0; i < atoms; ++i)
      if (x & (1 << i)) {
        if (!first) lab += ",";
        lab += std::to_string(i);
        first = false;
      }
    labels[x] = lab + "}";
    for (int y = 0; y < n; ++y) {
      meet[static_cast<std::size_t>(x) * n + y] = x & y;
      join[static_cast<std::size_t>(x) * n + y] = x | y;
      rel[static_cast<std::size_t>(x) * n + y] = x & ~y;
    }
  }
  return build(n, std::move(meet), std::move(join), std::move(rel), 0,
               std::move(labels));
}

bool is_filter(const GenBooleanAlgebra& b, const Filter& f) {
  if (f.members.empty()) return false;
  std::vector<char> in(b.n, 0);
  for (int x : f.members) {
    if (x < 0 || x >= b.n || x == b.zero) return false;
    in[x] = 1;
  }
  for (int x : f.members) {
    for (int y : f.members)
      if (!in[b.mt(x, y)]) return false;
    for (int y = 0; y < b.n; ++y)
      if (b.leq(x, y) && !in[y]) return false;
  }
  return true;
}

namespace {

int filter_min(const GenBooleanAlgebra& b, const Filter& f) {
  int m = f.members.front();
  for (int x : f.members) m = b.mt(m, x);
  return m;
}

Filter up_set(const GenBooleanAlgebra& b, int a) {
  Filter f;
  for (int x = 0; x < b.n; ++x)
    if (b.leq(a, x)) f.members.push_back(x);
  return f;
}

}  // namespace

bool is_ultrafilter(const GenBooleanAlgebra& b, const Filter& f) {
  if (!is_filter(b, f)) return false;
  std::vector<char> in(b.n, 0);
  for (int x : f.members) in[x] = 1;
  bool criterion = true;
  for (int a = 0; a < b.n && criterion; ++a) {
    if (in[a]) continue;
    bool killed = false;
    for (int x : f.members)
      if (b.mt(a, x) == b.zero) {
        killed = true;
        break;
      }
    if (!killed) criterion = false;
  }
  // Maximality among all proper filters, by enumeration.
  bool maximal = true;
  for (const Filter& g : all_filters(b)) {
    if (g.members.size() <= f.members.size()) continue;
    if (std::includes(g.members.begin(), g.members.end(), f.members.begin(),
                      f.members.end()))
      maximal = false;
  }
  check(criterion == maximal,
        "ultrafilter criterion must agree with maximality");
  return criterion;
}

std::vector<Filter> all_filters(const GenBooleanAlgebra& b) {
  // A non-empty meet-closed upward-closed finite set is the up-set of its
  // minimum, so filters correspond to non-zero elements.
  std::vector<Filter> out;
  for (int a = 0; a < b.n; ++a)
    if (a != b.zero) out.push_back(up_set(b, a));
  return out;
}

Filter extend_to_ultrafilter(const GenBooleanAlgebra& b, const Filter& f, int a) {
  if (!is_filter(b, f)) fail(errc::parse_error, "not a filter");
  if (a < 0 || a >= b.n || a == b.zero)
    fail(errc::incompatible, "cannot extend by zero", b.label(a));
  for (int x : f.members)
    if (b.mt(a, x) == b.zero)
      fail(errc::incompatible,
           "a meet " + b.label(x) + " = 0 for " + b.label(x) + " in the filter",
           b.label(x));
  int m = b.mt(a, filter_min(b, f));
  check(m != b.zero, "join of compatible filter data cannot bottom out");
  int chosen = -1;
  for (int at : b.atoms())
    if (b.leq(at, m)) {
      chosen = at;
      break;
    }
  check(chosen >= 0, "finite algebra has an atom below any non-zero element");
  Filter u = up_set(b, chosen);
  check(is_ultrafilter(b, u), "up-set of an atom is an ultrafilter");
  return u;
}

bool is_character(const GenBooleanAlgebra& b, const Character& c) {
  if (static_cast<int>(c.lam.size()) != b.n) return false;
  for (auto v : c.lam)
    if (v > 1) return false;
  if (c.lam[b.zero] != 0) return false;
  bool nonzero = false;
  for (auto v : c.lam) nonzero |= (v == 1);
  if (!nonzero) return false;
  auto two_or = [](int x, int y) { return x | y; };
  auto two_and = [](int x, int y) { return x & y; };
  auto two_rc = [](int x, int y) { return x & ~y & 1; };
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y) {
      if (c.lam[b.jn(x, y)] != two_or(c.lam[x], c.lam[y])) return false;
      if (c.lam[b.mt(x, y)] != two_and(c.lam[x], c.lam[y])) return false;
      if (c.lam[b.rc(x, y)] != two_rc(c.lam[x], c.lam[y])) return false;
    }
  return true;
}

std::vector<Character> characters(const GenBooleanAlgebra& b) {
  // A character's 1-set is a filter, so scanning filters is exhaustive.
  std::vector<Character> out;
  std::vector<std::vector<int>> ultra;
  for (const Filter& f : all_filters(b)) {
    Character c;
    c.lam.assign(b.n, 0);
    for (int x : f.members) c.lam[x] = 1;
    bool chr = is_character(b, c);
    bool ultrafilter = is_ultrafilter(b, f);
    check(chr == ultrafilter, "characters must correspond to ultrafilters");
    if (chr) {
      out.push_back(std::move(c));
      ultra.push_back(f.members);
    }
  }
  // Finite case: ultrafilters are exactly the up-sets of atoms.
  auto at = b.atoms();
  check(ultra.size() == at.size(), "ultrafilters must biject with atoms");
  for (std::size_t i = 0; i < at.size(); ++i) {
    bool found = false;
    for (auto& u : ultra)
      if (std::find(u.begin(), u.end(), at[i]) != u.end() &&
          u == up_set(b, at[i]).members)
        found = true;
    check(found, "each atom's up-set must appear among the ultrafilters");
  }
  return out;
}

Character separate(const GenBooleanAlgebra& b, int a, int bb) {
  if (b.leq(a, bb))
    fail(errc::not_separable, b.label(a) + " <= " + b.label(bb));
  int w = b.rc(a, bb);
  check(w != b.zero, "a not below b forces a\\b nonzero");
  Filter f = up_set(b, w);
  Filter u = extend_to_ultrafilter(b, f, w);
  Character c;
  c.lam.assign(b.n, 0);
  for (int x : u.members) c.lam[x] = 1;
  check(c.lam[a] == 1 && c.lam[bb] == 0, "separating character hits a, misses b");
  return c;
}

int IdempotentAlgebra::index_of(int ring_elem) const {
  for (int i = 0; i < static_cast<int>(elem.size()); ++i)
    if (elem[i] == ring_elem) return i;
  fail(errc::parse_error, "element is not in the Boolean algebra");
}

namespace {

IdempotentAlgebra algebra_from_elements(RingPtr r, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  int n = static_cast<int>(elems.size());
  auto idx = [&](int e) {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    check(it != elems.end() && *it == e, "Boolean operations stay in the algebra");
    return static_cast<int>(it - elems.begin());
  };
  std::vector<int> meet(n * n), join(n * n), rel(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = r->label(elems[i]);
    for (int j = 0; j < n; ++j) {
      int e = elems[i], f = elems[j];
      int ef = r->m(e, f);
      meet[i * n + j] = idx(ef);
      rel[i * n + j] = idx(r->sub(e, ef));
      join[i * n + j] = idx(r->sub(r->a(e, f), ef));
    }
  }
  IdempotentAlgebra out;
  out.alg = GenBooleanAlgebra::build(n, std::move(meet), std::move(join),
                                     std::move(rel), idx(r->zero),
                                     std::move(labels));
  out.ring = std::move(r);
  out.elem = std::move(elems);
  return out;
}

}  // namespace

IdempotentAlgebra from_central_idempotents(RingPtr r) {
  return algebra_from_elements(r, central_idempotents(*r));
}

IdempotentAlgebra boolean_subalgebra(RingPtr r, std::vector<int> gens) {
  for (int g : gens)
    if (!r->is_idempotent(g) || !r->is_central(g))
      fail(errc::parse_error, "generator is not a central idempotent",
           r->label(g));
  std::set<int> in(gens.begin(), gens.end());
  in.insert(r->zero);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(in.begin(), in.end());
    for (int e : cur)
      for (int f : cur) {
        int ef = r->m(e, f);
        for (int x : {ef, r->sub(e, ef), r->sub(r->a(e, f), ef)})
          if (!in.count(x)) {
            in.insert(x);
            grew = true;
          }
      }
  }
  return algebra_from_elements(std::move(r), std::vector<int>(in.begin(), in.end()));
}

}  // namespace gckit
