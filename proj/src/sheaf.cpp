#include "gckit/sheaf.hpp"

#include <algorithm>

namespace gckit {

namespace {

[[noreturn]] void axiom(const std::string& tag, const std::string& detail) {
  fail(errc::axiom_violated, tag + ": " + detail, tag);
}

}  // namespace

SheafPtr validate_ring_sheaf(RingSheaf candidate) {
  const FiniteGroupoid& g = *candidate.base;
  if (static_cast<int>(candidate.stalk.size()) != g.n_objects ||
      static_cast<int>(candidate.act.size()) != g.n_arrows)
    fail(errc::parse_error, "sheaf tables do not match the base groupoid");
  for (int x = 0; x < g.n_objects; ++x)
    if (!candidate.stalk[x] || !candidate.stalk[x]->one)
      fail(errc::parse_error, "stalks must be unital rings");

  for (int a = 0; a < g.n_arrows; ++a) {
    const FiniteRing& src = *candidate.stalk[g.d[a]];
    const FiniteRing& dst = *candidate.stalk[g.r[a]];
    const auto& f = candidate.act[a];
    // (S2): act(a) maps the stalk at d(a) into the stalk at r(a).
    if (static_cast<int>(f.size()) != src.n)
      axiom("S2", "arrow " + g.label(a) + " map has wrong domain");
    for (int v : f)
      if (v < 0 || v >= dst.n)
        axiom("S2", "arrow " + g.label(a) + " map leaves the range stalk");
    // (SR4): unital ring isomorphism.
    if (src.n != dst.n) axiom("SR4", "arrow " + g.label(a) + " stalks differ in size");
    std::vector<char> hit(dst.n, 0);
    for (int v : f) {
      if (hit[v]) axiom("SR4", "arrow " + g.label(a) + " map is not injective");
      hit[v] = 1;
    }
    for (int x = 0; x < src.n; ++x)
      for (int y = 0; y < src.n; ++y) {
        if (f[src.a(x, y)] != dst.a(f[x], f[y]))
          axiom("SR4", "arrow " + g.label(a) + " map is not additive");
        if (f[src.m(x, y)] != dst.m(f[x], f[y]))
          axiom("SR4", "arrow " + g.label(a) + " map is not multiplicative");
      }
    if (f[*src.one] != *dst.one)
      axiom("SR4", "arrow " + g.label(a) + " map does not preserve the unit");
  }
  // (S1): identity arrows act as the identity.
  for (int x = 0; x < g.n_objects; ++x) {
    const auto& f = candidate.act[g.unit[x]];
    for (int v = 0; v < candidate.stalk[x]->n; ++v)
      if (f[v] != v) axiom("S1", "unit arrow at object " + std::to_string(x));
  }
  // (S3): act(b) . act(a) = act(ba) on composable pairs.
  for (int b = 0; b < g.n_arrows; ++b)
    for (int a = 0; a < g.n_arrows; ++a) {
      int c = g.compose(b, a);
      if (c < 0) continue;
      for (int v = 0; v < candidate.stalk[g.d[a]]->n; ++v)
        if (candidate.act[b][candidate.act[a][v]] != candidate.act[c][v])
          axiom("S3", g.label(b) + " after " + g.label(a));
    }
  // act(inv a) inverts act(a); follows from S1+S3, asserted directly.
  for (int a = 0; a < g.n_arrows; ++a)
    for (int v = 0; v < candidate.stalk[g.d[a]]->n; ++v)
      check(candidate.act[g.inv[a]][candidate.act[a][v]] == v,
            "arrow action of the inverse inverts the arrow action");
  return std::make_shared<const RingSheaf>(std::move(candidate));
}

SheafPtr constant_sheaf(GroupoidPtr base, RingPtr r) {
  if (!r->one) fail(errc::parse_error, "constant sheaf needs a unital ring");
  RingSheaf o;
  o.base = std::move(base);
  o.stalk.assign(o.base->n_objects, r);
  std::vector<int> id(r->n);
  for (int i = 0; i < r->n; ++i) id[i] = i;
  o.act.assign(o.base->n_arrows, id);
  return validate_ring_sheaf(std::move(o));
}

SheafPtr restrict_to_units(const RingSheaf& o) {
  RingSheaf out;
  out.base = make_groupoid(FiniteGroupoid::units_groupoid(o.base->n_objects));
  out.stalk = o.stalk;
  out.act.reserve(o.base->n_objects);
  for (int x = 0; x < o.base->n_objects; ++x)
    out.act.push_back(o.act[o.base->unit[x]]);
  return validate_ring_sheaf(std::move(out));
}

std::string FiniteModule::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size())) return labels[x];
  return std::to_string(x);
}

FiniteModule FiniteModule::build(RingPtr ring, int n, std::vector<int> add,
                                 int zero, std::vector<int> smul,
                                 std::vector<std::string> labels) {
  if (n <= 0 || static_cast<int>(add.size()) != n * n ||
      static_cast<int>(smul.size()) != ring->n * n)
    fail(errc::parse_error, "module tables are inconsistent");
  FiniteModule m;
  m.ring = std::move(ring);
  m.n = n;
  m.add = std::move(add);
  m.zero = zero;
  m.smul = std::move(smul);
  m.labels = std::move(labels);

  auto bad = [&](const std::string& what) {
    fail(errc::axiom_violated, what);
  };
  for (int x = 0; x < n; ++x)
    if (m.a(x, zero) != x || m.a(zero, x) != x) bad("module zero fails");
  m.neg.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (m.a(x, y) == zero) {
        m.neg[x] = y;
        break;
      }
    if (m.neg[x] < 0) bad("module element without negative");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (m.a(x, y) != m.a(y, x)) bad("module addition not commutative");
      for (int z = 0; z < n; ++z)
        if (m.a(m.a(x, y), z) != m.a(x, m.a(y, z)))
          bad("module addition not associative");
    }
  const FiniteRing& r = *m.ring;
  for (int s = 0; s < r.n; ++s)
    for (int x = 0; x < n; ++x) {
      for (int t = 0; t < r.n; ++t) {
        if (m.s(r.m(s, t), x) != m.s(s, m.s(t, x)))
          bad("module action not associative");
        if (m.s(r.a(s, t), x) != m.a(m.s(s, x), m.s(t, x)))
          bad("module action not additive in scalars");
      }
      for (int y = 0; y < n; ++y)
        if (m.s(s, m.a(x, y)) != m.a(m.s(s, x), m.s(s, y)))
          bad("module action not additive in vectors");
    }
  if (r.one) {
    for (int x = 0; x < n; ++x)
      if (m.s(*r.one, x) != x)
        fail(errc::not_unitary, "1 m != m at " + m.label(x));
  }
  return m;
}

FiniteModule FiniteModule::regular(RingPtr ring) {
  FiniteModule m;
  std::vector<int> add = ring->add;
  std::vector<int> smul = ring->mul;
  return build(ring, ring->n, std::move(add), ring->zero, std::move(smul),
               ring->labels);
}

FiniteModule submodule(RingPtr ring, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int n = static_cast<int>(members.size());
  std::vector<int> index(ring->n, -1);
  for (int i = 0; i < n; ++i) index[members[i]] = i;
  auto idx = [&](int x) {
    if (x < 0 || index[x] < 0)
      fail(errc::parse_error, "subset is not closed as a left submodule");
    return index[x];
  };
  std::vector<int> add(n * n), smul(static_cast<std::size_t>(ring->n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = ring->label(members[i]);
    for (int j = 0; j < n; ++j) add[i * n + j] = idx(ring->a(members[i], members[j]));
  }
  for (int r = 0; r < ring->n; ++r)
    for (int i = 0; i < n; ++i)
      smul[static_cast<std::size_t>(r) * n + i] = idx(ring->m(r, members[i]));
  int zero = idx(ring->zero);
  return FiniteModule::build(std::move(ring), n, std::move(add), zero,
                             std::move(smul), std::move(labels));
}

std::vector<int> left_multiples(const FiniteRing& ring, int x) {
  std::vector<char> in(ring.n, 0);
  for (int f = 0; f < ring.n; ++f) in[ring.m(f, x)] = 1;
  std::vector<int> out;
  for (int v = 0; v < ring.n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

ModuleSheafPtr validate_module_sheaf(ModuleSheaf candidate) {
  const RingSheaf& o = *candidate.over;
  const FiniteGroupoid& g = *o.base;
  if (static_cast<int>(candidate.stalk.size()) != g.n_objects ||
      static_cast<int>(candidate.act.size()) != g.n_arrows)
    fail(errc::parse_error, "module sheaf tables do not match the base");
  for (int x = 0; x < g.n_objects; ++x) {
    const FiniteRing& mr = *candidate.stalk[x].ring;
    const FiniteRing& sr = *o.stalk[x];
    if (mr.n != sr.n || mr.add != sr.add || mr.mul != sr.mul)
      fail(errc::parse_error, "stalk module must live over the stalk ring");
    // stalk modules were validated at build; unitarity re-checked here
    const FiniteModule& m = candidate.stalk[x];
    for (int v = 0; v < m.n; ++v)
      if (m.s(*o.stalk[x]->one, v) != v)
        fail(errc::axiom_violated, "Unitary: stalk at " + std::to_string(x), "Unitary");
  }
  for (int a = 0; a < g.n_arrows; ++a) {
    const FiniteModule& src = candidate.stalk[g.d[a]];
    const FiniteModule& dst = candidate.stalk[g.r[a]];
    const auto& f = candidate.act[a];
    if (static_cast<int>(f.size()) != src.n)
      axiom("S2", "arrow " + g.label(a) + " module map domain");
    std::vector<char> hit(dst.n, 0);
    for (int v : f) {
      if (v < 0 || v >= dst.n) axiom("S2", "arrow " + g.label(a));
      if (hit[v]) axiom("S3", "arrow " + g.label(a) + " map is not bijective");
      hit[v] = 1;
    }
    if (src.n != dst.n) axiom("S3", "arrow " + g.label(a) + " stalk sizes differ");
    for (int x = 0; x < src.n; ++x)
      for (int y = 0; y < src.n; ++y)
        if (f[src.a(x, y)] != dst.a(f[x], f[y]))
          axiom("S3", "arrow " + g.label(a) + " map is not additive");
    // (SM3): beta(rm) = alpha(r) beta(m).
    for (int r = 0; r < o.stalk[g.d[a]]->n; ++r)
      for (int x = 0; x < src.n; ++x)
        if (f[src.s(r, x)] != dst.s(o.apply(a, r), f[x]))
          axiom("SM3", "arrow " + g.label(a));
  }
  for (int x = 0; x < g.n_objects; ++x) {
    const auto& f = candidate.act[g.unit[x]];
    for (int v = 0; v < candidate.stalk[x].n; ++v)
      if (f[v] != v) axiom("S1", "unit arrow at object " + std::to_string(x));
  }
  for (int b = 0; b < g.n_arrows; ++b)
    for (int a = 0; a < g.n_arrows; ++a) {
      int c = g.compose(b, a);
      if (c < 0) continue;
      for (int v = 0; v < candidate.stalk[g.d[a]].n; ++v)
        if (candidate.act[b][candidate.act[a][v]] != candidate.act[c][v])
          axiom("S3", g.label(b) + " after " + g.label(a));
    }
  return std::make_shared<const ModuleSheaf>(std::move(candidate));
}

}  // namespace gckit
