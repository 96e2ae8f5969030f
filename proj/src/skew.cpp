#include "gckit/skew.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gckit {

void SpectralAction::validate() {
  if (!S || !A) fail(errc::parse_error, "action is missing S or A");
  const InverseSemigroup& sg = *S;
  int ns = sg.n;
  if (static_cast<int>(D.size()) != ns || static_cast<int>(alpha.size()) != ns)
    fail(errc::parse_error, "action tables must cover S");
  if (unit.empty()) unit.assign(ns, -1);
  if (static_cast<int>(unit.size()) != ns)
    fail(errc::parse_error, "unit table must cover S");

  auto bad = [&](const std::string& what, const std::string& wit = "") {
    fail(errc::not_spectral, what, wit);
  };

  std::vector<std::vector<char>> in_d(ns, std::vector<char>(A->n, 0));
  for (int s = 0; s < ns; ++s) {
    if (!std::is_sorted(D[s].begin(), D[s].end()))
      fail(errc::parse_error, "ideal member lists must be sorted");
    if (!is_ideal(*A, D[s]))
      bad("D_" + sg.label(s) + " is not a two-sided ideal");
    for (int a : D[s]) in_d[s][a] = 1;
  }
  for (int s = 0; s < ns; ++s) {
    int sd = sg.star[s];
    const auto& f = alpha[s];
    if (static_cast<int>(f.size()) != A->n)
      fail(errc::parse_error, "alpha_s must be an A-indexed table");
    std::vector<char> hit(A->n, 0);
    int count = 0;
    for (int a = 0; a < A->n; ++a) {
      if ((f[a] >= 0) != (in_d[sd][a] != 0))
        bad("alpha_" + sg.label(s) + " must be defined exactly on D_{s*}");
      if (f[a] >= 0) {
        if (!in_d[s][f[a]])
          bad("alpha_" + sg.label(s) + " must land in D_s");
        if (hit[f[a]]) bad("alpha_" + sg.label(s) + " is not injective");
        hit[f[a]] = 1;
        ++count;
      }
    }
    if (count != static_cast<int>(D[s].size()))
      bad("alpha_" + sg.label(s) + " is not onto D_s");
    for (int a : D[sd])
      for (int b : D[sd]) {
        if (f[A->a(a, b)] != A->a(f[a], f[b]))
          bad("alpha_" + sg.label(s) + " is not additive");
        if (f[A->m(a, b)] != A->m(f[a], f[b]))
          bad("alpha_" + sg.label(s) + " is not multiplicative");
      }
  }

  // Full law: alpha_{st} equals the partial-map composite alpha_s . alpha_t.
  auto composite_matches = [&](int s, int t) {
    int st = sg.at(s, t);
    for (int a = 0; a < A->n; ++a) {
      int through = alpha[t][a] >= 0 ? alpha[s][alpha[t][a]] : -1;
      if (through != alpha[st][a]) return false;
    }
    return true;
  };
  bool full = true;
  for (int s = 0; s < ns && full; ++s)
    for (int t = 0; t < ns && full; ++t)
      if (!composite_matches(s, t)) full = false;

  // Criterion: order preserving, identity on idempotent domains,
  // multiplicative when s*s = tt*.
  bool criterion = true;
  for (int s = 0; s < ns && criterion; ++s)
    for (int t = 0; t < ns && criterion; ++t) {
      if (!sg.leq(s, t)) continue;
      for (int a = 0; a < A->n; ++a)
        if (alpha[s][a] >= 0 &&
            (alpha[t][a] < 0 || alpha[t][a] != alpha[s][a]))
          criterion = false;
    }
  for (int e : sg.idempotents)
    for (int a : D[e])
      if (alpha[e][a] != a) criterion = false;
  for (int s = 0; s < ns && criterion; ++s)
    for (int t = 0; t < ns && criterion; ++t)
      if (sg.at(sg.star[s], s) == sg.at(t, sg.star[t]) &&
          !composite_matches(s, t))
        criterion = false;
  check(full == criterion,
        "action homomorphism law must agree with the criterion");
  if (!full) bad("alpha is not an inverse semigroup homomorphism");

  // Non-degeneracy: sum of the idempotent domains is all of A.
  std::vector<int> gens;
  for (int e : sg.idempotents)
    for (int a : D[e]) gens.push_back(a);
  if (static_cast<int>(additive_closure(*A, gens).size()) != A->n)
    bad("action is degenerate: sum of D_e is a proper subgroup");

  // Units 1_e; derived when not supplied.
  for (int e : sg.idempotents) {
    if (unit[e] < 0) {
      for (int u : D[e]) {
        bool ident = true;
        for (int x : D[e])
          if (A->m(u, x) != x || A->m(x, u) != x) {
            ident = false;
            break;
          }
        if (ident) {
          unit[e] = u;
          break;
        }
      }
    }
    if (unit[e] < 0 || !in_d[e][unit[e]])
      bad("D_" + sg.label(e) + " has no identity element");
    for (int x : D[e])
      if (A->m(unit[e], x) != x || A->m(x, unit[e]) != x)
        bad("claimed 1_e is not the identity of D_e");
  }
  for (int e : sg.idempotents)
    for (int f : sg.idempotents)
      if (unit[sg.at(e, f)] != A->m(unit[e], unit[f]))
        bad("1_{ef} != 1_e 1_f");
  for (int s = 0; s < ns; ++s) {
    int sstar_s = sg.at(sg.star[s], s);
    for (int e : sg.idempotents) {
      if (!sg.leq(e, sstar_s)) continue;
      int ses = sg.at(sg.at(s, e), sg.star[s]);
      if (alpha[s][unit[e]] != unit[ses])
        bad("alpha_s(1_e) != 1_{ses*} at s=" + sg.label(s) + ", e=" + sg.label(e));
    }
    // D_{ss*} = D_s, needed to place 1_{ss*} delta_s in L.
    check(D[sg.at(s, sg.star[s])] == D[s], "D_{ss*} equals D_s");
  }
}

ActionPtr make_action(SpectralAction a) {
  a.validate();
  return std::make_shared<const SpectralAction>(std::move(a));
}

ActionPtr trivial_group_action(const InverseSemigroup& group, RingPtr a) {
  std::vector<std::vector<int>> maps;
  std::vector<int> id(a->n);
  std::iota(id.begin(), id.end(), 0);
  maps.assign(group.n, id);
  return group_action(group, std::move(a), std::move(maps));
}

ActionPtr group_action(const InverseSemigroup& group, RingPtr a,
                       std::vector<std::vector<int>> maps) {
  if (!group.is_group()) fail(errc::parse_error, "group action needs a group");
  if (!a->one) fail(errc::parse_error, "group action needs a unital ring");
  SpectralAction act;
  act.S = std::make_shared<const InverseSemigroup>(group);
  act.A = std::move(a);
  std::vector<int> all(act.A->n);
  std::iota(all.begin(), all.end(), 0);
  act.D.assign(group.n, all);
  act.alpha = std::move(maps);
  act.unit.assign(group.n, -1);
  return make_action(std::move(act));
}

ActionPtr chain_action(const InverseSemigroup& chain, RingPtr a,
                       std::vector<std::vector<int>> ideals) {
  if (static_cast<int>(ideals.size()) != chain.n)
    fail(errc::parse_error, "one ideal per chain element");
  SpectralAction act;
  act.S = std::make_shared<const InverseSemigroup>(chain);
  act.A = std::move(a);
  act.D = std::move(ideals);
  act.alpha.assign(chain.n, std::vector<int>(act.A->n, -1));
  for (int s = 0; s < chain.n; ++s)
    for (int x : act.D[s]) act.alpha[s][x] = x;
  act.unit.assign(chain.n, -1);
  return make_action(std::move(act));
}

SkewRing::SkewRing(ActionPtr act, long long limit) : act_(std::move(act)) {
  const SpectralAction& act_ref = *act_;
  const InverseSemigroup& sg = *act_ref.S;
  const FiniteRing& a = *act_ref.A;
  int ns = sg.n;

  radix_.resize(ns);
  stride_.resize(ns);
  pos_in_d_.assign(ns, std::vector<int>(a.n, -1));
  l_size_ = 1;
  for (int s = 0; s < ns; ++s) {
    radix_[s] = static_cast<int>(act_ref.D[s].size());
    stride_[s] = l_size_;
    for (int i = 0; i < radix_[s]; ++i) pos_in_d_[s][act_ref.D[s][i]] = i;
    if (l_size_ > limit || l_size_ * radix_[s] > limit)
      fail(errc::size_limit, "|L| exceeds limit " + std::to_string(limit));
    l_size_ *= radix_[s];
  }

  // Short-form identity of the multiplication rule, on every pair.
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t) {
      int st = sg.at(s, t);
      int e = sg.at(sg.star[s], s);
      for (int av : act_ref.D[s])
        for (int bv : act_ref.D[t]) {
          int q = a.m(act_ref.apply(sg.star[s], av), bv);
          check(act_ref.in_domain(s, q), "alpha_{s*}(a) b lies in D_{s*}");
          int c = act_ref.apply(s, q);
          check(pos_in_d_[st][c] >= 0, "alpha_s(alpha_{s*}(a) b) lies in D_{st}");
          int b1 = a.m(bv, act_ref.unit[e]);
          check(act_ref.in_domain(s, b1), "b 1_{s*s} lies in D_{s*}");
          check(c == a.m(av, act_ref.apply(s, b1)),
                "short form a alpha_s(b 1_{s*s}) matches the product rule");
        }
    }

  build_quotient(limit);
  verify_embeddings();
}

SkewRing::LElem SkewRing::l_zero() const {
  return LElem(act_->S->n, act_->A->zero);
}

SkewRing::LElem SkewRing::l_single(int s, int a) const {
  check(pos_in_d_[s][a] >= 0, "coefficient must lie in D_s");
  LElem x = l_zero();
  x[s] = a;
  return x;
}

SkewRing::LElem SkewRing::l_add(const LElem& x, const LElem& y) const {
  LElem out(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) out[s] = act_->A->a(x[s], y[s]);
  return out;
}

SkewRing::LElem SkewRing::l_neg(const LElem& x) const {
  LElem out(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) out[s] = act_->A->neg[x[s]];
  return out;
}

SkewRing::LElem SkewRing::l_mul(const LElem& x, const LElem& y) const {
  const InverseSemigroup& sg = *act_->S;
  const FiniteRing& a = *act_->A;
  LElem out = l_zero();
  for (int s = 0; s < sg.n; ++s) {
    if (x[s] == a.zero) continue;
    int sd = sg.star[s];
    for (int t = 0; t < sg.n; ++t) {
      if (y[t] == a.zero) continue;
      int c = act_->apply(s, a.m(act_->apply(sd, x[s]), y[t]));
      int st = sg.at(s, t);
      out[st] = a.a(out[st], c);
    }
  }
  return out;
}

long long SkewRing::l_encode(const LElem& x) const {
  long long idx = 0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    int p = pos_in_d_[s][x[s]];
    check(p >= 0, "L element coefficients stay in their ideals");
    idx += stride_[s] * p;
  }
  return idx;
}

SkewRing::LElem SkewRing::l_decode(long long idx) const {
  LElem x(act_->S->n);
  for (int s = 0; s < act_->S->n; ++s) {
    x[s] = act_->D[s][idx % radix_[s]];
    idx /= radix_[s];
  }
  return x;
}

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(long long n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

void SkewRing::build_quotient(long long limit) {
  const InverseSemigroup& sg = *act_->S;
  const FiniteRing& a = *act_->A;

  // Additive generators of N: a delta_r - a delta_s with r < s in the natural
  // order (r = s contributes zero).
  std::vector<LElem> gens;
  for (int r = 0; r < sg.n; ++r)
    for (int s = 0; s < sg.n; ++s) {
      if (r == s || !sg.leq(r, s)) continue;
      for (int av : act_->D[r]) {
        if (av == a.zero) continue;
        check(pos_in_d_[s][av] >= 0, "r <= s forces D_r inside D_s");
        gens.push_back(l_add(l_single(r, av), l_neg(l_single(s, av))));
      }
    }

  UF uf(l_size_);
  for (long long x = 0; x < l_size_; ++x) {
    LElem ex = l_decode(x);
    for (const LElem& g : gens)
      uf.unite(static_cast<int>(x), static_cast<int>(l_encode(l_add(ex, g))));
  }

  long long zero_idx = l_encode(l_zero());
  int zero_root = uf.find(static_cast<int>(zero_idx));
  std::map<int, long long> min_of_root;
  for (long long x = 0; x < l_size_; ++x) {
    int rt = uf.find(static_cast<int>(x));
    auto it = min_of_root.find(rt);
    if (it == min_of_root.end()) min_of_root.emplace(rt, x);
  }
  for (long long x = 0; x < l_size_; ++x)
    if (uf.find(static_cast<int>(x)) == zero_root) n_members_.push_back(x);

  rep_of_.clear();
  std::map<int, int> class_of_root;
  for (auto& [root, rep] : min_of_root) {
    (void)root;
    rep_of_.push_back(rep);
  }
  std::sort(rep_of_.begin(), rep_of_.end());
  for (int i = 0; i < static_cast<int>(rep_of_.size()); ++i)
    class_of_root[uf.find(static_cast<int>(rep_of_[i]))] = i;
  coset_of_.assign(l_size_, -1);
  for (long long x = 0; x < l_size_; ++x)
    coset_of_[x] = class_of_root[uf.find(static_cast<int>(x))];

  // N is a two-sided ideal: checked against the single-term generators of L.
  for (long long nx : n_members_) {
    LElem en = l_decode(nx);
    for (int s = 0; s < sg.n; ++s)
      for (int av : act_->D[s]) {
        LElem g = l_single(s, av);
        check(coset_of_[l_encode(l_mul(en, g))] == coset_of_[zero_idx],
              "N absorbs products on the right");
        check(coset_of_[l_encode(l_mul(g, en))] == coset_of_[zero_idx],
              "N absorbs products on the left");
      }
  }

  int m = static_cast<int>(rep_of_.size());
  std::vector<int> addt(static_cast<std::size_t>(m) * m),
      mult(static_cast<std::size_t>(m) * m);
  std::vector<LElem> reps(m);
  for (int i = 0; i < m; ++i) reps[i] = l_decode(rep_of_[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      addt[static_cast<std::size_t>(i) * m + j] =
          coset_of_[l_encode(l_add(reps[i], reps[j]))];
      mult[static_cast<std::size_t>(i) * m + j] =
          coset_of_[l_encode(l_mul(reps[i], reps[j]))];
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = format_coset_raw(reps[i]);
  ring_ = FiniteRing::build(m, std::move(addt), std::move(mult),
                            coset_of_[zero_idx], std::nullopt,
                            std::move(labels), std::max<long long>(limit, m));
  for (int u = 0; u < m && !ring_.one; ++u) {
    bool ident = true;
    for (int x = 0; x < m && ident; ++x)
      if (ring_.m(u, x) != x || ring_.m(x, u) != x) ident = false;
    if (ident) ring_.one = u;
  }
  ring_ptr_ = std::make_shared<const FiniteRing>(ring_);
}

std::string SkewRing::format_coset_raw(const LElem& x) const {
  const InverseSemigroup& sg = *act_->S;
  const FiniteRing& a = *act_->A;
  std::string out;
  for (int s = 0; s < sg.n; ++s) {
    if (x[s] == a.zero) continue;
    if (!out.empty()) out += " + ";
    out += a.label(x[s]) + "d_" + sg.label(s);
  }
  if (out.empty()) out = "0";
  return "[" + out + "]";
}

int SkewRing::project(const LElem& x) const { return coset_of_[l_encode(x)]; }

SkewRing::LElem SkewRing::coset_rep(int k) const { return l_decode(rep_of_[k]); }

int SkewRing::theta(int a) const { return theta_[a]; }

int SkewRing::phi(int s) const { return phi_[s]; }

std::string SkewRing::format_coset(int k) const { return ring_.label(k); }

void SkewRing::verify_embeddings() {
  const InverseSemigroup& sg = *act_->S;
  const FiniteRing& a = *act_->A;

  // B: the generalized Boolean algebra generated by the 1_e.
  std::vector<int> gens;
  for (int e : sg.idempotents) gens.push_back(act_->unit[e]);
  IdempotentAlgebra b = boolean_subalgebra(act_->A, gens);
  b_elems_ = b.elem;

  // Disjointify the units in ascending idempotent order; Theta(a) splits a
  // along the resulting orthogonal family.
  auto vjoin = [&](int x, int y) { return a.sub(a.a(x, y), a.m(x, y)); };
  std::vector<int> parts;
  int sofar = a.zero;
  for (int e : sg.idempotents) {
    int u = act_->unit[e];
    parts.push_back(a.sub(u, a.m(u, sofar)));
    sofar = vjoin(sofar, u);
  }
  theta_.assign(a.n, -1);
  for (int av = 0; av < a.n; ++av) {
    if (a.m(av, sofar) != av)
      fail(errc::not_decomposable,
           "element not covered by the idempotent domains", a.label(av));
    LElem x = l_zero();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int e = sg.idempotents[i];
      int piece = a.m(av, parts[i]);
      check(pos_in_d_[e][piece] >= 0, "a 1-piece lies in its D_e");
      x[e] = a.a(x[e], piece);
    }
    theta_[av] = project(x);
  }
  phi_.assign(sg.n, -1);
  for (int s = 0; s < sg.n; ++s)
    phi_[s] = project(l_single(s, act_->unit[sg.at(s, sg.star[s])]));

  // Proposition-level identities, asserted per instance.
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      check(theta_[a.a(x, y)] == ring_.a(theta_[x], theta_[y]),
            "Theta is additive");
      check(theta_[a.m(x, y)] == ring_.m(theta_[x], theta_[y]),
            "Theta is multiplicative");
      if (x != y) check(theta_[x] != theta_[y], "Theta is injective");
    }
  for (int s = 0; s < sg.n; ++s)
    for (int t = 0; t < sg.n; ++t)
      check(phi_[sg.at(s, t)] == ring_.m(phi_[s], phi_[t]),
            "Phi is multiplicative");
  for (int s = 0; s < sg.n; ++s)
    for (int av : act_->D[sg.star[s]])
      check(theta_[act_->apply(s, av)] ==
                ring_.m(ring_.m(phi_[s], theta_[av]), phi_[sg.star[s]]),
            "Theta(alpha_s(a)) = Phi(s) Theta(a) Phi(s*)");
  for (int e : sg.idempotents)
    check(theta_[act_->unit[e]] == phi_[e], "Theta(1_e) = Phi(e)");
  for (int s = 0; s < sg.n; ++s)
    for (int av : act_->D[s])
      check(project(l_single(s, av)) == ring_.m(theta_[av], phi_[s]),
            "a delta_s + N = Theta(a) Phi(s)");

  std::vector<int> theta_b;
  for (int bv : b_elems_) theta_b.push_back(theta_[bv]);
  std::sort(theta_b.begin(), theta_b.end());
  theta_b.erase(std::unique(theta_b.begin(), theta_b.end()), theta_b.end());
  check(has_local_units(ring_, theta_b),
        "Theta(B) contains a set of local units");
}

SkewPtr build_skew_ring(ActionPtr act, long long limit) {
  return std::make_shared<const SkewRing>(std::move(act), limit);
}

void validate_covariant(const SpectralAction& act, const CovariantSystem& sys) {
  const InverseSemigroup& sg = *act.S;
  const FiniteRing& a = *act.A;
  const FiniteRing& r = *sys.target;
  if (static_cast<int>(sys.theta.size()) != a.n ||
      static_cast<int>(sys.phi.size()) != sg.n)
    fail(errc::parse_error, "covariant system tables have wrong sizes");
  RingHom th{act.A, sys.target, sys.theta};
  if (!is_ring_hom(th))
    fail(errc::not_covariant, "theta is not a ring homomorphism", "theta");
  for (int s = 0; s < sg.n; ++s)
    for (int t = 0; t < sg.n; ++t)
      if (sys.phi[sg.at(s, t)] != r.m(sys.phi[s], sys.phi[t]))
        fail(errc::not_covariant, "phi is not multiplicative", "phi");
  for (int s = 0; s < sg.n; ++s)
    for (int av : act.D[sg.star[s]])
      if (sys.theta[act.apply(s, av)] !=
          r.m(r.m(sys.phi[s], sys.theta[av]), sys.phi[sg.star[s]]))
        fail(errc::not_covariant,
             "C1 fails at s=" + sg.label(s) + ", a=" + a.label(av), "C1");
  for (int e : sg.idempotents)
    if (sys.theta[act.unit[e]] != sys.phi[e])
      fail(errc::not_covariant, "C2 fails at e=" + sg.label(e), "C2");
}

RingHom induced_hom(const SkewRing& k, const CovariantSystem& sys) {
  const SpectralAction& act = k.action();
  validate_covariant(act, sys);
  const InverseSemigroup& sg = *act.S;
  const FiniteRing& r = *sys.target;

  auto rho = [&](const SkewRing::LElem& x) {
    int acc = r.zero;
    for (int s = 0; s < sg.n; ++s)
      acc = r.a(acc, r.m(sys.theta[x[s]], sys.phi[s]));
    return acc;
  };
  for (long long nx : k.n_members())
    check(rho(k.l_decode(nx)) == r.zero,
          "covariance forces N inside the kernel");

  int m = k.ring().n;
  std::vector<int> h(m);
  for (int i = 0; i < m; ++i) h[i] = rho(k.coset_rep(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      check(h[k.ring().a(i, j)] == r.a(h[i], h[j]), "induced map is additive");
      check(h[k.ring().m(i, j)] == r.m(h[i], h[j]),
            "induced map is multiplicative");
    }
  for (int av = 0; av < act.A->n; ++av)
    check(h[k.theta(av)] == sys.theta[av], "pi composed with Theta is theta");
  for (int s = 0; s < sg.n; ++s)
    check(h[k.phi(s)] == sys.phi[s], "pi composed with Phi is phi");

  // Uniqueness: the cosets a delta_s + N generate additively, and each equals
  // Theta(a) Phi(s), so any homomorphism agreeing on Theta and Phi agrees
  // everywhere.
  std::vector<int> gens;
  for (int s = 0; s < sg.n; ++s)
    for (int av : act.D[s]) gens.push_back(k.project(k.l_single(s, av)));
  check(static_cast<int>(additive_closure(k.ring(), gens).size()) == m,
        "single-term cosets generate the skew ring additively");

  return RingHom{k.ring_ptr(), sys.target, std::move(h)};
}

}  // namespace gckit
