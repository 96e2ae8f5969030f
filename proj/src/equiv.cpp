#include "gckit/equiv.hpp"

#include <algorithm>

namespace gckit {

std::string IsoReport::to_json() const {
  std::string out = "{\"theorem\":\"" + theorem + "\",\"sizes\":{\"lhs\":" +
                    std::to_string(lhs_size) + ",\"rhs\":" +
                    std::to_string(rhs_size) + "},\"is_hom\":" +
                    (is_hom ? "true" : "false") + ",\"injective\":" +
                    (injective ? "true" : "false") + ",\"surjective\":" +
                    (surjective ? "true" : "false") + ",\"witness_failures\":[";
  for (std::size_t i = 0; i < witness_failures.size(); ++i) {
    if (i) out += ",";
    out += "\"" + witness_failures[i] + "\"";
  }
  return out + "]}";
}

IsoReport report_from_hom(const std::string& theorem, const RingHom& h) {
  IsoReport rep;
  rep.theorem = theorem;
  rep.lhs_size = h.src->n;
  rep.rhs_size = h.dst->n;
  rep.is_hom = is_ring_hom(h);
  std::vector<char> hit(h.dst->n, 0);
  rep.injective = true;
  for (int x = 0; x < h.src->n; ++x) {
    if (hit[h.map[x]]) {
      rep.injective = false;
      rep.witness_failures.push_back("collision at " + h.src->label(x));
    }
    hit[h.map[x]] = 1;
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
  return rep;
}

DiagAction tilde_action(SheafPtr o, const BisectionSemigroup& sub,
                        long long limit) {
  if (sub.base.get() != o->base.get())
    fail(errc::parse_error, "bisections must come from the sheaf's base");
  GermConditions gc = germ_conditions(*o->base, sub.elems);
  if (!gc.g1)
    fail(errc::g1_fails, "subsemigroup does not cover the arrow space");

  const FiniteGroupoid& g = *o->base;
  ConvAlgebra diag(restrict_to_units(*o), limit);
  RingPtr diag_ring = diag.as_ring_ptr();
  int nd = diag_ring->n;
  int ns = sub.sg.n;

  // In the diagonal algebra, object x is arrow x of the unit groupoid.
  SpectralAction act;
  act.S = std::make_shared<const InverseSemigroup>(sub.sg);
  act.A = diag_ring;
  act.D.assign(ns, {});
  act.alpha.assign(ns, std::vector<int>(nd, -1));
  act.unit.assign(ns, -1);

  std::vector<std::vector<char>> range_objects(ns,
                                               std::vector<char>(g.n_objects, 0));
  for (int s = 0; s < ns; ++s)
    for (int a : sub.elems[s]) range_objects[s][g.r[a]] = 1;

  auto supported_on = [&](const ConvAlgebra::Elem& f,
                          const std::vector<char>& objs) {
    for (int x = 0; x < g.n_objects; ++x)
      if (!objs[x] && f[x] != o->stalk[x]->zero) return false;
    return true;
  };

  for (int s = 0; s < ns; ++s)
    for (int i = 0; i < nd; ++i)
      if (supported_on(diag.decode(i), range_objects[s])) act.D[s].push_back(i);

  for (int s = 0; s < ns; ++s) {
    int sd = sub.sg.star[s];
    for (int i : act.D[sd]) {
      ConvAlgebra::Elem f = diag.decode(i);
      ConvAlgebra::Elem out = diag.zero();
      for (int a : sub.elems[s]) out[g.r[a]] = o->apply(a, f[g.d[a]]);
      act.alpha[s][i] = diag.encode(out);
    }
  }
  for (int e : sub.sg.idempotents) {
    ConvAlgebra::Elem u = diag.zero();
    for (int a : sub.elems[e]) u[g.r[a]] = *o->stalk[g.r[a]]->one;
    act.unit[e] = diag.encode(u);
  }

  DiagAction out{sub, std::move(diag), std::move(diag_ring),
                 make_action(std::move(act))};
  return out;
}

namespace {

// theta-hat extends diagonal sections by zero; phi-hat(s) = chi_s.
CovariantSystem hat_system(const DiagAction& da, const ConvAlgebra& full,
                           RingPtr full_ring) {
  const FiniteGroupoid& g = full.base();
  CovariantSystem sys;
  sys.target = std::move(full_ring);
  sys.theta.resize(da.diag_ring->n);
  for (int i = 0; i < da.diag_ring->n; ++i) {
    ConvAlgebra::Elem section = da.diag.decode(i);
    ConvAlgebra::Elem ext = full.zero();
    for (int x = 0; x < g.n_objects; ++x) ext[g.unit[x]] = section[x];
    sys.theta[i] = full.encode(ext);
  }
  sys.phi.resize(da.sub.sg.n);
  for (int s = 0; s < da.sub.sg.n; ++s)
    sys.phi[s] = full.encode(full.chi(da.sub.elems[s]));
  return sys;
}

}  // namespace

HatCovariant hat_covariant(SheafPtr o, const BisectionSemigroup& sub,
                           long long limit) {
  DiagAction da = tilde_action(o, sub, limit);
  ConvAlgebra full(o, limit);
  RingPtr full_ring = full.as_ring_ptr();
  CovariantSystem sys = hat_system(da, full, full_ring);

  SkewPtr skew = build_skew_ring(da.action, limit);
  RingHom pi = induced_hom(*skew, sys);
  // Surjectivity holds under (G1) alone.
  std::vector<char> hit(full_ring->n, 0);
  for (int v : pi.map) hit[v] = 1;
  check(std::all_of(hit.begin(), hit.end(), [](char c) { return c; }),
        "theta-hat x| phi-hat is surjective");

  HatCovariant out{std::move(da), std::move(full), std::move(full_ring),
                   std::move(sys), std::move(skew), std::move(pi)};
  return out;
}

IsoReport check_factor_through(SheafPtr o, const BisectionSemigroup& sub,
                               long long limit) {
  GermConditions gc = germ_conditions(*o->base, sub.elems);
  if (!gc.g1 || !gc.g2)
    fail(errc::germ_conditions_fail,
         std::string("germ conditions fail: ") + (gc.g1 ? "" : "(G1) ") +
             (gc.g2 ? "" : "(G2)"));
  HatCovariant hc = hat_covariant(o, sub, limit);
  return report_from_hom("factor_through", hc.pi);
}

namespace {

struct StalkQuotient {
  std::vector<int> classmap;  // module elem -> class
  std::vector<int> rep;       // class -> lowest module elem
};

StalkQuotient group_quotient(const FiniteModule& m, const std::vector<int>& null) {
  StalkQuotient q;
  std::vector<int> low(m.n, -1);
  for (int x = 0; x < m.n; ++x) {
    int best = x;
    for (int nn : null) best = std::min(best, m.a(x, nn));
    low[x] = best;
  }
  q.classmap.assign(m.n, -1);
  for (int x = 0; x < m.n; ++x)
    if (low[x] == x) {
      q.classmap[x] = static_cast<int>(q.rep.size());
      q.rep.push_back(x);
    }
  for (int x = 0; x < m.n; ++x) q.classmap[x] = q.classmap[low[x]];
  return q;
}

}  // namespace

SheafifiedModule sheafify_module(const ConvAlgebra& alg, const FiniteModule& m) {
  const FiniteGroupoid& g = alg.base();
  if (static_cast<long long>(m.ring->n) != alg.carrier_size())
    fail(errc::parse_error, "module must live over the enumerated algebra");
  int id_enc = alg.encode(alg.identity());
  for (int x = 0; x < m.n; ++x)
    if (m.s(id_enc, x) != x)
      fail(errc::not_unitary, "module is not unitary at " + m.label(x));

  // N_x is the kernel of multiplication by chi_{x}; the singleton
  // neighborhood is finest in the discrete topology.
  std::vector<StalkQuotient> q(g.n_objects);
  for (int x = 0; x < g.n_objects; ++x) {
    int chi_point = alg.encode(alg.chi({g.unit[x]}));
    std::vector<int> null;
    for (int mm = 0; mm < m.n; ++mm)
      if (m.s(chi_point, mm) == m.zero) null.push_back(mm);
    q[x] = group_quotient(m, null);
  }

  ModuleSheaf sheaf;
  sheaf.over = std::make_shared<const RingSheaf>(alg.sheaf());
  for (int x = 0; x < g.n_objects; ++x) {
    const FiniteRing& st = *alg.sheaf().stalk[x];
    int nc = static_cast<int>(q[x].rep.size());
    std::vector<int> add(nc * nc), smul(static_cast<std::size_t>(st.n) * nc);
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j)
        add[i * nc + j] = q[x].classmap[m.a(q[x].rep[i], q[x].rep[j])];
    for (int r = 0; r < st.n; ++r) {
      // The scalar r acts through the singleton section r chi_{x}.
      ConvAlgebra::Elem sec = alg.zero();
      sec[g.unit[x]] = r;
      int enc = alg.encode(sec);
      for (int i = 0; i < nc; ++i)
        smul[static_cast<std::size_t>(r) * nc + i] =
            q[x].classmap[m.s(enc, q[x].rep[i])];
      for (int mm = 0; mm < m.n; ++mm)
        check(q[x].classmap[m.s(enc, mm)] ==
                  smul[static_cast<std::size_t>(r) * nc + q[x].classmap[mm]],
              "scalar action descends to the stalk");
    }
    sheaf.stalk.push_back(FiniteModule::build(alg.sheaf().stalk[x], nc,
                                              std::move(add),
                                              q[x].classmap[m.zero],
                                              std::move(smul)));
  }

  for (int a = 0; a < g.n_arrows; ++a) {
    int dx = g.d[a], rx = g.r[a];
    int enc = alg.encode(alg.chi({a}));
    std::vector<int> beta(q[dx].rep.size());
    for (std::size_t i = 0; i < q[dx].rep.size(); ++i)
      beta[i] = q[rx].classmap[m.s(enc, q[dx].rep[i])];
    for (int mm = 0; mm < m.n; ++mm)
      check(q[rx].classmap[m.s(enc, mm)] == beta[q[dx].classmap[mm]],
            "beta descends to stalk classes");
    // Independent of the chosen bisection through the arrow.
    if (g.n_arrows <= 10) {
      for (unsigned mask = 0; mask < (1u << g.n_arrows); ++mask) {
        if (!(mask & (1u << a))) continue;
        Bisection u;
        for (int b = 0; b < g.n_arrows; ++b)
          if (mask & (1u << b)) u.push_back(b);
        if (!is_bisection(g, u)) continue;
        int enc_u = alg.encode(alg.chi(u));
        for (int mm = 0; mm < m.n; ++mm)
          check(q[rx].classmap[m.s(enc_u, mm)] == beta[q[dx].classmap[mm]],
                "beta is independent of the bisection through the arrow");
      }
    }
    sheaf.act.push_back(std::move(beta));
  }

  SheafifiedModule out;
  out.sheaf = validate_module_sheaf(std::move(sheaf));
  out.classmap.reserve(g.n_objects);
  for (int x = 0; x < g.n_objects; ++x) out.classmap.push_back(q[x].classmap);
  return out;
}

SectionsModule::SectionsModule(const ConvAlgebra& alg, RingPtr alg_ring,
                               const ModuleSheaf& msheaf, long long limit) {
  const FiniteGroupoid& g = *msheaf.over->base;
  int no = g.n_objects;
  sizes_.resize(no);
  stride_.resize(no);
  long long total = 1;
  for (int x = 0; x < no; ++x) {
    sizes_[x] = msheaf.stalk[x].n;
    stride_[x] = total;
    if (total > limit || total * sizes_[x] > limit)
      fail(errc::size_limit, "section module exceeds the carrier limit");
    total *= sizes_[x];
  }
  int n = static_cast<int>(total);

  auto enc = [&](const std::vector<int>& vals) {
    long long idx = 0;
    for (int x = 0; x < no; ++x) idx += stride_[x] * vals[x];
    return static_cast<int>(idx);
  };
  auto dec = [&](int idx) {
    std::vector<int> vals(no);
    long long rest = idx;
    for (int x = 0; x < no; ++x) {
      vals[x] = static_cast<int>(rest % sizes_[x]);
      rest /= sizes_[x];
    }
    return vals;
  };

  std::vector<int> add(static_cast<std::size_t>(n) * n);
  std::vector<int> zero_vals(no);
  for (int x = 0; x < no; ++x) zero_vals[x] = msheaf.stalk[x].zero;
  for (int i = 0; i < n; ++i) {
    auto vi = dec(i);
    for (int j = 0; j < n; ++j) {
      auto vj = dec(j);
      std::vector<int> vs(no);
      for (int x = 0; x < no; ++x) vs[x] = msheaf.stalk[x].a(vi[x], vj[x]);
      add[static_cast<std::size_t>(i) * n + j] = enc(vs);
    }
  }
  // (f t)(x) = sum over r^{-1}(x) of f(gamma) beta_gamma(t(d(gamma))).
  std::vector<int> smul(static_cast<std::size_t>(alg_ring->n) * n);
  for (int f = 0; f < alg_ring->n; ++f) {
    ConvAlgebra::Elem fe = alg.decode(f);
    for (int t = 0; t < n; ++t) {
      auto tv = dec(t);
      std::vector<int> out = zero_vals;
      for (int a = 0; a < g.n_arrows; ++a) {
        int x = g.r[a];
        const FiniteModule& st = msheaf.stalk[x];
        out[x] = st.a(out[x], st.s(fe[a], msheaf.act[a][tv[g.d[a]]]));
      }
      smul[static_cast<std::size_t>(f) * n + t] = enc(out);
    }
  }
  // The module axioms verified here include f (g t) = (f * g) t.
  mod_ = FiniteModule::build(std::move(alg_ring), n, std::move(add),
                             enc(zero_vals), std::move(smul));
}

int SectionsModule::encode(const std::vector<int>& per_object) const {
  long long idx = 0;
  for (std::size_t x = 0; x < per_object.size(); ++x)
    idx += stride_[x] * per_object[x];
  return static_cast<int>(idx);
}

std::vector<int> SectionsModule::decode(int idx) const {
  std::vector<int> vals(sizes_.size());
  long long rest = idx;
  for (std::size_t x = 0; x < sizes_.size(); ++x) {
    vals[x] = static_cast<int>(rest % sizes_[x]);
    rest /= sizes_[x];
  }
  return vals;
}

IsoReport disintegration_module_roundtrip(const ConvAlgebra& alg,
                                          RingPtr alg_ring,
                                          const FiniteModule& m,
                                          long long limit) {
  const FiniteGroupoid& g = alg.base();
  SheafifiedModule sh = sheafify_module(alg, m);
  SectionsModule sec(alg, alg_ring, *sh.sheaf, limit);

  IsoReport rep;
  rep.theorem = "disintegration_eta";
  rep.lhs_size = m.n;
  rep.rhs_size = sec.mod().n;

  std::vector<int> eta(m.n);
  for (int mm = 0; mm < m.n; ++mm) {
    std::vector<int> vals(g.n_objects);
    for (int x = 0; x < g.n_objects; ++x) vals[x] = sh.classmap[x][mm];
    eta[mm] = sec.encode(vals);
  }
  std::vector<char> hit(sec.mod().n, 0);
  rep.injective = true;
  for (int v : eta) {
    if (hit[v]) rep.injective = false;
    hit[v] = 1;
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });

  rep.is_hom = true;
  for (int x = 0; x < m.n && rep.is_hom; ++x)
    for (int y = 0; y < m.n && rep.is_hom; ++y)
      if (eta[m.a(x, y)] != sec.mod().a(eta[x], eta[y])) {
        rep.is_hom = false;
        rep.witness_failures.push_back("eta not additive at " + m.label(x));
      }
  for (int f = 0; f < alg_ring->n && rep.is_hom; ++f)
    for (int mm = 0; mm < m.n; ++mm)
      if (eta[m.s(f, mm)] != sec.mod().s(f, eta[mm])) {
        rep.is_hom = false;
        rep.witness_failures.push_back("eta not linear at f=" +
                                       alg_ring->label(f));
        break;
      }

  // Support control: chi_U m = m confines eta(m) to U.
  if (g.n_objects <= 12) {
    for (unsigned mask = 0; mask < (1u << g.n_objects); ++mask) {
      Bisection u;
      for (int x = 0; x < g.n_objects; ++x)
        if (mask & (1u << x)) u.push_back(g.unit[x]);
      std::sort(u.begin(), u.end());
      int enc = alg.encode(alg.chi(u));
      for (int mm = 0; mm < m.n; ++mm) {
        if (m.s(enc, mm) != mm) continue;
        for (int x = 0; x < g.n_objects; ++x)
          if (!(mask & (1u << x)) &&
              sh.classmap[x][mm] != sh.sheaf->stalk[x].zero)
            rep.witness_failures.push_back("support leak at object " +
                                           std::to_string(x));
      }
    }
  }
  return rep;
}

IsoReport disintegration_sheaf_roundtrip(const ConvAlgebra& alg,
                                         RingPtr alg_ring,
                                         const ModuleSheaf& msheaf,
                                         long long limit) {
  const FiniteGroupoid& g = *msheaf.over->base;
  SectionsModule sec(alg, alg_ring, msheaf, limit);
  SheafifiedModule sh2 = sheafify_module(alg, sec.mod());

  IsoReport rep;
  rep.theorem = "disintegration_v";
  rep.is_hom = true;
  rep.injective = true;
  rep.surjective = true;

  // v per object: [t]_x -> t(x).
  std::vector<std::vector<int>> v(g.n_objects);
  for (int x = 0; x < g.n_objects; ++x) {
    const FiniteModule& lhs = sh2.sheaf->stalk[x];
    const FiniteModule& rhs = msheaf.stalk[x];
    rep.lhs_size += lhs.n;
    rep.rhs_size += rhs.n;
    v[x].assign(lhs.n, -1);
    for (int t = 0; t < sec.mod().n; ++t) {
      int cls = sh2.classmap[x][t];
      int val = sec.decode(t)[x];
      if (v[x][cls] < 0)
        v[x][cls] = val;
      else if (v[x][cls] != val) {
        rep.is_hom = false;
        rep.witness_failures.push_back("v ill-defined at object " +
                                       std::to_string(x));
      }
    }
    std::vector<char> hit(rhs.n, 0);
    for (int c = 0; c < lhs.n; ++c) {
      if (v[x][c] < 0 || hit[v[x][c]]) rep.injective = false;
      if (v[x][c] >= 0) hit[v[x][c]] = 1;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c; }))
      rep.surjective = false;
    for (int c1 = 0; c1 < lhs.n && rep.is_hom; ++c1)
      for (int c2 = 0; c2 < lhs.n; ++c2)
        if (v[x][lhs.a(c1, c2)] != rhs.a(v[x][c1], v[x][c2])) {
          rep.is_hom = false;
          rep.witness_failures.push_back("v not additive at object " +
                                         std::to_string(x));
          break;
        }
    const FiniteRing& st = *msheaf.over->stalk[x];
    for (int r = 0; r < st.n && rep.is_hom; ++r)
      for (int c = 0; c < lhs.n; ++c)
        if (v[x][lhs.s(r, c)] != rhs.s(r, v[x][c])) {
          rep.is_hom = false;
          rep.witness_failures.push_back("v not linear at object " +
                                         std::to_string(x));
          break;
        }
  }
  // v commutes with the arrow actions.
  for (int a = 0; a < g.n_arrows && rep.is_hom; ++a) {
    int dx = g.d[a], rx = g.r[a];
    const std::vector<int>& beta2 = sh2.sheaf->act[a];
    for (int c = 0; c < sh2.sheaf->stalk[dx].n; ++c)
      if (v[rx][beta2[c]] != msheaf.act[a][v[dx][c]]) {
        rep.is_hom = false;
        rep.witness_failures.push_back("v does not commute with arrow " +
                                       g.label(a));
        break;
      }
  }
  return rep;
}

namespace {

GermSheaf germ_sheaf_impl(ActionPtr act, PierceSpectrum sp) {
  const SpectralAction& a_act = *act;
  const InverseSemigroup& sg = *a_act.S;
  const FiniteRing& a = *a_act.A;

  GermSheaf out;
  out.spectrum = std::move(sp);
  BooleanAction hat = hat_action(a_act, out.spectrum);
  out.germ = groupoid_of_germs(hat);
  out.stalks = pierce_sheaf(out.spectrum);

  const FiniteGroupoid& gg = *out.germ.gpd;
  RingSheaf sheaf;
  sheaf.base = out.germ.gpd;
  for (int p = 0; p < gg.n_objects; ++p)
    sheaf.stalk.push_back(out.stalks.stalks[p].r_lambda);

  // alpha_{[s,l]}([a]_l) = [alpha_s(1_{s*s} a)]_{alpha-hat_s(l)}, checked
  // independent of both representatives.
  sheaf.act.assign(gg.n_arrows, {});
  for (int arrow = 0; arrow < gg.n_arrows; ++arrow) {
    int dx = gg.d[arrow], rx = gg.r[arrow];
    const PierceStalk& src = out.stalks.stalks[dx];
    const PierceStalk& dst = out.stalks.stalks[rx];
    std::vector<int> map(src.r_lambda->n, -1);
    for (int s = 0; s < sg.n; ++s) {
      if (out.germ.germ_of[s][dx] != arrow) continue;
      int u_dom = a_act.unit[sg.at(sg.star[s], s)];  // 1_{s*s}
      for (int av = 0; av < a.n; ++av) {
        int arg = a.m(u_dom, av);
        check(a_act.in_domain(s, arg), "1_{s*s} a lies in the domain of alpha_s");
        int img = dst.classmap[a_act.apply(s, arg)];
        int cls = src.classmap[av];
        if (map[cls] < 0)
          map[cls] = img;
        else
          check(map[cls] == img,
                "germ sheaf action is independent of the representatives");
      }
    }
    for (int cls = 0; cls < src.r_lambda->n; ++cls)
      check(map[cls] >= 0, "every stalk class receives an image");
    sheaf.act[arrow] = std::move(map);
  }
  out.sheaf = validate_ring_sheaf(std::move(sheaf));
  return out;
}

}  // namespace

GermSheaf germ_sheaf_on_pierce(ActionPtr act) {
  PierceSpectrum sp = pierce_spectrum(act->A);
  return germ_sheaf_impl(std::move(act), std::move(sp));
}

GermSheaf germ_sheaf_on_pierce(ActionPtr act, std::vector<int> designated_b) {
  PierceSpectrum sp = pierce_spectrum(act->A, std::move(designated_b));
  return germ_sheaf_impl(std::move(act), std::move(sp));
}

IsoReport check_main_theorem(ActionPtr act, long long limit) {
  GermSheaf gs = germ_sheaf_on_pierce(act);
  const SpectralAction& a_act = *act;
  const InverseSemigroup& sg = *a_act.S;
  const FiniteRing& a = *a_act.A;

  SkewPtr k = build_skew_ring(act, limit);

  const BisectionSemigroup& stilde = gs.germ.u_semigroup;
  DiagAction td = tilde_action(gs.sheaf, stilde, limit);
  SkewPtr k2 = build_skew_ring(td.action, limit);

  // Gelfand: A -> Gamma_c(A-hat, O_A) through the Pierce stalks.
  std::vector<int> psi(a.n), psi_inv(td.diag_ring->n, -1);
  for (int x = 0; x < a.n; ++x) {
    psi[x] = td.diag.encode(gelfand(gs.stalks, td.diag, x));
    check(psi_inv[psi[x]] < 0, "Gelfand map is injective");
    psi_inv[psi[x]] = x;
  }
  RingHom psi_hom{a_act.A, td.diag_ring, psi};
  check(is_isomorphism(psi_hom), "Gelfand map is a ring isomorphism");

  // Hat/tilde compatibility: (alpha_s(a))-hat = tilde-alpha_{U(s)}(a-hat).
  for (int s = 0; s < sg.n; ++s) {
    int u = gs.germ.u_of[s];
    for (int av = 0; av < a.n; ++av) {
      if (!a_act.in_domain(s, av)) continue;
      check(td.action->in_domain(u, psi[av]),
            "a in D_{s*} puts a-hat in the tilde domain");
      check(psi[a_act.apply(s, av)] == td.action->apply(u, psi[av]),
            "hat and tilde actions are compatible");
    }
  }

  // pi : A x| S -> Gamma_c(A-hat,O_A) x| S~.
  CovariantSystem sys;
  sys.target = k2->ring_ptr();
  sys.theta.resize(a.n);
  for (int x = 0; x < a.n; ++x) sys.theta[x] = k2->theta(psi[x]);
  sys.phi.resize(sg.n);
  for (int s = 0; s < sg.n; ++s) sys.phi[s] = k2->phi(gs.germ.u_of[s]);
  RingHom pi = induced_hom(*k, sys);

  // pi' : the inverse system; phi'(U(s)) must not depend on s.
  CovariantSystem sys2;
  sys2.target = k->ring_ptr();
  sys2.theta.resize(td.diag_ring->n);
  for (int i = 0; i < td.diag_ring->n; ++i) sys2.theta[i] = k->theta(psi_inv[i]);
  sys2.phi.assign(stilde.sg.n, -1);
  for (int s = 0; s < sg.n; ++s) {
    int u = gs.germ.u_of[s];
    if (sys2.phi[u] < 0)
      sys2.phi[u] = k->phi(s);
    else
      check(sys2.phi[u] == k->phi(s),
            "U(s) = U(t) forces 1_{ss*} delta_s = 1_{tt*} delta_t mod N");
  }
  for (int u = 0; u < stilde.sg.n; ++u)
    check(sys2.phi[u] >= 0, "every element of S~ comes from some s");
  RingHom pi2 = induced_hom(*k2, sys2);

  for (int i = 0; i < k->ring().n; ++i)
    check(pi2.map[pi.map[i]] == i, "pi' inverts pi");
  for (int i = 0; i < k2->ring().n; ++i)
    check(pi.map[pi2.map[i]] == i, "pi inverts pi'");

  // Compose with the factor-through map on the germ groupoid to land in the
  // convolution algebra.
  ConvAlgebra full(gs.sheaf, limit);
  RingPtr full_ring = full.as_ring_ptr();
  CovariantSystem hat_sys = hat_system(td, full, full_ring);
  RingHom pi_ft = induced_hom(*k2, hat_sys);

  RingHom bridge{k->ring_ptr(), full_ring, std::vector<int>(k->ring().n)};
  for (int i = 0; i < k->ring().n; ++i) bridge.map[i] = pi_ft.map[pi.map[i]];
  return report_from_hom("main_theorem", bridge);
}

}  // namespace gckit
