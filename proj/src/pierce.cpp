#include "gckit/pierce.hpp"

#include <algorithm>

namespace gckit {

namespace {

PierceSpectrum finish_spectrum(RingPtr r, IdempotentAlgebra b) {
  if (!has_local_units(*r, b.elem))
    fail(errc::not_local_units, "B is not a set of local units for R");
  PierceSpectrum sp;
  sp.R = std::move(r);
  sp.B = std::move(b);
  sp.atoms = sp.B.alg.atoms();
  for (int a : sp.atoms) {
    Character c;
    c.lam.assign(sp.B.alg.n, 0);
    for (int x = 0; x < sp.B.alg.n; ++x)
      if (sp.B.alg.leq(a, x)) c.lam[x] = 1;
    check(is_character(sp.B.alg, c), "atom up-sets are characters");
    sp.chars.push_back(std::move(c));
  }
  check(sp.chars.size() == characters(sp.B.alg).size(),
        "atoms exhaust the characters of a finite algebra");
  return sp;
}

}  // namespace

PierceSpectrum pierce_spectrum(RingPtr r) {
  IdempotentAlgebra b = from_central_idempotents(r);
  return finish_spectrum(std::move(r), std::move(b));
}

PierceSpectrum pierce_spectrum(RingPtr r, std::vector<int> b_ring_elems) {
  IdempotentAlgebra b = boolean_subalgebra(r, std::move(b_ring_elems));
  return finish_spectrum(std::move(r), std::move(b));
}

PierceStalk pierce_stalk(const PierceSpectrum& sp, int point) {
  const FiniteRing& r = *sp.R;
  const Character& lam = sp.chars[point];

  std::vector<int> members;
  for (int x = 0; x < r.n; ++x) {
    bool killed = false;
    for (int bi = 0; bi < sp.B.alg.n && !killed; ++bi)
      if (lam.lam[bi] && r.m(sp.B.elem[bi], x) == r.zero) killed = true;
    if (killed) members.push_back(x);
  }
  QuotientRing q = quotient_ring(sp.R, members);
  check(q.ring->one.has_value(), "Pierce stalks are unital");
  for (int bi = 0; bi < sp.B.alg.n; ++bi)
    if (lam.lam[bi])
      check(q.projection.map[sp.B.elem[bi]] == *q.ring->one,
            "[e] is the identity of R_lambda for every e in the ultrafilter");

  // Independent description: the direct limit of the corners eR stabilizes at
  // the minimum of the ultrafilter, i.e. the atom's corner.
  int atom_elem = sp.B.elem[sp.atoms[point]];
  std::vector<int> corner_members = corner(r, atom_elem);
  check(corner_members.size() == static_cast<std::size_t>(q.ring->n),
        "corner description has the size of R/I_lambda");
  std::vector<int> corner_index(r.n, -1);
  for (int i = 0; i < static_cast<int>(corner_members.size()); ++i)
    corner_index[corner_members[i]] = i;
  // [x] -> atom x must be a well-defined bijective ring map.
  std::vector<int> to_corner(q.ring->n, -1);
  for (int x = 0; x < r.n; ++x) {
    int cls = q.projection.map[x];
    int img = corner_index[r.m(atom_elem, x)];
    check(img >= 0, "atom x lands in the corner");
    if (to_corner[cls] < 0)
      to_corner[cls] = img;
    else
      check(to_corner[cls] == img, "corner map is constant on cosets");
  }
  std::vector<char> hit(corner_members.size(), 0);
  for (int v : to_corner) {
    check(v >= 0 && !hit[v], "corner map is bijective");
    hit[v] = 1;
  }
  for (int i = 0; i < q.ring->n; ++i)
    for (int j = 0; j < q.ring->n; ++j) {
      int x = corner_members[to_corner[i]], y = corner_members[to_corner[j]];
      check(to_corner[q.ring->a(i, j)] == corner_index[r.a(x, y)],
            "corner map is additive");
      check(to_corner[q.ring->m(i, j)] == corner_index[r.m(x, y)],
            "corner map is multiplicative");
    }

  PierceStalk st;
  st.point = point;
  st.i_lambda = std::move(members);
  st.r_lambda = q.ring;
  st.classmap = q.projection.map;
  return st;
}

PierceSheaf pierce_sheaf(const PierceSpectrum& sp) {
  int np = static_cast<int>(sp.atoms.size());
  if (np == 0)
    fail(errc::not_local_units,
         "trivial Boolean algebra: the spectrum has no points");
  PierceSheaf out;
  RingSheaf sheaf;
  sheaf.base = make_groupoid(FiniteGroupoid::units_groupoid(np));
  for (int p = 0; p < np; ++p) {
    out.stalks.push_back(pierce_stalk(sp, p));
    sheaf.stalk.push_back(out.stalks.back().r_lambda);
    std::vector<int> id(out.stalks.back().r_lambda->n);
    for (int i = 0; i < out.stalks.back().r_lambda->n; ++i) id[i] = i;
    sheaf.act.push_back(std::move(id));
  }
  out.sheaf = validate_ring_sheaf(std::move(sheaf));
  return out;
}

ConvAlgebra::Elem gelfand(const PierceSheaf& ps, const ConvAlgebra& alg, int r) {
  ConvAlgebra::Elem f = alg.zero();
  for (int p = 0; p < static_cast<int>(ps.stalks.size()); ++p)
    f[alg.base().unit[p]] = ps.stalks[p].classmap[r];
  return f;
}

PierceIso pierce_iso(const PierceSpectrum& sp, long long limit) {
  PierceSheaf ps = pierce_sheaf(sp);
  ConvAlgebra alg(ps.sheaf, limit);
  const FiniteRing& r = *sp.R;

  RingPtr section_ring = alg.as_ring_ptr();
  std::vector<int> map(r.n);
  for (int x = 0; x < r.n; ++x) map[x] = alg.encode(gelfand(ps, alg, x));
  RingHom psi{sp.R, section_ring, map};
  check(is_ring_hom(psi), "Psi is a ring homomorphism");

  std::vector<int> inverse(section_ring->n, -1);
  for (int x = 0; x < r.n; ++x) {
    check(inverse[psi.map[x]] < 0, "Psi is injective");
    inverse[psi.map[x]] = x;
  }
  for (int i = 0; i < section_ring->n; ++i)
    check(inverse[i] >= 0, "Psi is surjective onto the section ring");

  // Support control: e r = r confines r-hat to D(e).
  for (int x = 0; x < r.n; ++x)
    for (int bi = 0; bi < sp.B.alg.n; ++bi) {
      int e = sp.B.elem[bi];
      if (r.m(e, x) != x) continue;
      for (int p = 0; p < static_cast<int>(sp.atoms.size()); ++p)
        if (!sp.chars[p].lam[bi])
          check(ps.stalks[p].classmap[x] == ps.stalks[p].r_lambda->zero,
                "r-hat vanishes outside D(e) when e r = r");
    }

  PierceIso out{std::move(ps), std::move(alg), std::move(psi), std::move(inverse)};
  return out;
}

BooleanAction hat_action(const SpectralAction& act, const PierceSpectrum& sp) {
  const InverseSemigroup& sg = *act.S;
  const FiniteRing& a = *act.A;
  check(sp.R->n == a.n && sp.R->mul == a.mul, "spectrum belongs to the acted ring");

  int np = static_cast<int>(sp.atoms.size());
  auto b_index = [&](int ring_elem) {
    for (int i = 0; i < sp.B.alg.n; ++i)
      if (sp.B.elem[i] == ring_elem) return i;
    fail(errc::not_spectral,
         "B is not invariant under e -> alpha_{s*}(e 1_{ss*})",
         a.label(ring_elem));
  };

  BooleanAction out;
  out.S = act.S;
  out.n_points = np;
  out.rho.assign(sg.n, std::vector<int>(np, -1));
  for (int s = 0; s < sg.n; ++s) {
    int ss = sg.at(s, sg.star[s]);
    int sstar_s = sg.at(sg.star[s], s);
    int u_range = act.unit[ss];       // 1_{ss*}
    int u_dom = act.unit[sstar_s];    // 1_{s*s}
    int bi_range = b_index(u_range);
    int bi_dom = b_index(u_dom);
    bool dom_empty = true, range_empty = true;
    for (int p = 0; p < np; ++p) {
      if (sp.chars[p].lam[bi_range]) range_empty = false;
      if (!sp.chars[p].lam[bi_dom]) continue;  // lambda outside D-hat_{s*}
      dom_empty = false;
      // alpha-hat_s(lambda)(e) = lambda(alpha_{s*}(e 1_{ss*}))
      std::vector<std::uint8_t> img(sp.B.alg.n, 0);
      for (int bi = 0; bi < sp.B.alg.n; ++bi) {
        int arg = a.m(sp.B.elem[bi], u_range);
        check(act.in_domain(sg.star[s], arg), "e 1_{ss*} lies in D_s");
        img[bi] = sp.chars[p].lam[b_index(act.apply(sg.star[s], arg))];
      }
      int target = -1;
      for (int q = 0; q < np; ++q)
        if (sp.chars[q].lam == img) {
          target = q;
          break;
        }
      check(target >= 0, "alpha-hat_s(lambda) is a character of B");
      check(img[bi_range] == 1, "alpha-hat_s(lambda) lies in D-hat_s");
      out.rho[s][p] = target;
    }
    check(dom_empty == (u_dom == a.zero),
          "D-hat_{s*} empty iff 1_{s*s} = 0");
    check(range_empty == (u_range == a.zero),
          "D-hat_s empty iff 1_{ss*} = 0");
  }
  out.validate();
  // alpha-hat_{s*} alpha-hat_s is the identity on D-hat_{s*}.
  for (int s = 0; s < sg.n; ++s)
    for (int p = 0; p < np; ++p)
      if (out.rho[s][p] >= 0)
        check(out.rho[sg.star[s]][out.rho[s][p]] == p,
              "alpha-hat_{s*} inverts alpha-hat_s");
  return out;
}

}  // namespace gckit
