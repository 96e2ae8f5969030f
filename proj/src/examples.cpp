#include "gckit/examples.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "gckit/boolalg.hpp"
#include "gckit/conv.hpp"
#include "gckit/equiv.hpp"
#include "gckit/pierce.hpp"

namespace gckit {

namespace {

RingPtr z2z2() {
  return make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
}

ActionPtr swap_action() {
  return group_action(cyclic_group(2), z2z2(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

ActionPtr chain2_action() {
  return chain_action(chain_semilattice(2), z2z2(), {{0, 1, 2, 3}, {0, 2}});
}

std::vector<WorkedExample> build_examples() {
  std::vector<WorkedExample> ex;
  auto add = [&](std::string name, std::string summary,
                 std::function<bool(std::ostream&)> run) {
    ex.push_back({std::move(name), std::move(summary), std::move(run)});
  };

  add("i2_monoid", "partial bijections of a 2-set: 7 elements, 4 idempotents",
      [](std::ostream& os) {
        auto i2 = symmetric_inverse_monoid(2);
        os << "|I_2| = " << i2.sg.n
           << ", idempotents = " << i2.sg.idempotents.size() << "\n";
        return i2.sg.n == 7 && i2.sg.idempotents.size() == 4;
      });

  add("i2_order", "the empty map sits below everything; restrictions order I_2",
      [](std::ostream& os) {
        auto i2 = symmetric_inverse_monoid(2);
        int empty = i2.index_of({-1, -1});
        int id1 = i2.index_of({-1, 1});
        int full = i2.index_of({0, 1});
        bool ok = true;
        for (int t = 0; t < i2.sg.n; ++t) ok = ok && i2.sg.leq(empty, t);
        ok = ok && i2.sg.leq(id1, full);
        os << "empty below all: yes; id|{1} <= id: "
           << (i2.sg.leq(id1, full) ? "yes" : "no") << "\n";
        return ok;
      });

  add("i2_rank_map", "nonempty->top, empty->bottom is not a homomorphism",
      [](std::ostream& os) {
        auto i2 = symmetric_inverse_monoid(2);
        auto chain = chain_semilattice(2);
        std::vector<int> map(i2.sg.n, 0);
        map[i2.index_of({-1, -1})] = 1;
        bool hom = is_homomorphism(map, i2.sg, chain);
        os << "is_homomorphism = " << (hom ? "true" : "false")
           << " (two rank-1 maps compose to the empty map)\n";
        return !hom;
      });

  add("central_idempotents", "central idempotents of Z_4, Z_6 and triangular matrices",
      [](std::ostream& os) {
        auto z4 = FiniteRing::zn(4), z6 = FiniteRing::zn(6);
        auto tri = FiniteRing::matrix_ring(2, 2, true);
        auto c4 = central_idempotents(z4), c6 = central_idempotents(z6);
        auto ct = central_idempotents(tri);
        os << "Z_4: {0,1} -> " << c4.size() << " found\n";
        os << "Z_6: {0,1,3,4} -> ";
        for (int e : c6) os << e << " ";
        os << "\nupper triangular over Z_2: " << ct.size()
           << " central idempotents (of 8 elements)\n";
        return c4 == std::vector<int>{0, 1} &&
               c6 == std::vector<int>{0, 1, 3, 4} && ct.size() == 2;
      });

  add("crt_z6", "the residue map Z_6 -> Z_2 x Z_3 is an isomorphism",
      [](std::ostream& os) {
        auto z6 = make_ring(FiniteRing::zn(6));
        auto prod = make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)));
        std::vector<int> crt(6);
        for (int i = 0; i < 6; ++i) crt[i] = (i % 2) * 3 + (i % 3);
        bool ok = is_isomorphism(RingHom{z6, prod, crt});
        os << "is_isomorphism = " << (ok ? "true" : "false") << "\n";
        return ok;
      });

  add("local_units_z2z2", "local units need a directed cover",
      [](std::ostream& os) {
        auto r = FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2));
        bool without_top = has_local_units(r, {2, 1});
        bool with_top = has_local_units(r, {2, 1, 3});
        os << "{(1,0),(0,1)}: " << (without_top ? "yes" : "no")
           << "; adding (1,1): " << (with_top ? "yes" : "no") << "\n";
        return !without_top && with_top;
      });

  add("boolean_z6", "idempotents of Z_6 form a four-element Boolean algebra",
      [](std::ostream& os) {
        auto b = from_central_idempotents(make_ring(FiniteRing::zn(6)));
        os << "|B| = " << b.alg.n << ", atoms = " << b.alg.atoms().size() << "\n";
        return b.alg.n == 4 && b.alg.atoms().size() == 2;
      });

  add("ultrafilter_extension", "extending {top} by an atom, and an incompatible pick",
      [](std::ostream& os) {
        auto b = GenBooleanAlgebra::free_boolean(2);
        auto u = extend_to_ultrafilter(b, Filter{{3}}, 1);
        os << "extension of {top} by atom 1: {";
        for (int x : u.members) os << x << " ";
        os << "}\n";
        bool threw = false;
        try {
          extend_to_ultrafilter(b, Filter{{1, 3}}, 2);
        } catch (const error& e) {
          threw = e.code == errc::incompatible;
          os << "atom 2 against {atom 1, top}: " << e.what() << "\n";
        }
        return u.members == std::vector<int>{1, 3} && threw;
      });

  add("ultrafilter_criterion", "{top} is not maximal; {atom, top} is",
      [](std::ostream& os) {
        auto b = GenBooleanAlgebra::free_boolean(2);
        bool top_only = is_ultrafilter(b, Filter{{3}});
        bool atom_top = is_ultrafilter(b, Filter{{1, 3}});
        os << "{top}: " << (top_only ? "ultra" : "not ultra")
           << "; {atom,top}: " << (atom_top ? "ultra" : "not ultra") << "\n";
        return !top_only && atom_top;
      });

  add("three_atom_characters", "a three-atom algebra has exactly three characters",
      [](std::ostream& os) {
        auto b = GenBooleanAlgebra::free_boolean(3);
        auto chars = characters(b);
        os << "characters = " << chars.size() << "\n";
        return chars.size() == 3;
      });

  add("separate_atoms", "distinct atoms are separated by a character",
      [](std::ostream& os) {
        auto b = GenBooleanAlgebra::free_boolean(2);
        auto c = separate(b, 1, 2);
        os << "lambda(atom1) = " << int(c.lam[1]) << ", lambda(atom2) = "
           << int(c.lam[2]) << "\n";
        return c.lam[1] == 1 && c.lam[2] == 0;
      });

  add("bisections_z2_group", "a group has only singleton bisections",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
        auto a = all_bisections(g);
        os << "bisections of the one-object Z_2 groupoid: " << a.sg.n << "\n";
        return a.sg.n == 3;
      });

  add("bisections_pair", "the pair groupoid on two points has 7 bisections",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto a = all_bisections(g);
        for (const auto& b : a.elems) os << bisection_label(*g, b) << "\n";
        return a.sg.n == 7;
      });

  add("germ_conditions_pair", "a family missing arrows fails (G1)",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto gc = germ_conditions(*g, {Bisection{}, Bisection{0}});
        auto full = germ_conditions(*g, all_bisections(g).elems);
        os << "partial family: g1 = " << gc.g1 << "; all bisections: g1 = "
           << full.g1 << ", g2 = " << full.g2 << "\n";
        return !gc.g1 && full.g1 && full.g2;
      });

  add("rho_pair", "the bisection {(1,2)} acts by moving point 2 to point 1",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto sub = all_bisections(g);
        auto act = rho_from_bisections(sub);
        int s = sub.index_of({1});
        os << "rho(point 1) = " << act.rho[s][1]
           << ", undefined at point 0: " << (act.rho[s][0] < 0) << "\n";
        return act.rho[s][1] == 0 && act.rho[s][0] == -1;
      });

  add("germ_z2_trivial", "Z_2 acting trivially on a point germifies to Z_2",
      [](std::ostream& os) {
        auto z2 = cyclic_group(2);
        BooleanAction act;
        act.S = std::make_shared<const InverseSemigroup>(z2);
        act.n_points = 1;
        act.rho = {{0}, {0}};
        auto germ = groupoid_of_germs(act);
        os << "germ groupoid: " << germ.gpd->n_arrows << " arrows over "
           << germ.gpd->n_objects << " object\n";
        return germ.gpd->n_arrows == 2;
      });

  add("reconstruction_pair", "germ groupoid of the canonical action recovers the base",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto act = rho_from_bisections(singleton_bisections(g));
        auto germ = groupoid_of_germs(act);
        bool iso = groupoids_isomorphic(*germ.gpd, *g);
        os << "isomorphic to the pair groupoid: " << (iso ? "yes" : "no") << "\n";
        return iso;
      });

  add("convolution_square", "squaring 1 delta_e + 1 delta_g over Z_4 coefficients",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(4))));
        ConvAlgebra::Elem f = {1, 1};
        auto sq = alg.convolve(f, f);
        os << "f*f = " << alg.format(sq) << "\n";
        return sq == ConvAlgebra::Elem{2, 2};
      });

  add("chi_products", "chi_U * chi_V = chi_UV over the pair groupoid",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
        auto bis = all_bisections(g);
        int checked = 0;
        for (const auto& u : bis.elems)
          for (const auto& v : bis.elems) {
            if (alg.convolve(alg.chi(u), alg.chi(v)) !=
                alg.chi(bisection_product(*g, u, v)))
              return false;
            ++checked;
          }
        os << "checked " << checked << " products\n";
        return true;
      });

  add("local_units_conv", "unit subsets give directed local units",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::units_groupoid(2));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
        auto lu = alg.local_units();
        os << lu.size() << " idempotents, directed by union\n";
        return lu.size() == 4;
      });

  add("center_matrix", "the pair-groupoid algebra over Z_2 has a 2-element center",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
        auto cen = alg.center();
        os << "center size = " << cen.size() << " (2x2 matrices over Z_2)\n";
        return cen.size() == 2;
      });

  add("center_group_ring", "a commutative group ring is all center",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
        auto cen = alg.center();
        os << "center size = " << cen.size() << " of 4\n";
        return cen.size() == 4;
      });

  add("span_singletons", "singleton-supported functions span the algebra",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        ConvAlgebra alg(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
        bool ok = alg.spans_by(singleton_bisections(g).elems);
        os << "spans: " << (ok ? "yes" : "no") << "\n";
        return ok;
      });

  add("group_skew_ring", "a trivial group action gives the group ring with N = 0",
      [](std::ostream& os) {
        auto k = build_skew_ring(
            trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2))));
        os << "|N| = " << k->n_size() << ", |A x| S| = " << k->ring().n << "\n";
        return k->n_size() == 1 && k->ring().n == 4;
      });

  add("chain_semilattice_skew", "the two-chain on Z_2 x Z_2 collapses to A",
      [](std::ostream& os) {
        auto k = build_skew_ring(chain2_action());
        os << "|L| = " << k->l_size() << ", |N| = " << k->n_size()
           << ", |A x| S| = " << k->ring().n << "\n";
        std::vector<int> theta_map(4);
        for (int a = 0; a < 4; ++a) theta_map[a] = k->theta(a);
        bool iso = is_isomorphism(
            RingHom{k->action().A, k->ring_ptr(), theta_map});
        os << "Theta is a ring isomorphism onto the quotient: "
           << (iso ? "yes" : "no") << "\n";
        return k->n_size() == 2 && k->ring().n == 4 && iso;
      });

  add("theta_decompositions", "Theta is independent of the chosen splitting",
      [](std::ostream& os) {
        auto act = chain2_action();
        auto k = build_skew_ring(act);
        int tried = 0;
        for (int av = 0; av < 4; ++av)
          for (int af : act->D[1]) {
            int ae = act->A->sub(av, af);
            auto x = k->l_add(k->l_single(0, ae), k->l_single(1, af));
            if (k->project(x) != k->theta(av)) return false;
            ++tried;
          }
        os << "checked " << tried << " alternative decompositions\n";
        return true;
      });

  add("pierce_z2z2", "Z_2 x Z_2 as sections over a two-point spectrum",
      [](std::ostream& os) {
        auto iso = pierce_iso(pierce_spectrum(z2z2()));
        os << "atoms = " << iso.sheaf.stalks.size() << ", section ring size = "
           << iso.psi.dst->n << "\n";
        auto f = iso.alg.decode(iso.psi.map[2]);  // (1,0)
        os << "(1,0)-hat = " << iso.alg.format(f) << "\n";
        return is_isomorphism(iso.psi) && iso.sheaf.stalks.size() == 2;
      });

  add("pierce_z6", "Z_6 has stalks Z_2 and Z_3",
      [](std::ostream& os) {
        auto sp = pierce_spectrum(make_ring(FiniteRing::zn(6)));
        std::vector<int> sizes;
        for (std::size_t p = 0; p < sp.atoms.size(); ++p)
          sizes.push_back(pierce_stalk(sp, static_cast<int>(p)).r_lambda->n);
        std::sort(sizes.begin(), sizes.end());
        os << "stalk sizes: ";
        for (int s : sizes) os << s << " ";
        os << "\n";
        bool iso = is_isomorphism(pierce_iso(sp).psi);
        return sizes == std::vector<int>{2, 3} && iso;
      });

  add("pierce_z232", "three atoms for Z_2 x Z_3 x Z_2",
      [](std::ostream& os) {
        auto r = make_ring(FiniteRing::product(
            FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)),
            FiniteRing::zn(2)));
        auto sp = pierce_spectrum(r);
        os << "atoms = " << sp.atoms.size() << "\n";
        return sp.atoms.size() == 3 && is_isomorphism(pierce_iso(sp).psi);
      });

  add("hat_swap", "the coordinate swap exchanges the two spectrum points",
      [](std::ostream& os) {
        auto act = swap_action();
        auto hat = hat_action(*act, pierce_spectrum(act->A));
        os << "alpha-hat_g: 0 -> " << hat.rho[1][0] << ", 1 -> "
           << hat.rho[1][1] << "\n";
        return hat.rho[1][0] == 1 && hat.rho[1][1] == 0;
      });

  add("tilde_pair", "the diagonal action moves values along a bisection",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
        auto sub = all_bisections(g);
        auto da = tilde_action(o, sub, 4096);
        int s = sub.index_of({1});
        bool ok = da.action->apply(s, da.diag.encode({0, 1})) ==
                  da.diag.encode({1, 0});
        os << "value at point 2 moved to point 1: " << (ok ? "yes" : "no") << "\n";
        return ok;
      });

  add("factor_through_z2", "group case of the quotient isomorphism",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
        auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
        auto rep = check_factor_through(o, all_bisections(g), 4096);
        os << rep.to_json() << "\n";
        return rep.ok();
      });

  add("steinberg_specialization",
      "constant coefficients: the classical algebra as a skew ring",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::pair_groupoid(2));
        auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
        auto rep = check_factor_through(o, all_bisections(g), 1 << 18);
        os << rep.to_json() << "\n";
        return rep.ok() && rep.lhs_size == 16;
      });

  add("disintegration_regular", "the regular module round trips through its sheaf",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
        auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
        ConvAlgebra alg(o, 4096);
        auto ring = alg.as_ring_ptr();
        auto rep = disintegration_module_roundtrip(alg, ring,
                                                   FiniteModule::regular(ring),
                                                   4096);
        os << rep.to_json() << "\n";
        return rep.ok() && rep.lhs_size == 4;
      });

  add("disintegration_sheaf", "the ring sheaf viewed as modules round trips",
      [](std::ostream& os) {
        auto g = make_groupoid(FiniteGroupoid::units_groupoid(2));
        auto o = constant_sheaf(g, make_ring(FiniteRing::zn(2)));
        ConvAlgebra alg(o, 4096);
        auto ring = alg.as_ring_ptr();
        ModuleSheaf m;
        m.over = o;
        for (int x = 0; x < 2; ++x)
          m.stalk.push_back(FiniteModule::regular(o->stalk[x]));
        m.act = o->act;
        auto rep = disintegration_sheaf_roundtrip(alg, ring, m, 4096);
        os << rep.to_json() << "\n";
        return rep.ok();
      });

  add("germ_sheaf_swap", "the swap action produces a two-point germ groupoid",
      [](std::ostream& os) {
        auto gs = germ_sheaf_on_pierce(swap_action());
        os << gs.germ.gpd->n_objects << " objects, " << gs.germ.gpd->n_arrows
           << " arrows; stalks of size " << gs.sheaf->stalk[0]->n << "\n";
        return gs.germ.gpd->n_arrows == 4;
      });

  add("main_theorem_trivial", "trivial Z_2 on Z_2: both sides the group ring",
      [](std::ostream& os) {
        auto rep = check_main_theorem(
            trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2))));
        os << rep.to_json() << "\n";
        return rep.ok() && rep.lhs_size == 4;
      });

  add("chain_main_theorem", "the two-chain example as a convolution algebra",
      [](std::ostream& os) {
        auto rep = check_main_theorem(chain2_action());
        os << rep.to_json() << "\n";
        return rep.ok() && rep.lhs_size == 4;
      });

  add("swap_main_theorem", "the swap action as a convolution algebra",
      [](std::ostream& os) {
        auto rep = check_main_theorem(swap_action(), 1 << 18);
        os << rep.to_json() << "\n";
        return rep.ok() && rep.lhs_size == 16;
      });

  return ex;
}

}  // namespace

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> ex = build_examples();
  return ex;
}

const WorkedExample& find_example(const std::string& name) {
  for (const auto& e : worked_examples())
    if (e.name == name) return e;
  fail(errc::unknown_example, "unknown example '" + name + "'");
}

}  // namespace gckit
