// Acceptance gate: one line per criterion, each with its runtime budget.
// Usage: acceptance [path-to-cli] [path-to-data-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "gckit/boolalg.hpp"
#include "gckit/conv.hpp"
#include "gckit/equiv.hpp"
#include "gckit/pierce.hpp"

using namespace gckit;

namespace {

struct Criterion {
  int number;
  std::string description;
  long long budget_ms;
  std::function<bool(std::string&)> run;
};

bool failed_any = false;

void run_criterion(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = c.run(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool in_budget = ms < c.budget_ms;
  if (!ok || !in_budget) failed_any = true;
  std::cout << "criterion " << c.number << ": "
            << ((ok && in_budget) ? "PASS" : "FAIL") << " (" << ms << " ms / "
            << c.budget_ms << " ms) " << c.description;
  if (!detail.empty()) std::cout << " -- " << detail;
  if (!in_budget) std::cout << " -- over budget";
  std::cout << std::endl;
}

RingPtr z2z2() {
  return make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
}

ActionPtr chain2_action() {
  return chain_action(chain_semilattice(2), z2z2(), {{0, 1, 2, 3}, {0, 2}});
}

ActionPtr swap_action() {
  return group_action(cyclic_group(2), z2z2(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

SheafPtr swap_sheaf() {
  auto base = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  RingSheaf o;
  o.base = base;
  o.stalk = {z2z2()};
  o.act = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  return validate_ring_sheaf(std::move(o));
}

SheafPtr crossed_swap_sheaf() {
  auto base = make_groupoid(FiniteGroupoid::pair_groupoid(2));
  RingSheaf o;
  o.base = base;
  o.stalk = {z2z2(), z2z2()};
  std::vector<int> id = {0, 1, 2, 3}, swap = {0, 2, 1, 3};
  o.act = {id, swap, swap, id};
  return validate_ring_sheaf(std::move(o));
}

SheafPtr mixed_units_sheaf(int points) {
  auto base = make_groupoid(FiniteGroupoid::units_groupoid(points));
  RingSheaf o;
  o.base = base;
  std::vector<int> mods = {2, 3, 4};
  for (int x = 0; x < points; ++x) {
    auto r = make_ring(FiniteRing::zn(mods[x % 3]));
    std::vector<int> id(r->n);
    std::iota(id.begin(), id.end(), 0);
    o.stalk.push_back(std::move(r));
    o.act.push_back(std::move(id));
  }
  return validate_ring_sheaf(std::move(o));
}

// The grid shared by criteria 3, 4, 8 and 9.
struct GridEntry {
  std::string name;
  SheafPtr sheaf;
  bool constant;
  RingPtr coeff;  // for constant entries
};

std::vector<GridEntry> convolution_grid() {
  std::vector<GridEntry> grid;
  std::vector<std::pair<std::string, GroupoidPtr>> bases;
  bases.emplace_back("units1", make_groupoid(FiniteGroupoid::units_groupoid(1)));
  bases.emplace_back("units2", make_groupoid(FiniteGroupoid::units_groupoid(2)));
  bases.emplace_back("units3", make_groupoid(FiniteGroupoid::units_groupoid(3)));
  bases.emplace_back("pair2", make_groupoid(FiniteGroupoid::pair_groupoid(2)));
  bases.emplace_back("z2group",
                     make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2))));
  for (auto& [name, g] : bases) {
    for (int zn : {2, 3, 4}) {
      auto r = make_ring(FiniteRing::zn(zn));
      grid.push_back({name + "/Z" + std::to_string(zn),
                      constant_sheaf(g, r), true, r});
    }
  }
  grid.push_back({"units1/mixed", mixed_units_sheaf(1), false, nullptr});
  grid.push_back({"units2/mixed", mixed_units_sheaf(2), false, nullptr});
  grid.push_back({"units3/mixed", mixed_units_sheaf(3), false, nullptr});
  grid.push_back({"pair2/crossed-swap", crossed_swap_sheaf(), false, nullptr});
  grid.push_back({"z2group/swap", swap_sheaf(), false, nullptr});
  return grid;
}

std::vector<int> steinberg_convolve(const FiniteGroupoid& g, const FiniteRing& r,
                                    const std::vector<int>& f,
                                    const std::vector<int>& h) {
  std::vector<int> out(g.n_arrows, r.zero);
  for (int a = 0; a < g.n_arrows; ++a)
    for (int b = 0; b < g.n_arrows; ++b) {
      int c = g.compose(a, b);
      if (c >= 0) out[c] = r.a(out[c], r.m(f[a], h[b]));
    }
  return out;
}

bool criterion1(std::string& detail) {
  auto i2 = symmetric_inverse_monoid(2);
  if (i2.sg.n != 7 || i2.sg.idempotents.size() != 4) {
    detail = "I_2 counts wrong";
    return false;
  }
  for (int n : {2, 3}) {
    auto s = symmetric_inverse_monoid(n).sg;
    if (n == 3 && s.n != 34) {
      detail = "|I_3| != 34";
      return false;
    }
    for (int a = 0; a < s.n; ++a)
      for (int b = 0; b < s.n; ++b)
        if (s.star[s.at(a, b)] != s.at(s.star[b], s.star[a])) {
          detail = "(st)* != t*s*";
          return false;
        }
    for (int e : s.idempotents)
      for (int f : s.idempotents)
        if (s.at(e, f) != s.at(f, e)) {
          detail = "idempotents do not commute";
          return false;
        }
  }
  return true;
}

bool criterion2(std::string& detail) {
  for (int atoms = 0; atoms <= 5; ++atoms) {
    auto b = GenBooleanAlgebra::free_boolean(atoms);
    auto chars = characters(b);  // asserts the character/ultrafilter bijection
    if (static_cast<int>(chars.size()) != atoms) {
      detail = "character count at " + std::to_string(atoms) + " atoms";
      return false;
    }
    auto filters = all_filters(b);
    for (const Filter& f : filters) {
      (void)is_ultrafilter(b, f);  // clause (2): criterion vs maximality
      for (int a = 0; a < b.n; ++a) {
        bool compatible = a != b.zero;
        for (int x : f.members)
          if (b.mt(a, x) == b.zero) compatible = false;
        if (!compatible) continue;
        auto u = extend_to_ultrafilter(b, f, a);  // clause (1)
        if (!is_ultrafilter(b, u)) {
          detail = "extension is not an ultrafilter";
          return false;
        }
      }
    }
    for (int a = 0; a < b.n; ++a)
      for (int c = 0; c < b.n; ++c) {
        if (b.leq(a, c)) continue;
        auto lam = separate(b, a, c);  // clause (3)
        if (lam.lam[a] != 1 || lam.lam[c] != 0) {
          detail = "separation failed";
          return false;
        }
      }
  }
  return true;
}

bool criterion3(std::string& detail) {
  for (const auto& entry : convolution_grid()) {
    ConvAlgebra alg(entry.sheaf, 1 << 10);
    auto ring = alg.as_ring();  // validates associativity and distributivity
    auto bis = all_bisections(entry.sheaf->base);
    for (const auto& u : bis.elems)
      for (const auto& v : bis.elems)
        if (alg.convolve(alg.chi(u), alg.chi(v)) !=
            alg.chi(bisection_product(*entry.sheaf->base, u, v))) {
          detail = "chi product failed on " + entry.name;
          return false;
        }
    if (entry.constant) {
      for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
          if (alg.decode(ring.m(i, j)) !=
              steinberg_convolve(*entry.sheaf->base, *entry.coeff,
                                 alg.decode(i), alg.decode(j))) {
            detail = "oracle disagreement on " + entry.name;
            return false;
          }
    }
  }
  return true;
}

bool criterion4(std::string& detail) {
  for (const auto& entry : convolution_grid()) {
    ConvAlgebra alg(entry.sheaf, 1 << 10);
    auto cen = alg.center();
    std::vector<int> central_encodings, class_encodings;
    for (const auto& f : cen) central_encodings.push_back(alg.encode(f));
    for (long long i = 0; i < alg.carrier_size(); ++i)
      if (alg.is_class_function(alg.decode(static_cast<int>(i))))
        class_encodings.push_back(static_cast<int>(i));
    std::sort(central_encodings.begin(), central_encodings.end());
    if (central_encodings != class_encodings) {
      detail = "center != class functions on " + entry.name;
      return false;
    }
    if (entry.name == "pair2/Z2" && cen.size() != 2) {
      detail = "matrix-algebra center size";
      return false;
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  // Group case: N = 0 and the quotient is the group ring, table for table.
  auto kg = build_skew_ring(
      trivial_group_action(cyclic_group(2), make_ring(FiniteRing::zn(2))));
  if (kg->n_size() != 1) {
    detail = "group case has N != 0";
    return false;
  }
  auto g = make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2)));
  ConvAlgebra group_ring(constant_sheaf(g, make_ring(FiniteRing::zn(2))));
  auto conv_ring = group_ring.as_ring_ptr();
  std::vector<int> map(kg->ring().n);
  for (int i = 0; i < kg->ring().n; ++i) {
    auto rep = kg->coset_rep(i);
    map[i] = group_ring.encode({rep[0], rep[1]});
  }
  if (!is_isomorphism(RingHom{kg->ring_ptr(), conv_ring, map})) {
    detail = "group ring tables differ";
    return false;
  }
  // Two-chain example; Theta injectivity and Theta(B) local units are
  // asserted inside the construction for every instance.
  auto kc = build_skew_ring(chain2_action());
  if (kc->n_size() != 2 || kc->ring().n != 4) {
    detail = "two-chain sizes wrong";
    return false;
  }
  std::vector<int> theta_map(4);
  for (int a = 0; a < 4; ++a) theta_map[a] = kc->theta(a);
  if (!is_isomorphism(RingHom{kc->action().A, kc->ring_ptr(), theta_map})) {
    detail = "A x| S is not A on the two-chain";
    return false;
  }
  (void)build_skew_ring(swap_action());
  return true;
}

bool criterion6(std::string& detail) {
  auto act = chain2_action();
  auto k = build_skew_ring(act);
  std::vector<RingPtr> targets;
  for (int n = 1; n <= 8; ++n) targets.push_back(make_ring(FiniteRing::zn(n)));
  targets.push_back(z2z2());
  targets.push_back(make_ring(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(4))));
  targets.push_back(make_ring(FiniteRing::product(
      FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)),
      FiniteRing::zn(2))));
  targets.push_back(make_ring(FiniteRing::matrix_ring(2, 2, true)));

  for (const auto& target : targets) {
    auto pis = enumerate_ring_homs(k->ring(), *target);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> images;
    for (const auto& pi : pis) {
      std::vector<int> th(act->A->n), ph(act->S->n);
      for (int x = 0; x < act->A->n; ++x) th[x] = pi[k->theta(x)];
      for (int x = 0; x < act->S->n; ++x) ph[x] = pi[k->phi(x)];
      try {
        validate_covariant(*act, CovariantSystem{target, th, ph});
      } catch (const error& e) {
        detail = std::string("restriction not covariant: ") + e.what();
        return false;
      }
      images.emplace_back(std::move(th), std::move(ph));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      detail = "restriction map not injective";
      return false;
    }
    // Count covariant systems and check each induces a homomorphism that
    // restricts back to it.
    std::size_t systems = 0;
    for (const auto& th : enumerate_ring_homs(*act->A, *target)) {
      std::vector<int> ph(act->S->n, 0);
      for (ph[0] = 0; ph[0] < target->n; ++ph[0])
        for (ph[1] = 0; ph[1] < target->n; ++ph[1]) {
          CovariantSystem sys{target, th, ph};
          try {
            validate_covariant(*act, sys);
          } catch (const error&) {
            continue;
          }
          ++systems;
          auto pi = induced_hom(*k, sys);
          for (int x = 0; x < act->A->n; ++x)
            if (pi.map[k->theta(x)] != th[x]) {
              detail = "induced map does not restrict to theta";
              return false;
            }
          for (int x = 0; x < act->S->n; ++x)
            if (pi.map[k->phi(x)] != ph[x]) {
              detail = "induced map does not restrict to phi";
              return false;
            }
        }
    }
    if (systems != pis.size()) {
      detail = "counts differ on a target of size " + std::to_string(target->n) +
               ": " + std::to_string(pis.size()) + " homs vs " +
               std::to_string(systems) + " systems";
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& detail) {
  std::vector<RingPtr> rings;
  rings.push_back(z2z2());
  rings.push_back(make_ring(FiniteRing::zn(6)));
  rings.push_back(make_ring(FiniteRing::product(
      FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)),
      FiniteRing::zn(2))));
  rings.push_back(make_ring(FiniteRing::matrix_ring(2, 2, true)));
  for (const auto& r : rings) {
    auto iso = pierce_iso(pierce_spectrum(r));
    if (!is_isomorphism(iso.psi)) {
      detail = "Psi not an isomorphism";
      return false;
    }
    if (r->commutative()) {
      for (const auto& st : iso.sheaf.stalks) {
        int idem = 0;
        for (int e = 0; e < st.r_lambda->n; ++e)
          if (st.r_lambda->is_idempotent(e)) ++idem;
        if (idem != 2 && st.r_lambda->n > 1) {
          detail = "decomposable commutative stalk";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion8(std::string& detail) {
  std::vector<GridEntry> grid;
  grid.push_back({"units2/Z2",
                  constant_sheaf(make_groupoid(FiniteGroupoid::units_groupoid(2)),
                                 make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"z2group/Z2",
                  constant_sheaf(
                      make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2))),
                      make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"pair2/Z2",
                  constant_sheaf(make_groupoid(FiniteGroupoid::pair_groupoid(2)),
                                 make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"units2/mixed", mixed_units_sheaf(2), false, nullptr});
  grid.push_back({"z2group/swap", swap_sheaf(), false, nullptr});
  grid.push_back({"pair2/crossed-swap", crossed_swap_sheaf(), false, nullptr});
  for (const auto& entry : grid) {
    for (bool singles : {false, true}) {
      auto sub = singles ? singleton_bisections(entry.sheaf->base)
                         : all_bisections(entry.sheaf->base);
      auto rep = check_factor_through(entry.sheaf, sub, 1 << 17);
      if (!rep.ok()) {
        detail = entry.name + (singles ? " singles " : " all ") + rep.to_json();
        return false;
      }
    }
  }
  return true;
}

bool criterion9(std::string& detail) {
  std::vector<GridEntry> grid;
  grid.push_back({"units2/Z2",
                  constant_sheaf(make_groupoid(FiniteGroupoid::units_groupoid(2)),
                                 make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"z2group/Z2",
                  constant_sheaf(
                      make_groupoid(FiniteGroupoid::group_groupoid(cyclic_group(2))),
                      make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"pair2/Z2",
                  constant_sheaf(make_groupoid(FiniteGroupoid::pair_groupoid(2)),
                                 make_ring(FiniteRing::zn(2))),
                  true, nullptr});
  grid.push_back({"units2/mixed", mixed_units_sheaf(2), false, nullptr});
  grid.push_back({"z2group/swap", swap_sheaf(), false, nullptr});
  grid.push_back({"pair2/crossed-swap", crossed_swap_sheaf(), false, nullptr});
  for (const auto& entry : grid) {
    ConvAlgebra alg(entry.sheaf, 1 << 10);
    auto ring = alg.as_ring_ptr();
    auto rep = disintegration_module_roundtrip(alg, ring,
                                               FiniteModule::regular(ring),
                                               1 << 10);
    if (!rep.ok()) {
      detail = entry.name + " regular " + rep.to_json();
      return false;
    }
    const FiniteGroupoid& g = *entry.sheaf->base;
    for (unsigned mask = 0; mask < (1u << g.n_objects); ++mask) {
      Bisection u;
      for (int x = 0; x < g.n_objects; ++x)
        if (mask & (1u << x)) u.push_back(g.unit[x]);
      std::sort(u.begin(), u.end());
      auto m = submodule(ring, left_multiples(*ring, alg.encode(alg.chi(u))));
      auto rs = disintegration_module_roundtrip(alg, ring, m, 1 << 10);
      if (!rs.ok()) {
        detail = entry.name + " summand " + rs.to_json();
        return false;
      }
    }
    ModuleSheaf msheaf;
    msheaf.over = entry.sheaf;
    for (int x = 0; x < g.n_objects; ++x)
      msheaf.stalk.push_back(FiniteModule::regular(entry.sheaf->stalk[x]));
    msheaf.act = entry.sheaf->act;
    auto rv = disintegration_sheaf_roundtrip(alg, ring, msheaf, 1 << 10);
    if (!rv.ok()) {
      detail = entry.name + " sheaf side " + rv.to_json();
      return false;
    }
  }
  return true;
}

bool criterion10(std::string& detail) {
  struct Case {
    std::string name;
    ActionPtr act;
    long long size;
  };
  std::vector<Case> cases;
  cases.push_back({"trivial Z2 on Z2",
                   trivial_group_action(cyclic_group(2),
                                        make_ring(FiniteRing::zn(2))),
                   4});
  cases.push_back({"two-chain on Z2xZ2", chain2_action(), 4});
  cases.push_back({"swap on Z2xZ2", swap_action(), 16});
  for (auto& c : cases) {
    // Mutual inversion of pi and pi' and the hat/tilde compatibility for
    // every (s, a) are asserted inside check_main_theorem.
    auto rep = check_main_theorem(c.act, 1 << 17);
    if (!rep.ok() || rep.lhs_size != c.size || rep.rhs_size != c.size) {
      detail = c.name + " " + rep.to_json();
      return false;
    }
  }
  return true;
}

std::string g_cli_path, g_data_dir;

int run_command(const std::string& cmd, std::string& output) {
  output.clear();
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    output.append(buf, got);
  int status = pclose(pipe);
  return WEXITSTATUS(status);
}

bool criterion11(std::string& detail) {
  if (g_cli_path.empty() || g_data_dir.empty()) {
    detail = "pass the CLI path and data directory as arguments";
    return false;
  }
  std::string out;
  int rc = run_command("'" + g_cli_path + "' verify '" + g_data_dir +
                           "/all.json' --suite all",
                       out);
  if (rc != 0) {
    detail = "full pack exited " + std::to_string(rc);
    return false;
  }
  rc = run_command("'" + g_cli_path + "' verify '" + g_data_dir +
                       "/corrupted.json' --suite all",
                   out);
  if (rc != 1) {
    detail = "corrupted pack exited " + std::to_string(rc) + " instead of 1";
    return false;
  }
  if (out.find("NotAssociative") == std::string::npos) {
    detail = "corrupted pack did not print a witness";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  if (argc > 2) g_data_dir = argv[2];

  std::vector<Criterion> criteria = {
      {1, "inverse-semigroup kernel (I_2, I_3)", 1000, criterion1},
      {2, "Stone duality up to five atoms", 1000, criterion2},
      {3, "convolution ring axioms, chi products, classical oracle", 10000,
       criterion3},
      {4, "center equals the class functions", 10000, criterion4},
      {5, "skew-ring kernel (group case, two-chain)", 5000, criterion5},
      {6, "adjunction bijection by double enumeration", 60000, criterion6},
      {7, "sheaf representation of rings", 5000, criterion7},
      {8, "factor-through isomorphism on the grid", 60000, criterion8},
      {9, "disintegration round trips", 30000, criterion9},
      {10, "skew rings as convolution algebras", 60000, criterion10},
      {11, "command-line gate", 300000, criterion11},
  };
  for (const auto& c : criteria) run_criterion(c);
  return failed_any ? 1 : 0;
}
