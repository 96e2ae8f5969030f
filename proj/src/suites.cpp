#include "gckit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>

#include "gckit/conv.hpp"
#include "gckit/equiv.hpp"
#include "gckit/pierce.hpp"

namespace gckit {

int SuiteReport::count(CheckStatus s) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

void SuiteReport::print(std::ostream& os) const {
  for (const auto& c : checks) {
    const char* tag = c.status == CheckStatus::passed   ? "PASS"
                      : c.status == CheckStatus::failed ? "FAIL"
                                                        : "SKIP";
    os << "[" << tag << "] " << suite << "/" << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << suite << ": " << count(CheckStatus::passed) << " passed, "
     << count(CheckStatus::failed) << " failed, " << count(CheckStatus::skipped)
     << " skipped (" << elapsed_ms << " ms)\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",         "boolalg",        "convolution", "center",
      "skew",           "adjunction",     "pierce",      "factor_through",
      "disintegration", "main_theorem",   "all"};
  return names;
}

namespace {

using Runner = std::function<void()>;

void run_check(SuiteReport& rep, const std::string& name, const Runner& body) {
  CheckResult res;
  res.name = name;
  try {
    body();
  } catch (const error& e) {
    if (e.code == errc::size_limit) {
      res.status = CheckStatus::skipped;
      res.detail = e.what();
    } else {
      res.status = CheckStatus::failed;
      res.detail = e.what();
    }
  } catch (const std::exception& e) {
    res.status = CheckStatus::failed;
    res.detail = e.what();
  }
  rep.checks.push_back(std::move(res));
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(errc::invariant_violation, what);
}

void suite_axioms(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    std::string kind = reg.kind(id);
    run_check(rep, "construct " + id, [&] {
      if (kind == "inverse_semigroup") {
        auto s = reg.semigroup(id);
        for (int a = 0; a < s->n; ++a)
          for (int b = 0; b < s->n; ++b)
            require(s->star[s->at(a, b)] == s->at(s->star[b], s->star[a]),
                    "(st)* = t*s*");
      } else if (kind == "ring") {
        reg.ring(id);
      } else if (kind == "groupoid") {
        reg.groupoid(id);
      } else if (kind == "sheaf") {
        reg.sheaf(id);
      } else if (kind == "spectral_action") {
        reg.action(id);
      } else if (kind == "gba") {
        reg.gba(id);
      } else {
        fail(errc::parse_error, "unknown kind '" + kind + "'");
      }
    });
  }
}

void suite_boolalg(InstanceRegistry& reg, SuiteReport& rep) {
  auto exercise = [&](const std::string& name, const GenBooleanAlgebra& b) {
    run_check(rep, "stone duality " + name, [&] {
      auto chars = characters(b);  // asserts character/ultrafilter bijection
      require(chars.size() == b.atoms().size(), "characters match atoms");
      for (int a = 0; a < b.n; ++a)
        for (int c = 0; c < b.n; ++c)
          if (!b.leq(a, c)) {
            auto lam = separate(b, a, c);
            require(lam.lam[a] == 1 && lam.lam[c] == 0, "separation");
          }
      for (const Filter& f : all_filters(b)) (void)is_ultrafilter(b, f);
    });
  };
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) == "gba") {
      exercise(id, reg.gba(id));
    } else if (reg.kind(id) == "ring") {
      exercise(id + " central idempotents",
               from_central_idempotents(reg.ring(id)).alg);
    }
  }
}

void suite_convolution(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "sheaf") continue;
    run_check(rep, "ring axioms " + id, [&] {
      ConvAlgebra alg(reg.sheaf(id), reg.limit);
      (void)alg.as_ring();  // construction verifies associativity etc.
    });
    run_check(rep, "chi products " + id, [&] {
      auto o = reg.sheaf(id);
      ConvAlgebra alg(o, reg.limit);
      auto bis = all_bisections(o->base);
      for (const auto& u : bis.elems)
        for (const auto& v : bis.elems)
          require(alg.convolve(alg.chi(u), alg.chi(v)) ==
                      alg.chi(bisection_product(*o->base, u, v)),
                  "chi_U * chi_V = chi_UV");
    });
    run_check(rep, "identity and local units " + id, [&] {
      auto o = reg.sheaf(id);
      ConvAlgebra alg(o, reg.limit);
      auto ring = alg.as_ring();
      require(ring.one.has_value() &&
                  *ring.one == alg.encode(alg.identity()),
              "chi over the unit space is the identity");
      std::vector<int> encs;
      for (const auto& u : alg.local_units()) encs.push_back(alg.encode(u));
      std::sort(encs.begin(), encs.end());
      require(has_local_units(ring, encs), "local units are directed");
    });
    run_check(rep, "spanned by singleton bisections " + id, [&] {
      auto o = reg.sheaf(id);
      ConvAlgebra alg(o, reg.limit);
      require(alg.spans_by(singleton_bisections(o->base).elems),
              "span by singletons");
    });
  }
}

void suite_center(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "sheaf") continue;
    run_check(rep, "center equals class functions " + id, [&] {
      ConvAlgebra alg(reg.sheaf(id), reg.limit);
      auto cen = alg.center();
      long long class_count = 0;
      for (long long i = 0; i < alg.carrier_size(); ++i) {
        auto f = alg.decode(static_cast<int>(i));
        bool central = std::find(cen.begin(), cen.end(), f) != cen.end();
        bool cls = alg.is_class_function(f);
        require(central == cls, "central iff class function at " + alg.format(f));
        if (cls) ++class_count;
      }
      require(class_count == static_cast<long long>(cen.size()), "counts agree");
    });
  }
}

void suite_skew(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "spectral_action") continue;
    run_check(rep, "skew ring construction " + id, [&] {
      // Construction verifies the product rule, N, Theta/Phi and local units.
      auto k = build_skew_ring(reg.action(id), reg.limit);
      require(k->ring().n >= 1, "non-empty quotient");
    });
  }
}

void suite_adjunction(InstanceRegistry& reg, SuiteReport& rep) {
  std::vector<std::string> targets;
  for (const auto& id : reg.ids())
    if (reg.kind(id) == "ring" && reg.ring(id)->n <= 8) targets.push_back(id);
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "spectral_action") continue;
    for (const auto& tid : targets) {
      run_check(rep, "adjunction " + id + " -> " + tid, [&] {
        auto act = reg.action(id);
        auto k = build_skew_ring(act, reg.limit);
        if (k->ring().n > 16)
          fail(errc::size_limit, "skew ring too large for hom enumeration");
        auto target = reg.ring(tid);
        auto pis = enumerate_ring_homs(k->ring(), *target);
        std::size_t systems = 0;
        for (const auto& th : enumerate_ring_homs(*act->A, *target)) {
          std::vector<int> phi(act->S->n, 0);
          std::function<void(int)> rec = [&](int pos) {
            if (pos == act->S->n) {
              try {
                validate_covariant(*act, CovariantSystem{target, th, phi});
              } catch (const error&) {
                return;
              }
              ++systems;
              return;
            }
            for (phi[pos] = 0; phi[pos] < target->n; ++phi[pos]) rec(pos + 1);
            phi[pos] = 0;
          };
          rec(0);
        }
        require(pis.size() == systems,
                "homomorphisms biject with covariant systems (" +
                    std::to_string(pis.size()) + " vs " +
                    std::to_string(systems) + ")");
      });
    }
  }
}

void suite_pierce(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "ring") continue;
    run_check(rep, "sheaf representation " + id, [&] {
      auto r = reg.ring(id);
      auto iso = pierce_iso(pierce_spectrum(r), reg.limit);
      require(is_isomorphism(iso.psi), "Psi is an isomorphism");
      if (r->commutative()) {
        for (const auto& st : iso.sheaf.stalks) {
          int idem = 0;
          for (int e = 0; e < st.r_lambda->n; ++e)
            if (st.r_lambda->is_idempotent(e)) ++idem;
          require(idem == (st.r_lambda->n == 1 ? 1 : 2),
                  "commutative stalks are indecomposable");
        }
      }
    });
  }
}

void suite_factor_through(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "sheaf") continue;
    for (bool singles : {false, true}) {
      std::string variant = singles ? "singletons" : "all bisections";
      run_check(rep, "factor through " + id + " (" + variant + ")", [&] {
        auto o = reg.sheaf(id);
        auto sub = singles ? singleton_bisections(o->base)
                           : all_bisections(o->base);
        auto report = check_factor_through(o, sub, reg.limit);
        require(report.ok(), report.to_json());
      });
    }
  }
}

void suite_disintegration(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "sheaf") continue;
    run_check(rep, "module round trip " + id, [&] {
      auto o = reg.sheaf(id);
      ConvAlgebra alg(o, reg.limit);
      auto ring = alg.as_ring_ptr();
      auto report = disintegration_module_roundtrip(
          alg, ring, FiniteModule::regular(ring), reg.limit);
      require(report.ok(), report.to_json());
      for (int x = 0; x < o->base->n_objects; ++x) {
        Bisection u = {o->base->unit[x]};
        auto m = submodule(ring, left_multiples(*ring, alg.encode(alg.chi(u))));
        auto rs = disintegration_module_roundtrip(alg, ring, m, reg.limit);
        require(rs.ok(), rs.to_json());
      }
    });
    run_check(rep, "sheaf round trip " + id, [&] {
      auto o = reg.sheaf(id);
      ConvAlgebra alg(o, reg.limit);
      auto ring = alg.as_ring_ptr();
      ModuleSheaf m;
      m.over = o;
      for (int x = 0; x < o->base->n_objects; ++x)
        m.stalk.push_back(FiniteModule::regular(o->stalk[x]));
      m.act = o->act;
      auto report = disintegration_sheaf_roundtrip(alg, ring, m, reg.limit);
      require(report.ok(), report.to_json());
    });
  }
}

void suite_main_theorem(InstanceRegistry& reg, SuiteReport& rep) {
  for (const auto& id : reg.ids()) {
    if (reg.kind(id) != "spectral_action") continue;
    run_check(rep, "skew ring as convolution algebra " + id, [&] {
      auto report = check_main_theorem(reg.action(id), reg.limit);
      require(report.ok(), report.to_json());
    });
  }
}

}  // namespace

SuiteReport run_suite(InstanceRegistry& reg, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    fail(errc::unknown_suite, "unknown suite '" + suite + "'");

  SuiteReport rep;
  rep.suite = suite;
  auto t0 = std::chrono::steady_clock::now();
  auto dispatch = [&](const std::string& name) {
    if (name == "axioms") suite_axioms(reg, rep);
    else if (name == "boolalg") suite_boolalg(reg, rep);
    else if (name == "convolution") suite_convolution(reg, rep);
    else if (name == "center") suite_center(reg, rep);
    else if (name == "skew") suite_skew(reg, rep);
    else if (name == "adjunction") suite_adjunction(reg, rep);
    else if (name == "pierce") suite_pierce(reg, rep);
    else if (name == "factor_through") suite_factor_through(reg, rep);
    else if (name == "disintegration") suite_disintegration(reg, rep);
    else if (name == "main_theorem") suite_main_theorem(reg, rep);
  };
  if (suite == "all") {
    for (const auto& name : names)
      if (name != "all") dispatch(name);
  } else {
    dispatch(suite);
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace gckit
