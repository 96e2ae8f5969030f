#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gckit/conv.hpp"
#include "gckit/examples.hpp"
#include "gckit/instances.hpp"
#include "gckit/pierce.hpp"
#include "gckit/suites.hpp"

namespace {

using namespace gckit;

long long size_limit_from_env() {
  if (const char* env = std::getenv("GCKIT_SIZE_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring malformed GCKIT_SIZE_LIMIT\n";
  }
  return default_size_limit;
}

InstanceRegistry load(const std::string& path) {
  InstanceRegistry reg = InstanceRegistry::load_file(path);
  reg.limit = size_limit_from_env();
  return reg;
}

int cmd_verify(const std::string& file, const std::string& suite) {
  InstanceRegistry reg = load(file);
  SuiteReport rep = run_suite(reg, suite);
  rep.print(std::cout);
  return rep.ok() ? 0 : 1;
}

void print_table(const std::string& title, const FiniteRing& r) {
  std::cout << title << " (" << r.n << " elements)\n";
  for (int i = 0; i < r.n; ++i) {
    for (int j = 0; j < r.n; ++j) {
      if (j) std::cout << " ";
      std::cout << r.label(r.m(i, j));
    }
    std::cout << "\n";
  }
}

int cmd_table(const std::string& file, const std::string& id) {
  InstanceRegistry reg = load(file);
  std::string kind = reg.kind(id);
  if (kind == "ring") {
    print_table(id, *reg.ring(id));
  } else if (kind == "inverse_semigroup") {
    auto s = reg.semigroup(id);
    std::cout << id << " (" << s->n << " elements)\n";
    for (int i = 0; i < s->n; ++i) {
      for (int j = 0; j < s->n; ++j) {
        if (j) std::cout << " ";
        std::cout << s->label(s->at(i, j));
      }
      std::cout << "\n";
    }
  } else if (kind == "sheaf") {
    ConvAlgebra alg(reg.sheaf(id), reg.limit);
    print_table(id + " convolution algebra", alg.as_ring());
  } else {
    fail(errc::parse_error, "no table for objects of kind '" + kind + "'");
  }
  return 0;
}

int cmd_pierce(const std::string& file, const std::string& id) {
  InstanceRegistry reg = load(file);
  auto r = reg.ring(id);
  auto sp = pierce_spectrum(r);
  std::cout << "B (central idempotents of " << id << "): ";
  for (int e : sp.B.elem) std::cout << r->label(e) << " ";
  std::cout << "\natoms: ";
  for (int a : sp.atoms) std::cout << sp.B.alg.label(a) << " ";
  std::cout << "\n";
  auto iso = pierce_iso(sp, reg.limit);
  for (std::size_t p = 0; p < iso.sheaf.stalks.size(); ++p)
    std::cout << "stalk at atom " << p << ": "
              << iso.sheaf.stalks[p].r_lambda->n << " elements\n";
  std::cout << "Psi:\n";
  for (int x = 0; x < r->n; ++x)
    std::cout << "  " << r->label(x) << " -> "
              << iso.alg.format(iso.alg.decode(iso.psi.map[x])) << "\n";
  std::cout << "Psi is an isomorphism: "
            << (is_isomorphism(iso.psi) ? "yes" : "no") << "\n";
  return is_isomorphism(iso.psi) ? 0 : 1;
}

int cmd_examples_list() {
  for (const auto& e : worked_examples())
    std::cout << e.name << " -- " << e.summary << "\n";
  return 0;
}

int cmd_examples_run(const std::string& name) {
  const auto& e = find_example(name);
  std::cout << e.name << ": " << e.summary << "\n";
  bool ok = e.run(std::cout);
  std::cout << (ok ? "ok" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid convolution / skew inverse semigroup ring toolkit"};
  app.require_subcommand(1);

  std::string file, object_id, suite = "all", example_name;

  auto* verify = app.add_subcommand("verify", "run verification suites on a pack");
  verify->add_option("file", file, "instance pack (JSON)")->required();
  verify->add_option("--suite", suite, "suite name (default: all)");

  auto* table = app.add_subcommand("table", "print a multiplication table");
  table->add_option("file", file)->required();
  table->add_option("id", object_id)->required();

  auto* pierce = app.add_subcommand("pierce", "print the sheaf representation of a ring");
  pierce->add_option("file", file)->required();
  pierce->add_option("id", object_id)->required();

  auto* examples = app.add_subcommand("examples", "worked examples");
  examples->require_subcommand(1);
  auto* ex_list = examples->add_subcommand("list", "list the registry");
  auto* ex_run = examples->add_subcommand("run", "run one example");
  ex_run->add_option("name", example_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, suite);
    if (table->parsed()) return cmd_table(file, object_id);
    if (pierce->parsed()) return cmd_pierce(file, object_id);
    if (ex_list->parsed()) return cmd_examples_list();
    if (ex_run->parsed()) return cmd_examples_run(example_name);
  } catch (const gckit::error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code) {
      case gckit::errc::parse_error:
      case gckit::errc::unknown_suite:
      case gckit::errc::unknown_example:
      case gckit::errc::size_limit:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
