#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gckit/common.hpp"
#include "gckit/finring.hpp"

namespace gckit {

// Finite generalized Boolean algebra: relatively complemented distributive
// lattice with bottom, table driven.
struct GenBooleanAlgebra {
  int n = 0;
  std::vector<int> meet, join, relcomp;  // row-major n*n
  int zero = 0;
  std::vector<std::string> labels;

  int mt(int a, int b) const { return meet[a * n + b]; }
  int jn(int a, int b) const { return join[a * n + b]; }
  int rc(int a, int b) const { return relcomp[a * n + b]; }
  bool leq(int a, int b) const { return mt(a, b) == a; }

  std::vector<int> atoms() const;
  // Every finite generalized Boolean algebra has a maximum.
  int top() const;

  std::string label(int a) const;

  static GenBooleanAlgebra build(int n, std::vector<int> meet,
                                 std::vector<int> join, std::vector<int> relcomp,
                                 int zero, std::vector<std::string> labels = {});
  // Power set of k atoms; element index = subset bitmask.
  static GenBooleanAlgebra free_boolean(int atoms);
};

struct Filter {
  std::vector<int> members;  // sorted
};

bool is_filter(const GenBooleanAlgebra& b, const Filter& f);

// Lemma criterion: for every a outside F some b in F has ab = 0.
// Cross-validated against maximality over the (principal) filters of b.
bool is_ultrafilter(const GenBooleanAlgebra& b, const Filter& f);

// All filters; in a finite lattice each filter is the up-set of its minimum.
std::vector<Filter> all_filters(const GenBooleanAlgebra& b);

// Deterministic: closes F and a, then maximalizes by picking the lowest-index
// atom below the resulting minimum.
Filter extend_to_ultrafilter(const GenBooleanAlgebra& b, const Filter& f, int a);

struct Character {
  std::vector<std::uint8_t> lam;  // values in {0,1}
};

bool is_character(const GenBooleanAlgebra& b, const Character& c);

// Enumerates the characters and asserts the bijection with ultrafilters (and,
// finitely, with atoms).
std::vector<Character> characters(const GenBooleanAlgebra& b);

// A character with lam(a) = 1, lam(b) = 0; requires a not below b.
Character separate(const GenBooleanAlgebra& b, int a, int bb);

// Central idempotents of a ring as a generalized Boolean algebra:
// meet ef, relcomp e - ef, join e + f - ef.
struct IdempotentAlgebra {
  GenBooleanAlgebra alg;
  RingPtr ring;
  std::vector<int> elem;  // algebra index -> ring element
  int index_of(int ring_elem) const;
};

IdempotentAlgebra from_central_idempotents(RingPtr r);

// Subalgebra of E(Z(R)) generated by `gens` (ring elements); always contains 0.
IdempotentAlgebra boolean_subalgebra(RingPtr r, std::vector<int> gens);

}  // namespace gckit
