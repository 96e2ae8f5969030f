#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gckit {

// Carrier guard shared by every enumerating construction.  The CLI lets
// GCKIT_SIZE_LIMIT override it; library calls take an explicit limit.
inline constexpr long long default_size_limit = 4096;

enum class errc {
  not_associative,
  no_unique_pseudo_inverse,
  size_limit,
  incompatible,
  not_separable,
  axiom_violated,
  not_an_ideal,
  not_covariant,
  degenerate_action,
  not_subsemigroup,
  not_a_bisection,
  g1_fails,
  germ_conditions_fail,
  not_local_units,
  not_spectral,
  not_decomposable,
  not_unitary,
  parse_error,
  unknown_suite,
  unknown_example,
  invariant_violation,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  std::string witness;
  error(errc c, const std::string& msg, std::string w = "");
};

[[noreturn]] void fail(errc c, const std::string& msg, std::string witness = "");

// For facts the library relies on but does not take as input: a failure here is
// a transcription bug, never a property of the data.
void check(bool ok, const std::string& what);

}  // namespace gckit
