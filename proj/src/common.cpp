#include "gckit/common.hpp"

namespace gckit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_associative: return "NotAssociative";
    case errc::no_unique_pseudo_inverse: return "NoUniquePseudoInverse";
    case errc::size_limit: return "SizeLimit";
    case errc::incompatible: return "Incompatible";
    case errc::not_separable: return "NotSeparable";
    case errc::axiom_violated: return "AxiomViolated";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_covariant: return "NotCovariant";
    case errc::degenerate_action: return "DegenerateAction";
    case errc::not_subsemigroup: return "NotSubsemigroup";
    case errc::not_a_bisection: return "NotABisection";
    case errc::g1_fails: return "G1Fails";
    case errc::germ_conditions_fail: return "GermConditionsFail";
    case errc::not_local_units: return "NotLocalUnits";
    case errc::not_spectral: return "NotSpectral";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::not_unitary: return "NotUnitary";
    case errc::parse_error: return "ParseError";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::unknown_example: return "UnknownExample";
    case errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

error::error(errc c, const std::string& msg, std::string w)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg),
      code(c),
      witness(std::move(w)) {}

void fail(errc c, const std::string& msg, std::string witness) {
  throw error(c, msg, std::move(witness));
}

void check(bool ok, const std::string& what) {
  if (!ok) throw error(errc::invariant_violation, what, what);
}

}  // namespace gckit
