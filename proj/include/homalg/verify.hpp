#ifndef HOMALG_VERIFY_HPP
#define HOMALG_VERIFY_HPP

#include <optional>
#include <string>

#include "homalg/complex.hpp"

namespace homalg {

struct DegreePattern {
  std::size_t m = 1, n = 1, p = 1;
  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// What to verify, on which degree patterns, with which randomness.
///
/// Identity names (the wire vocabulary, also accepted by --identity):
///   delta_squared, prelie_branch_a, prelie_branch_b, thm22_i, thm22_ii,
///   jacobi, prop32, eq2, cup_assoc, remark_cup_circ, prop41, prop42,
///   lemma51, prop52, prop53, prop54_up_to_coboundary, classical_limit.
/// Unary identities run over the distinct m of `patterns`, binary ones over
/// the distinct (m, n) prefixes, ternary ones over `patterns` themselves.
/// The cocycle-sampled identities (lemma51, prop52, prop54...) run over
/// `cocycle_patterns` and draw inputs from computed kernel bases, never by
/// rejection. classical_limit compares dimensions against the brute-force
/// classical complex up to `max_degree` and requires the identity twist.
struct VerificationPlan {
  std::vector<std::string> identities;        // empty: all, in canonical order
  std::vector<DegreePattern> patterns;        // empty: all m+n+p <= max_total_degree
  std::vector<DegreePattern> cocycle_patterns;  // empty: the four standard ones
  std::size_t samples = 25;
  std::uint64_t seed = 0;
  long coeff_bound = 3;
  std::size_t max_total_degree = 7;
  std::size_t max_degree = 4;  // classical_limit comparison cap
};

struct Counterexample {
  std::string algebra;
  std::string identity;
  DegreePattern degrees;
  std::uint64_t plan_seed = 0;
  std::size_t sample_index = 0;
  std::vector<std::vector<long>> input_coords;  // shrunk basis coordinates per input
  std::string where;                            // sub-case, e.g. "i=1 j=3" or "membership"
  bool tensors_differ = false;
  std::size_t flat_index = 0;                  // valid when tensors_differ
  std::vector<std::size_t> basis_tuple;        // (i_1..i_n, k), 0-based
  std::string lhs_value, rhs_value;
};

struct IdentityResult {
  std::string identity;
  std::string status;  // "pass" | "fail" | "skipped"
  std::size_t trials = 0;
  std::string note;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::string algebra;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  long coeff_bound = 3;
  std::vector<IdentityResult> results;

  bool all_passed() const;
};

/// All identity names in canonical order.
const std::vector<std::string>& known_identities();

/// Runs every requested identity coefficientwise in exact arithmetic.
/// Deterministic: the same plan and seed produce an identical report.
/// Throws std::invalid_argument for unknown identity names or bad plans.
VerificationReport run_plan(AlgebraPtr alg, const VerificationPlan& plan);

}  // namespace homalg

#endif
