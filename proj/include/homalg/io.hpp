#ifndef HOMALG_IO_HPP
#define HOMALG_IO_HPP

#include <json.hpp>

#include "homalg/verify.hpp"

namespace homalg {

// ordered_json keeps insertion order, so serialized reports are
// byte-reproducible run to run.
using json = nlohmann::ordered_json;

/// Schema or parse problem; the message names the offending field.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Algebra files: { "name", "dimension", "basis", "mu", "alpha" } with
// mu[i][j][k] and alpha[k][i] as nested arrays of rational strings
// ("p/q" or "p"). See docs/formats.md.
HomAlgebra algebra_from_json(const json& j);
json algebra_to_json(const HomAlgebra& alg);
AlgebraPtr load_algebra_file(const std::string& path);

// Cochain files: { "degree", "coeffs" } with coeffs nested over
// (i_1, .., i_n, k), row-major.
Cochain cochain_from_json(AlgebraPtr alg, const json& j);
json cochain_to_json(const Cochain& c);
Cochain load_cochain_file(AlgebraPtr alg, const std::string& path);

// Endomorphism files for the twist command: { "matrix" } with matrix[k][i].
Matrix matrix_from_json(const json& j, const std::string& key);
json matrix_to_json(const Matrix& m);

json validation_report_to_json(const HomAlgebra& alg, const ValidationReport& report);
json cohomology_report_to_json(const CohomologyReport& report);

VerificationPlan plan_from_json(const json& j);
json plan_to_json(const VerificationPlan& plan);
json verification_report_to_json(const VerificationReport& report);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace homalg

#endif
