// Acceptance suite: runs each release criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "homalg/classical.hpp"
#include "homalg/io.hpp"
#include "homalg/verify.hpp"

using namespace homalg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& what, double elapsed) {
  std::printf("CRITERION %d: %s - %s (%.2f s)\n", criterion, ok ? "PASS" : "FAIL", what.c_str(),
              elapsed);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string data_path(const std::string& name) {
  return std::string(HOMALG_DATA_DIR) + "/" + name;
}

// The exact-equality identity suite (the cochain-level identities; the
// cocycle-sampled ones are criterion 3's).
const std::vector<std::string> kSuiteIdentities = {
    "delta_squared", "prelie_branch_a", "prelie_branch_b", "thm22_i", "thm22_ii",
    "jacobi",        "prop32",          "eq2",             "cup_assoc",
    "remark_cup_circ", "prop41",        "prop42",          "prop53"};

VerificationPlan suite_plan() {
  VerificationPlan plan;
  plan.identities = kSuiteIdentities;
  plan.samples = 25;
  plan.seed = 0;
  plan.coeff_bound = 3;
  plan.max_total_degree = 7;
  return plan;
}

bool criterion1() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;

  AlgebraPtr alg = load_algebra_file(data_path("singular_twist_dim2.json"));
  if (!validate(*alg).valid()) {
    ok = false;
    detail += " validate failed;";
  }
  const Cochain id = identity_cochain(alg);
  const Cochain mu = mu_cochain(alg);
  if (!delta(mu).is_zero()) {
    ok = false;
    detail += " delta(mu) != 0;";
  }
  if (delta(id) != mu) {
    ok = false;
    detail += " delta(id) != mu;";
  }
  if (cup(id, id) != mu) {
    ok = false;
    detail += " id cup id != mu;";
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    ok = false;
    detail += " runtime >= 1 s;";
  }
  report(1, ok, "pinned facts on the 2-dim singular-twist algebra" + detail, elapsed);
  return ok;
}

bool criterion2(std::vector<std::string>& serialized_reports) {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  serialized_reports.clear();

  for (const char* file : {"singular_twist_dim2.json", "dual_numbers_twisted.json"}) {
    AlgebraPtr alg = load_algebra_file(data_path(file));
    VerificationReport rep = run_plan(alg, suite_plan());
    serialized_reports.push_back(verification_report_to_json(rep).dump(2));
    for (const IdentityResult& r : rep.results) {
      if (r.status == "pass") continue;
      ok = false;
      detail += " " + rep.algebra + "/" + r.identity + "=" + r.status + ";";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    ok = false;
    detail += " runtime >= 60 s;";
  }
  report(2, ok,
         "identity suite, 25 samples x all degree patterns with m+n+p <= 7, two algebras" +
             detail,
         elapsed);
  return ok;
}

bool criterion3() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  const std::vector<DegreePattern> patterns = {{2, 2, 2}, {1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
  const std::size_t samples = 25;  // >= 20 per pattern

  for (const char* file : {"singular_twist_dim2.json", "dual_numbers_twisted.json"}) {
    AlgebraPtr alg = load_algebra_file(data_path(file));

    VerificationPlan plan;
    plan.identities = {"lemma51", "prop52", "prop54_up_to_coboundary"};
    plan.cocycle_patterns = patterns;
    plan.samples = samples;
    plan.seed = 0;
    VerificationReport rep = run_plan(alg, plan);
    for (const IdentityResult& r : rep.results)
      if (r.status == "fail") {
        ok = false;
        detail += " " + rep.algebra + "/" + r.identity + "=fail;";
      }

    // The bracket Leibniz defect must match ONE constant sign across every
    // pattern (degenerate cases constrain nothing), and must lie in the
    // coboundary space of its degree.
    Complex cx(alg, 6);
    std::set<int> global = {+1, -1};
    for (const DegreePattern& d : patterns) {
      if (cx.slice(d.m).dim_Z() == 0 || cx.slice(d.n).dim_Z() == 0 ||
          cx.slice(d.p).dim_Z() == 0)
        continue;  // skipped pattern (empty cocycle space), mirrored in the plan run
      for (std::size_t s = 0; s < samples; ++s) {
        Cochain f = random_cocycle(cx, d.m, mix_seed(mix_seed(0, s), 1), 3);
        Cochain g = random_cocycle(cx, d.n, mix_seed(mix_seed(0, s), 2), 3);
        Cochain h = random_cocycle(cx, d.p, mix_seed(mix_seed(0, s), 3), 3);
        Cochain lhs = bracket(cup(f, g), h);
        lhs -= cup(bracket(f, h), g);
        Cochain t = cup(f, bracket(g, h));
        t.scale(Rational(parity_sign(static_cast<long>(d.m * (d.p - 1)))));
        lhs -= t;
        Cochain dH = delta(homotopy(f, g, h));
        Cochain neg = dH;
        neg.scale(Rational(-1));
        if (lhs != dH) global.erase(+1);
        if (lhs != neg) global.erase(-1);
        if (!in_span(lhs.coeffs, cx.slice(lhs.degree).B_basis)) {
          ok = false;
          detail += " membership fails at " + std::to_string(d.m) + std::to_string(d.n) +
                    std::to_string(d.p) + ";";
        }
      }
    }
    if (global.empty()) {
      ok = false;
      detail += " no single sign works on " + alg->name() + ";";
    }
  }
  report(3, ok,
         "cocycle identities (lemma51, prop52, prop54) on the four standard patterns, "
         "25 samples each, with a global defect sign and coboundary membership" +
             detail,
         seconds_since(start));
  return ok;
}

bool criterion4() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (const char* file : {"dual_numbers.json", "kxk.json"}) {
    AlgebraPtr alg = load_algebra_file(data_path(file));
    auto oracle = classical_hochschild_dims(*alg, 4);
    Complex cx(alg, 4);
    for (std::size_t n = 2; n <= 4; ++n) {
      const ComplexSlice& s = cx.slice(n);
      const DegreeSummary& row = oracle[n - 1];
      if (row.dim_Z != s.dim_Z() || row.dim_B != s.dim_B() || *row.dim_H != s.dim_H()) {
        ok = false;
        detail += " " + alg->name() + " degree " + std::to_string(n) + " differs;";
      }
    }
  }
  report(4, ok, "identity-twist dimensions match the brute-force classical complex" + detail,
         seconds_since(start));
  return ok;
}

bool criterion5() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  const json base = load_json_file(data_path("singular_twist_dim2.json"));
  int caught_by_validate = 0, caught_by_identities = 0;

  for (std::size_t i = 0; i < 2 && ok; ++i)
    for (std::size_t j = 0; j < 2 && ok; ++j)
      for (std::size_t k = 0; k < 2 && ok; ++k) {
        json mutated = base;
        const std::string cur = mutated["mu"][i][j][k].get<std::string>();
        mutated["mu"][i][j][k] = (cur == "0") ? "1" : "0";
        HomAlgebra alg = algebra_from_json(mutated);
        if (!validate(alg).valid()) {
          ++caught_by_validate;
          continue;
        }
        // Mutant survived validation: the identity suite must reject it
        // with a reproducible counterexample.
        auto ptr = std::make_shared<const HomAlgebra>(alg);
        VerificationReport rep = run_plan(ptr, suite_plan());
        VerificationReport rerun = run_plan(ptr, suite_plan());
        bool failed_with_counterexample = false;
        for (const IdentityResult& r : rep.results)
          if (r.status == "fail" && r.counterexample) failed_with_counterexample = true;
        const bool reproducible = verification_report_to_json(rep).dump() ==
                                  verification_report_to_json(rerun).dump();
        if (failed_with_counterexample && reproducible) {
          ++caught_by_identities;
        } else {
          ok = false;
          detail += " mutation (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ") escaped;";
        }
      }
  detail += " caught: " + std::to_string(caught_by_validate) + " by validate, " +
            std::to_string(caught_by_identities) + " by identities";
  report(5, ok, "every single structure-constant flip is detected;" + detail,
         seconds_since(start));
  return ok;
}

bool criterion6(const std::vector<std::string>& first_run) {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::vector<std::string> second;
  for (const char* file : {"singular_twist_dim2.json", "dual_numbers_twisted.json"}) {
    AlgebraPtr alg = load_algebra_file(data_path(file));
    second.push_back(verification_report_to_json(run_plan(alg, suite_plan())).dump(2));
  }
  if (first_run.size() != second.size()) {
    ok = false;
    detail = " report count differs;";
  } else {
    for (std::size_t i = 0; i < second.size(); ++i)
      if (first_run[i] != second[i]) {
        ok = false;
        detail += " report " + std::to_string(i) + " differs;";
      }
  }
  report(6, ok, "identity-suite rerun with the same seed is byte-identical" + detail,
         seconds_since(start));
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite (exact arithmetic throughout)\n");
  criterion1();
  std::vector<std::string> suite_reports;
  criterion2(suite_reports);
  criterion3();
  criterion4();
  criterion5();
  criterion6(suite_reports);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
