#include <doctest.h>

#include "homalg/io.hpp"
#include "homalg/verify.hpp"
#include "test_support.hpp"

using namespace homalg;
using namespace homalg::test;

namespace {

VerificationPlan quick_plan(std::size_t samples = 3) {
  VerificationPlan plan;
  plan.samples = samples;
  plan.max_total_degree = 5;  // keep unit tests brisk; acceptance runs the full cap
  return plan;
}

}  // namespace

TEST_CASE("default plan passes on the shipped twisted algebras") {
  for (auto alg : {singular_twist(), duals_twisted()}) {
    INFO(alg->name());
    VerificationReport report = run_plan(alg, quick_plan());
    CHECK(report.all_passed());
    for (const IdentityResult& r : report.results) {
      INFO(r.identity);
      CHECK(r.status != "fail");
      if (r.identity == "classical_limit") CHECK(r.status == "skipped");
    }
  }
}

TEST_CASE("classical_limit runs on identity twists") {
  VerificationPlan plan = quick_plan(2);
  plan.identities = {"classical_limit"};
  VerificationReport report = run_plan(duals(), plan);
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].status == "pass");
  CHECK(report.results[0].trials == 3);  // degrees 2..4
}

TEST_CASE("identity filter controls which rows appear") {
  VerificationPlan plan = quick_plan(2);
  plan.identities = {"delta_squared", "cup_assoc"};
  VerificationReport report = run_plan(singular_twist(), plan);
  REQUIRE(report.results.size() == 2);
  CHECK(report.results[0].identity == "delta_squared");
  CHECK(report.results[1].identity == "cup_assoc");
  CHECK(report.all_passed());
}

TEST_CASE("cocycle identities skip empty kernel patterns with a reason") {
  VerificationPlan plan = quick_plan(2);
  plan.identities = {"lemma51"};
  VerificationReport report = run_plan(singular_twist(), plan);  // Z^1 = 0 here
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].status == "pass");  // other patterns still ran
  CHECK(report.results[0].note.find("(1,2,2) Z=0") != std::string::npos);
  CHECK(report.results[0].note.find("(2,1,2) Z=0") != std::string::npos);
}

TEST_CASE("plan validation") {
  CHECK_THROWS_AS(run_plan(singular_twist(), [] {
                    VerificationPlan p;
                    p.identities = {"no_such_identity"};
                    return p;
                  }()),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_plan(singular_twist(), [] {
                    VerificationPlan p;
                    p.samples = 0;
                    return p;
                  }()),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_plan(singular_twist(), [] {
                    VerificationPlan p;
                    p.patterns = {{5, 5, 5}};  // exceeds max_total_degree
                    return p;
                  }()),
                  std::invalid_argument);
}

TEST_CASE("determinism: identical plans give byte-identical reports") {
  VerificationPlan plan = quick_plan(3);
  plan.seed = 12345;
  const std::string a = verification_report_to_json(run_plan(singular_twist(), plan)).dump();
  const std::string b = verification_report_to_json(run_plan(singular_twist(), plan)).dump();
  CHECK(a == b);
  plan.seed = 54321;
  const std::string c = verification_report_to_json(run_plan(singular_twist(), plan)).dump();
  CHECK(a != c);  // the seed is echoed into the report
}

TEST_CASE("a broken product is caught with a sound counterexample") {
  // One structure constant of the dual numbers changed (1*x = 1 + x):
  // still multiplicative (identity twist) but no longer associative, so
  // the machinery runs and the identities must fail.
  std::vector<Rational> mu = dual_numbers().mu_flat();
  mu[(0 * 2 + 1) * 2 + 0] = Rational(1);
  auto bad = shared(HomAlgebra("broken", 2, {"e1", "e2"}, mu, Matrix::identity(2)));
  REQUIRE(bad->multiplicative());
  REQUIRE(!validate(*bad).hom_associative());

  VerificationPlan plan = quick_plan(3);
  plan.identities = {"delta_squared", "cup_assoc"};
  VerificationReport report = run_plan(bad, plan);
  CHECK(!report.all_passed());

  bool verified_counterexample = false;
  for (const IdentityResult& r : report.results) {
    if (r.status != "fail") continue;
    REQUIRE(r.counterexample);
    const Counterexample& cex = *r.counterexample;
    CHECK(cex.tensors_differ);
    CHECK(cex.lhs_value != cex.rhs_value);
    if (cex.identity == "delta_squared") {
      // Re-evaluate the shrunk counterexample independently: rebuild the
      // input from its recorded coordinates and re-check the inequality.
      auto basis = cochain_space_basis(bad, cex.degrees.m);
      REQUIRE(cex.input_coords.size() == 1);
      REQUIRE(cex.input_coords[0].size() == basis.dim());
      std::vector<Rational> coords;
      for (long v : cex.input_coords[0]) coords.emplace_back(v);
      Cochain f = basis.combination(coords);
      Cochain ddf = delta(delta(f));
      CHECK(!ddf.is_zero());
      CHECK(ddf.coeffs[cex.flat_index].str() == cex.lhs_value);
      verified_counterexample = true;
    }
  }
  CHECK(verified_counterexample);
}

TEST_CASE("the suite holds on a three-dimensional algebra") {
  // Guards against anything silently assuming dimension two. Degrees kept
  // low: equivariant bases grow as 3^(n+1) here.
  auto alg = ut2_twisted();
  REQUIRE(validate(*alg).valid());
  VerificationPlan plan;
  plan.samples = 2;
  plan.max_total_degree = 4;
  plan.cocycle_patterns = {{1, 1, 2}};
  VerificationReport report = run_plan(alg, plan);
  CHECK(report.all_passed());
}

TEST_CASE("prop54 note reports the resolved signs") {
  VerificationPlan plan = quick_plan(3);
  plan.identities = {"prop54_up_to_coboundary"};
  VerificationReport degenerate = run_plan(duals_twisted(), plan);
  REQUIRE(degenerate.results.size() == 1);
  CHECK(degenerate.results[0].status == "pass");
  CHECK(degenerate.results[0].note.find("constant sign across patterns: any") !=
        std::string::npos);

  VerificationReport nondegenerate = run_plan(duals(), plan);
  REQUIRE(nondegenerate.results.size() == 1);
  CHECK(nondegenerate.results[0].status == "pass");
  CHECK(nondegenerate.results[0].note.find("(2,2,2)=+1") != std::string::npos);
  CHECK(nondegenerate.results[0].note.find("(1,2,2)=-1") != std::string::npos);
  CHECK(nondegenerate.results[0].note.find("matches the derived formula") != std::string::npos);
}
