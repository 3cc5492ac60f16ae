#include "homalg/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "homalg/io.hpp"

namespace homalg::cli {

namespace {

void emit(const json& j, const std::string& out_path) {
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_json_file(out_path, j);
}

// Commands other than `validate` require a clean algebra.
AlgebraPtr load_admissible(const std::string& path) {
  AlgebraPtr alg = load_algebra_file(path);
  ValidationReport report = validate(*alg);
  if (!report.valid())
    throw std::invalid_argument("algebra '" + alg->name() + "' failed validation (" +
                                std::to_string(report.hom_associativity_violations.size()) +
                                " twisted-associativity, " +
                                std::to_string(report.multiplicativity_violations.size()) +
                                " multiplicativity violations); run the validate command");
  return alg;
}

int cmd_validate(const std::string& algebra_file, const std::string& out_path) {
  AlgebraPtr alg = load_algebra_file(algebra_file);
  ValidationReport report = validate(*alg);
  emit(validation_report_to_json(*alg, report), out_path);
  if (report.valid()) {
    std::cerr << "valid (multiplicative)\n";
    return 0;
  }
  for (const auto& v : report.hom_associativity_violations)
    std::cerr << "twisted associativity fails at basis triple (" << v[0] + 1 << ", " << v[1] + 1
              << ", " << v[2] + 1 << ")\n";
  for (const auto& v : report.multiplicativity_violations)
    std::cerr << "multiplicativity fails at basis pair (" << v[0] + 1 << ", " << v[1] + 1
              << ")\n";
  return 1;
}

int cmd_cohomology(const std::string& algebra_file, std::size_t max_degree,
                   const std::string& out_path) {
  AlgebraPtr alg = load_admissible(algebra_file);
  Complex cx(alg, max_degree);
  json j = cohomology_report_to_json(cohomology_report(cx));
  const Cochain mu = mu_cochain(alg);
  j["mu_class_is_zero"] =
      cx.is_coboundary(mu) && cx.reduce_mod_coboundaries(mu).is_zero();
  emit(j, out_path);
  return 0;
}

int cmd_op(const std::string& kind, const std::string& algebra_file,
           const std::vector<std::string>& cochain_files, long index,
           const std::string& out_path) {
  AlgebraPtr alg = load_admissible(algebra_file);
  std::vector<Cochain> inputs;
  for (const std::string& path : cochain_files) inputs.push_back(load_cochain_file(alg, path));

  auto need = [&](std::size_t n) {
    if (inputs.size() != n)
      throw std::invalid_argument("op " + kind + " takes exactly " + std::to_string(n) +
                                  " --cochain file(s)");
  };
  Cochain result = [&]() -> Cochain {
    if (kind == "delta") {
      need(1);
      return delta(inputs[0]);
    }
    if (kind == "cup") {
      need(2);
      return cup(inputs[0], inputs[1]);
    }
    if (kind == "bracket") {
      need(2);
      return bracket(inputs[0], inputs[1]);
    }
    if (kind == "circ") {
      need(2);
      return circ(inputs[0], inputs[1]);
    }
    if (kind == "circ_i") {
      need(2);
      if (index < 0) throw std::invalid_argument("op circ_i requires --index");
      return circ_i(inputs[0], inputs[1], static_cast<std::size_t>(index));
    }
    if (kind == "homotopy") {
      need(3);
      return homotopy(inputs[0], inputs[1], inputs[2]);
    }
    throw CLI::ValidationError("unknown op kind '" + kind + "'");
  }();
  emit(cochain_to_json(result), out_path);
  return 0;
}

int cmd_verify(const std::string& algebra_file, const std::string& plan_file,
               const VerificationPlan& overrides, const std::vector<bool>& explicit_flags,
               const std::vector<std::string>& identities, const std::string& out_path) {
  AlgebraPtr alg = load_admissible(algebra_file);
  VerificationPlan plan;
  if (!plan_file.empty()) plan = plan_from_json(load_json_file(plan_file));
  if (explicit_flags[0]) plan.seed = overrides.seed;
  if (explicit_flags[1]) plan.samples = overrides.samples;
  if (explicit_flags[2]) plan.coeff_bound = overrides.coeff_bound;
  if (explicit_flags[3]) plan.max_degree = overrides.max_degree;
  if (!identities.empty()) plan.identities = identities;

  VerificationReport report = run_plan(alg, plan);
  emit(verification_report_to_json(report), out_path);
  for (const IdentityResult& r : report.results)
    std::cerr << r.identity << ": " << r.status
              << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_twist(const std::string& algebra_file, const std::string& hom_file,
              const std::string& name, const std::string& out_path) {
  AlgebraPtr assoc = load_algebra_file(algebra_file);
  Matrix hom = matrix_from_json(load_json_file(hom_file), "matrix");
  const HomAlgebra twisted = yau_twist(*assoc, hom);
  const HomAlgebra named = name.empty()
                               ? twisted
                               : HomAlgebra(name, twisted.dim(), twisted.basis_names(),
                                            twisted.mu_flat(), twisted.alpha());
  emit(algebra_to_json(named), out_path);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact cochain complex, cohomology and bracket/cup calculator for "
               "finite-dimensional hom-associative algebras"};
  app.require_subcommand(1);

  std::string algebra_file, out_path, plan_file, hom_file, op_kind, twist_name;
  std::vector<std::string> cochain_files, identities;
  long index = -1;
  VerificationPlan defaults;
  std::size_t max_degree = 4;

  auto* validate_cmd = app.add_subcommand("validate", "Check the two defining conditions");
  validate_cmd->add_option("algebra", algebra_file, "algebra JSON file")->required();
  validate_cmd->add_option("--out", out_path, "write the report JSON here");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Dimension table and representatives");
  cohomology_cmd->add_option("algebra", algebra_file, "algebra JSON file")->required();
  cohomology_cmd->add_option("--max-degree", max_degree, "top degree of the table")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  cohomology_cmd->add_option("--out", out_path, "write the report JSON here");

  auto* op_cmd = app.add_subcommand("op", "Apply one operation to explicit cochains");
  op_cmd->add_option("kind", op_kind, "delta | cup | bracket | circ | circ_i | homotopy")
      ->required();
  op_cmd->add_option("algebra", algebra_file, "algebra JSON file")->required();
  op_cmd->add_option("--cochain", cochain_files, "cochain JSON file (repeatable)")->required();
  op_cmd->add_option("--index", index, "insertion index for circ_i");
  op_cmd->add_option("--out", out_path, "write the result JSON here");

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
  verify_cmd->add_option("algebra", algebra_file, "algebra JSON file")->required();
  verify_cmd->add_option("--plan", plan_file, "plan JSON file");
  auto* seed_opt = verify_cmd->add_option("--seed", defaults.seed, "master seed");
  auto* samples_opt = verify_cmd->add_option("--samples", defaults.samples,
                                             "samples per degree pattern");
  auto* bound_opt = verify_cmd->add_option("--coeff-bound", defaults.coeff_bound,
                                           "coefficient bound for sampling");
  auto* cap_opt = verify_cmd->add_option("--max-degree", defaults.max_degree,
                                         "degree cap for the classical comparison");
  verify_cmd->add_option("--identity", identities, "identity filter (repeatable)");
  verify_cmd->add_option("--out", out_path, "write the report JSON here");

  auto* twist_cmd = app.add_subcommand("twist", "Twist an associative algebra by an endomorphism");
  twist_cmd->add_option("algebra", algebra_file, "associative algebra JSON file")->required();
  twist_cmd->add_option("hom", hom_file, "endomorphism JSON file  { \"matrix\": [[..]] }")
      ->required();
  twist_cmd->add_option("--name", twist_name, "name for the twisted algebra");
  twist_cmd->add_option("--out", out_path, "write the algebra JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(algebra_file, out_path);
    if (cohomology_cmd->parsed()) return cmd_cohomology(algebra_file, max_degree, out_path);
    if (op_cmd->parsed()) return cmd_op(op_kind, algebra_file, cochain_files, index, out_path);
    if (verify_cmd->parsed()) {
      const std::vector<bool> explicit_flags = {seed_opt->count() > 0, samples_opt->count() > 0,
                                                bound_opt->count() > 0, cap_opt->count() > 0};
      return cmd_verify(algebra_file, plan_file, defaults, explicit_flags, identities, out_path);
    }
    if (twist_cmd->parsed()) return cmd_twist(algebra_file, hom_file, twist_name, out_path);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace homalg::cli
