#include "homalg/io.hpp"

#include <fstream>

namespace homalg {

namespace {

const json& require_field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw io_error(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t require_uint(const json& j, const std::string& key, const std::string& where) {
  const json& v = require_field(j, key, where);
  if (!v.is_number_unsigned()) throw io_error(where + ": field '" + key + "' must be a count");
  return v.get<std::size_t>();
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw io_error(where + ": expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw io_error(where + ": " + e.what());
  }
}

// Nested rational array of shape dims, flattened row-major.
void flatten_rationals(const json& v, const std::vector<std::size_t>& dims, std::size_t level,
                       std::vector<Rational>& out, const std::string& where) {
  if (level == dims.size()) {
    out.push_back(rational_from_json(v, where));
    return;
  }
  if (!v.is_array() || v.size() != dims[level])
    throw io_error(where + ": expected an array of length " + std::to_string(dims[level]) +
                   " at depth " + std::to_string(level));
  for (const json& e : v) flatten_rationals(e, dims, level + 1, out, where);
}

json nest_rationals(const std::vector<Rational>& flat, const std::vector<std::size_t>& dims,
                    std::size_t level, std::size_t& pos) {
  if (level == dims.size()) return json(flat[pos++].str());
  json arr = json::array();
  for (std::size_t i = 0; i < dims[level]; ++i)
    arr.push_back(nest_rationals(flat, dims, level + 1, pos));
  return arr;
}

json degrees_json(const DegreePattern& d) { return json::array({d.m, d.n, d.p}); }

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw io_error("parse error in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

HomAlgebra algebra_from_json(const json& j) {
  const std::string where = "algebra";
  std::string name = require_field(j, "name", where).get<std::string>();
  const std::size_t d = require_uint(j, "dimension", where);
  if (d == 0) throw io_error("algebra: dimension must be >= 1");

  const json& basis = require_field(j, "basis", where);
  if (!basis.is_array() || basis.size() != d)
    throw io_error("algebra: 'basis' must list exactly " + std::to_string(d) + " names");
  std::vector<std::string> basis_names;
  for (const json& b : basis) basis_names.push_back(b.get<std::string>());

  std::vector<Rational> mu;
  flatten_rationals(require_field(j, "mu", where), {d, d, d}, 0, mu, "algebra.mu");

  std::vector<Rational> alpha_flat;
  flatten_rationals(require_field(j, "alpha", where), {d, d}, 0, alpha_flat, "algebra.alpha");
  Matrix alpha(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) alpha.at(k, i) = alpha_flat[k * d + i];

  return HomAlgebra(std::move(name), d, std::move(basis_names), std::move(mu), std::move(alpha));
}

json algebra_to_json(const HomAlgebra& alg) {
  const std::size_t d = alg.dim();
  json j;
  j["name"] = alg.name();
  j["dimension"] = d;
  j["basis"] = alg.basis_names();
  std::size_t pos = 0;
  j["mu"] = nest_rationals(alg.mu_flat(), {d, d, d}, 0, pos);
  std::vector<Rational> alpha_flat(d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) alpha_flat[k * d + i] = alg.alpha().at(k, i);
  pos = 0;
  j["alpha"] = nest_rationals(alpha_flat, {d, d}, 0, pos);
  return j;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  return std::make_shared<const HomAlgebra>(algebra_from_json(load_json_file(path)));
}

Cochain cochain_from_json(AlgebraPtr alg, const json& j) {
  const std::size_t degree = require_uint(j, "degree", "cochain");
  if (degree == 0) throw io_error("cochain: degree must be >= 1");
  std::vector<std::size_t> dims(degree + 1, alg->dim());
  std::vector<Rational> coeffs;
  flatten_rationals(require_field(j, "coeffs", "cochain"), dims, 0, coeffs, "cochain.coeffs");
  return Cochain(std::move(alg), degree, std::move(coeffs));
}

json cochain_to_json(const Cochain& c) {
  json j;
  j["degree"] = c.degree;
  std::vector<std::size_t> dims(c.degree + 1, c.dim());
  std::size_t pos = 0;
  j["coeffs"] = nest_rationals(c.coeffs, dims, 0, pos);
  return j;
}

Cochain load_cochain_file(AlgebraPtr alg, const std::string& path) {
  return cochain_from_json(std::move(alg), load_json_file(path));
}

Matrix matrix_from_json(const json& j, const std::string& key) {
  const json& rows = require_field(j, key, "matrix file");
  if (!rows.is_array() || rows.empty()) throw io_error("matrix: '" + key + "' must be nonempty");
  const std::size_t d = rows.size();
  std::vector<Rational> flat;
  flatten_rationals(rows, {d, d}, 0, flat, "matrix." + key);
  Matrix m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) m.at(k, i) = flat[k * d + i];
  return m;
}

json matrix_to_json(const Matrix& m) {
  std::vector<Rational> flat(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) flat[r * m.cols() + c] = m.at(r, c);
  std::size_t pos = 0;
  return nest_rationals(flat, {m.rows(), m.cols()}, 0, pos);
}

json validation_report_to_json(const HomAlgebra& alg, const ValidationReport& report) {
  json j;
  j["algebra"] = alg.name();
  j["valid"] = report.valid();
  j["multiplicative"] = report.multiplicative();
  j["hom_associative"] = report.hom_associative();
  json assoc = json::array();
  for (const auto& v : report.hom_associativity_violations)
    assoc.push_back(json::array({v[0], v[1], v[2]}));
  j["hom_associativity_violations"] = assoc;
  json mult = json::array();
  for (const auto& v : report.multiplicativity_violations)
    mult.push_back(json::array({v[0], v[1]}));
  j["multiplicativity_violations"] = mult;
  return j;
}

json cohomology_report_to_json(const CohomologyReport& report) {
  json j;
  j["algebra"] = report.algebra_name;
  j["max_degree"] = report.cap;
  json degrees = json::array();
  for (const DegreeSummary& row : report.degrees) {
    json r;
    r["n"] = row.n;
    r["dimC"] = row.dim_C;
    r["dimZ"] = row.dim_Z;
    r["dimB"] = row.dim_B;
    if (row.dim_H) r["dimH"] = *row.dim_H;
    degrees.push_back(r);
  }
  j["degrees"] = degrees;
  json reps;
  for (std::size_t n = 2; n <= report.cap; ++n) {
    json list = json::array();
    for (const Cochain& c : report.representatives[n - 1]) list.push_back(cochain_to_json(c));
    reps[std::to_string(n)] = list;
  }
  j["representatives"] = reps;
  return j;
}

VerificationPlan plan_from_json(const json& j) {
  VerificationPlan plan;
  if (j.contains("identities")) {
    for (const json& v : j["identities"]) plan.identities.push_back(v.get<std::string>());
  }
  auto read_patterns = [&](const char* key, std::vector<DegreePattern>& out) {
    if (!j.contains(key)) return;
    for (const json& v : j[key]) {
      if (!v.is_array() || v.size() != 3) throw io_error(std::string("plan: ") + key +
                                                         " entries must be [m, n, p]");
      out.push_back({v[0].get<std::size_t>(), v[1].get<std::size_t>(), v[2].get<std::size_t>()});
    }
  };
  read_patterns("patterns", plan.patterns);
  read_patterns("cocycle_patterns", plan.cocycle_patterns);
  if (j.contains("samples")) plan.samples = j["samples"].get<std::size_t>();
  if (j.contains("seed")) plan.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("coeff_bound")) plan.coeff_bound = j["coeff_bound"].get<long>();
  if (j.contains("max_total_degree"))
    plan.max_total_degree = j["max_total_degree"].get<std::size_t>();
  if (j.contains("max_degree")) plan.max_degree = j["max_degree"].get<std::size_t>();
  if (plan.samples < 1) throw io_error("plan: samples must be >= 1");
  if (plan.max_degree < 2) throw io_error("plan: max_degree must be >= 2");
  if (plan.coeff_bound < 0) throw io_error("plan: coeff_bound must be >= 0");
  return plan;
}

json plan_to_json(const VerificationPlan& plan) {
  json j;
  j["identities"] = plan.identities.empty() ? known_identities() : plan.identities;
  json pats = json::array();
  for (const auto& d : plan.patterns) pats.push_back(degrees_json(d));
  if (!plan.patterns.empty()) j["patterns"] = pats;
  json copats = json::array();
  for (const auto& d : plan.cocycle_patterns) copats.push_back(degrees_json(d));
  if (!plan.cocycle_patterns.empty()) j["cocycle_patterns"] = copats;
  j["samples"] = plan.samples;
  j["seed"] = plan.seed;
  j["coeff_bound"] = plan.coeff_bound;
  j["max_total_degree"] = plan.max_total_degree;
  j["max_degree"] = plan.max_degree;
  return j;
}

json verification_report_to_json(const VerificationReport& report) {
  json j;
  j["algebra"] = report.algebra;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["coeff_bound"] = report.coeff_bound;
  j["all_passed"] = report.all_passed();
  json results = json::array();
  for (const IdentityResult& r : report.results) {
    json row;
    row["identity"] = r.identity;
    row["status"] = r.status;
    row["trials"] = r.trials;
    if (!r.note.empty()) row["note"] = r.note;
    if (r.counterexample) {
      const Counterexample& c = *r.counterexample;
      json cj;
      cj["algebra"] = c.algebra;
      cj["identity"] = c.identity;
      cj["degrees"] = degrees_json(c.degrees);
      cj["plan_seed"] = c.plan_seed;
      cj["sample_index"] = c.sample_index;
      json coords = json::array();
      for (const auto& slot : c.input_coords) coords.push_back(slot);
      cj["input_coords"] = coords;
      cj["where"] = c.where;
      if (c.tensors_differ) {
        cj["flat_index"] = c.flat_index;
        cj["basis_tuple"] = c.basis_tuple;
        cj["lhs"] = c.lhs_value;
        cj["rhs"] = c.rhs_value;
      } else if (!c.lhs_value.empty() || !c.rhs_value.empty()) {
        cj["lhs"] = c.lhs_value;
        cj["rhs"] = c.rhs_value;
      }
      row["counterexample"] = cj;
    }
    results.push_back(row);
  }
  j["results"] = results;
  return j;
}

}  // namespace homalg
