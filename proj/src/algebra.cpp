#include "homalg/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace homalg {

HomAlgebra::HomAlgebra(std::string name, std::size_t dim, std::vector<std::string> basis_names,
                       std::vector<Rational> mu_flat, Matrix alpha)
    : name_(std::move(name)),
      dim_(dim),
      basis_names_(std::move(basis_names)),
      mu_(std::move(mu_flat)),
      alpha_(std::move(alpha)) {
  if (dim_ == 0) throw std::invalid_argument("HomAlgebra: dimension must be >= 1");
  if (basis_names_.size() != dim_)
    throw std::invalid_argument("HomAlgebra: basis name count != dimension");
  if (mu_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("HomAlgebra: mu tensor has wrong size");
  if (alpha_.rows() != dim_ || alpha_.cols() != dim_)
    throw std::invalid_argument("HomAlgebra: alpha matrix has wrong shape");
  alpha_powers_.push_back(Matrix::identity(dim_));

  multiplicative_ = true;
  for (std::size_t i = 0; i < dim_ && multiplicative_; ++i)
    for (std::size_t j = 0; j < dim_ && multiplicative_; ++j) {
      Vector ei(dim_), ej(dim_);
      ei[i] = Rational(1);
      ej[j] = Rational(1);
      Vector lhs = mat_vec(alpha_, mu_apply(ei, ej));
      Vector rhs = mu_apply(mat_vec(alpha_, ei), mat_vec(alpha_, ej));
      if (lhs != rhs) multiplicative_ = false;
    }
}

HomAlgebra::HomAlgebra(const HomAlgebra& o)
    : name_(o.name_),
      dim_(o.dim_),
      basis_names_(o.basis_names_),
      mu_(o.mu_),
      alpha_(o.alpha_),
      multiplicative_(o.multiplicative_) {
  std::lock_guard<std::mutex> lock(o.powers_mutex_);
  alpha_powers_ = o.alpha_powers_;
}

Vector HomAlgebra::mu_apply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw std::invalid_argument("mu_apply: dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = mu_at(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

const Matrix& HomAlgebra::alpha_power(std::size_t t) const {
  std::lock_guard<std::mutex> lock(powers_mutex_);
  while (alpha_powers_.size() <= t) alpha_powers_.push_back(alpha_powers_.back() * alpha_);
  return alpha_powers_[t];
}

Vector HomAlgebra::alpha_power_apply(const Vector& a, std::size_t t) const {
  if (a.size() != dim_) throw std::invalid_argument("alpha_power_apply: dimension mismatch");
  if (t == 0) return a;
  return mat_vec(alpha_power(t), a);
}

ValidationReport validate(const HomAlgebra& a) {
  const std::size_t d = a.dim();
  ValidationReport report;
  auto unit = [d](std::size_t i) {
    Vector v(d);
    v[i] = Rational(1);
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Vector lhs = a.mu_apply(mat_vec(a.alpha(), unit(i)), a.mu_apply(unit(j), unit(l)));
        Vector rhs = a.mu_apply(a.mu_apply(unit(i), unit(j)), mat_vec(a.alpha(), unit(l)));
        if (lhs != rhs) report.hom_associativity_violations.push_back({i, j, l});
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = mat_vec(a.alpha(), a.mu_apply(unit(i), unit(j)));
      Vector rhs = a.mu_apply(mat_vec(a.alpha(), unit(i)), mat_vec(a.alpha(), unit(j)));
      if (lhs != rhs) report.multiplicativity_violations.push_back({i, j});
    }
  return report;
}

HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& hom) {
  const std::size_t d = assoc.dim();
  if (!assoc.alpha().is_identity())
    throw std::invalid_argument("yau_twist: input must carry the identity twist");
  if (!validate(assoc).hom_associative())
    throw std::invalid_argument("yau_twist: input product is not associative");
  if (hom.rows() != d || hom.cols() != d)
    throw std::invalid_argument("yau_twist: endomorphism has wrong shape");

  auto unit = [d](std::size_t i) {
    Vector v(d);
    v[i] = Rational(1);
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = mat_vec(hom, assoc.mu_apply(unit(i), unit(j)));
      Vector rhs = assoc.mu_apply(mat_vec(hom, unit(i)), mat_vec(hom, unit(j)));
      if (lhs != rhs)
        throw std::invalid_argument("yau_twist: map is not an algebra homomorphism");
    }

  std::vector<Rational> mu_twisted(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector w = mat_vec(hom, assoc.mu_apply(unit(i), unit(j)));
      for (std::size_t k = 0; k < d; ++k) mu_twisted[(i * d + j) * d + k] = w[k];
    }
  return HomAlgebra(assoc.name() + "-twisted", d, assoc.basis_names(), std::move(mu_twisted),
                    hom);
}

namespace {

std::vector<Rational> mu_from_table(std::size_t d,
                                    const std::vector<std::vector<std::vector<long>>>& table) {
  std::vector<Rational> mu(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) mu[(i * d + j) * d + k] = Rational(table[i][j][k]);
  return mu;
}

}  // namespace

HomAlgebra singular_twist_dim2() {
  // mu(e_1, e_1) = e_1, all other basis products e_2.
  std::vector<std::vector<std::vector<long>>> table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
  Matrix alpha(2, 2);
  alpha.at(0, 0) = Rational(1);
  alpha.at(1, 0) = Rational(-1);
  return HomAlgebra("singular-twist-dim2", 2, {"e1", "e2"}, mu_from_table(2, table), alpha);
}

HomAlgebra dual_numbers() {
  std::vector<std::vector<std::vector<long>>> table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  return HomAlgebra("dual-numbers", 2, {"one", "x"}, mu_from_table(2, table),
                    Matrix::identity(2));
}

HomAlgebra dual_numbers_twisted() {
  Matrix hom = Matrix::identity(2);
  hom.at(1, 1) = Rational(1, 2);
  HomAlgebra t = yau_twist(dual_numbers(), hom);
  return HomAlgebra("dual-numbers-twisted", 2, t.basis_names(), t.mu_flat(), t.alpha());
}

HomAlgebra kxk() {
  std::vector<std::vector<std::vector<long>>> table = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  return HomAlgebra("kxk", 2, {"e1", "e2"}, mu_from_table(2, table), Matrix::identity(2));
}

}  // namespace homalg
