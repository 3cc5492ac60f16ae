#ifndef HOMALG_ALGEBRA_HPP
#define HOMALG_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "homalg/linalg.hpp"

namespace homalg {

/// A finite-dimensional hom-associative algebra (A, mu, alpha):
/// a bilinear product mu twisted by a linear endomorphism alpha so that
///     mu(alpha(a), mu(b, c)) = mu(mu(a, b), alpha(c))   for all a, b, c,
/// with alpha multiplicative: alpha(mu(a, b)) = mu(alpha(a), alpha(b)).
///
/// Structure constants: mu_at(i, j, k) is the coefficient of e_k in
/// mu(e_i, e_j); alpha.at(k, i) is the coefficient of e_k in alpha(e_i).
/// Indices are 0-based in code and in all serialized arrays (the docs use
/// 1-based labels e_1..e_d; subtract one).
///
/// alpha is not assumed invertible. Instances are immutable after
/// construction and freely shareable across threads.
class HomAlgebra {
 public:
  HomAlgebra(std::string name, std::size_t dim, std::vector<std::string> basis_names,
             std::vector<Rational> mu_flat, Matrix alpha);
  HomAlgebra(const HomAlgebra& o);
  HomAlgebra& operator=(const HomAlgebra&) = delete;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::vector<Rational>& mu_flat() const { return mu_; }
  const Matrix& alpha() const { return alpha_; }

  const Rational& mu_at(std::size_t i, std::size_t j, std::size_t k) const {
    return mu_[(i * dim_ + j) * dim_ + k];
  }

  /// Exact bilinear evaluation of the product on coordinate vectors.
  Vector mu_apply(const Vector& a, const Vector& b) const;

  /// alpha^t applied to a coordinate vector; alpha^0 = identity.
  Vector alpha_power_apply(const Vector& a, std::size_t t) const;

  /// Cached matrix power of the twisting map.
  const Matrix& alpha_power(std::size_t t) const;

  /// True when alpha is an algebra map for mu (set at construction).
  bool multiplicative() const { return multiplicative_; }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::string> basis_names_;
  std::vector<Rational> mu_;  // flat, (i*d + j)*d + k
  Matrix alpha_;
  bool multiplicative_;

  mutable std::mutex powers_mutex_;
  mutable std::vector<Matrix> alpha_powers_;  // [0] = identity
};

using AlgebraPtr = std::shared_ptr<const HomAlgebra>;

/// Violations found by validate(); empty lists <=> valid.
struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> hom_associativity_violations;  // (i, j, l)
  std::vector<std::array<std::size_t, 2>> multiplicativity_violations;   // (i, j)

  bool hom_associative() const { return hom_associativity_violations.empty(); }
  bool multiplicative() const { return multiplicativity_violations.empty(); }
  bool valid() const { return hom_associative() && multiplicative(); }
};

/// Checks every basis triple against the twisted associativity condition and
/// every basis pair against multiplicativity of alpha.
ValidationReport validate(const HomAlgebra& a);

/// Twist construction: from an associative algebra (alpha = identity) and an
/// algebra endomorphism `hom`, build (A, hom o mu, hom). The result always
/// passes validate(). Throws std::invalid_argument when `assoc` is not
/// associative with identity twist, or `hom` is not an algebra map.
HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& hom);

// Built-in example algebras (also shipped as JSON fixtures under data/).

/// d = 2, mu(e_i, e_j) = e_1 if (i, j) = (1, 1) else e_2;
/// alpha(e_1) = e_1 - e_2, alpha(e_2) = 0. The twist is singular.
HomAlgebra singular_twist_dim2();

/// K[x]/(x^2) with basis {1, x} and identity twist.
HomAlgebra dual_numbers();

/// Twist of dual_numbers() by the endomorphism 1 -> 1, x -> x/2.
HomAlgebra dual_numbers_twisted();

/// K x K, componentwise product, identity twist.
HomAlgebra kxk();

}  // namespace homalg

#endif
