#ifndef HOMALG_COCHAIN_HPP
#define HOMALG_COCHAIN_HPP

#include <cstdint>
#include <span>

#include "homalg/algebra.hpp"

namespace homalg {

/// A multilinear map f : A^(tensor n) -> A, n >= 1, stored densely.
///
/// Index convention (fixed; silent transposition is the main hazard here):
/// inputs-major, output-last. The coefficient of e_k in f(e_{i_1}, ..,
/// e_{i_n}) sits at flat index  arg_index * d + k,  where
///     arg_index = i_1 * d^(n-1) + i_2 * d^(n-2) + ... + i_n
/// with 0-based indices (slot 1 most significant). Flattening between the
/// nested-array JSON form and this vector is row-major over (i_1..i_n, k).
///
/// The alpha-equivariant maps (alpha o f = f o alpha^(tensor n)) form the
/// subspace whose bases CochainSpaceBasis holds; most operations require
/// equivariant inputs and produce equivariant outputs.
struct Cochain {
  AlgebraPtr algebra;
  std::size_t degree = 0;
  Vector coeffs;  // size d^(degree+1)

  Cochain() = default;
  Cochain(AlgebraPtr alg, std::size_t degree);
  Cochain(AlgebraPtr alg, std::size_t degree, Vector coeffs);

  std::size_t dim() const { return algebra->dim(); }
  std::size_t arg_count() const;  // d^degree

  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& scale(const Rational& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }

  /// Exact multilinear evaluation at arbitrary coordinate vectors.
  Vector evaluate(std::span<const Vector> args) const;
};

Cochain zero_cochain(AlgebraPtr alg, std::size_t degree);
Cochain identity_cochain(AlgebraPtr alg);  // degree 1, e_i -> e_i
Cochain mu_cochain(AlgebraPtr alg);        // degree 2, the product itself

// Tensor primitives most operations are built from.

/// Precompose argument slot `slot` (0-based) with the linear map given by
/// matrix m (column i = image of e_i): result(.., a_slot, ..) = f(.., m a_slot, ..).
Cochain apply_to_slot(const Cochain& f, std::size_t slot, const Matrix& m);

/// Precompose every argument slot except `except` with m. Pass
/// except = degree to transform all slots.
Cochain apply_to_slots_except(const Cochain& f, std::size_t except, const Matrix& m);

/// Postcompose the output with m: result(args) = m f(args).
Cochain apply_to_output(const Cochain& f, const Matrix& m);

/// Substitution: plug g's output into f's argument slot `slot`.
/// Degrees m, n give degree m + n - 1:
///   result(a_1..a_{slot}, b_1..b_n, a_{slot+2}..a_m) =
///       f(a_1, .., a_{slot}, g(b_1..b_n), a_{slot+2}, .., a_m).
Cochain splice(const Cochain& f, std::size_t slot, const Cochain& g);

/// alpha o f == f o alpha^(tensor n), checked coefficientwise.
bool is_equivariant(const Cochain& f);

/// Basis of the equivariant subspace C^n_alpha(A, A) inside the
/// d^(n+1)-dimensional coefficient space.
struct CochainSpaceBasis {
  AlgebraPtr algebra;
  std::size_t degree = 0;
  SubspaceBasis basis;

  std::size_t dim() const { return basis.dim(); }
  Cochain vector_as_cochain(std::size_t idx) const;
  Cochain combination(const std::vector<Rational>& coords) const;
};

/// Kernel of f |-> alpha o f - f o alpha^(tensor n); dimension is
/// d^(n+1) - rank of that map. For alpha = identity this is the full space.
CochainSpaceBasis cochain_space_basis(AlgebraPtr alg, std::size_t degree);

/// Matrix of the equivariance defect map on the flat coefficient space
/// (also the building block of the basis above; exposed for tests).
Matrix equivariance_defect_matrix(const HomAlgebra& alg, std::size_t degree);

/// Deterministic integer combination of basis vectors, coefficients drawn
/// from [-coeff_bound, coeff_bound] by a seeded generator. An empty basis
/// (or coeff_bound = 0) yields the zero cochain. Equivariant by construction.
Cochain random_cochain(const CochainSpaceBasis& basis, std::uint64_t seed, long coeff_bound);

/// The integer coefficients random_cochain would draw (exposed so callers
/// can shrink counterexamples coefficient by coefficient).
std::vector<long> random_combination(std::size_t count, std::uint64_t seed, long coeff_bound);

/// Stream of deterministic 64-bit values (splitmix64); stable across
/// platforms, unlike the standard library distributions.
std::uint64_t split_mix64(std::uint64_t& state);

/// Order-sensitive seed mixing for deriving per-case seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace homalg

#endif
