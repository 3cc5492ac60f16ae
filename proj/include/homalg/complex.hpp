#ifndef HOMALG_COMPLEX_HPP
#define HOMALG_COMPLEX_HPP

#include <optional>

#include "homalg/ops.hpp"

namespace homalg {

/// One degree of the twisted cochain complex.
///
/// delta_matrix is the coboundary written in equivariant-basis coordinates
/// (columns: images of C_basis vectors, expressed in the degree-(n+1)
/// basis). Z_basis and B_basis live in the ambient d^(n+1)-dimensional
/// coefficient space; B_basis at degree n is the image of the previous
/// degree's coboundary (empty at n = 1).
struct ComplexSlice {
  std::size_t degree = 0;
  CochainSpaceBasis C_basis;
  Matrix delta_matrix;
  SubspaceBasis Z_basis;
  SubspaceBasis B_basis;

  std::size_t dim_C() const { return C_basis.dim(); }
  std::size_t dim_Z() const { return Z_basis.dim(); }
  std::size_t dim_B() const { return B_basis.dim(); }
  std::size_t dim_H() const { return dim_Z() - dim_B(); }
};

/// The complex up to a degree cap, with quotient helpers.
class Complex {
 public:
  Complex(AlgebraPtr alg, std::size_t cap);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t cap() const { return cap_; }
  const ComplexSlice& slice(std::size_t n) const;

  bool is_cocycle(const Cochain& z) const;
  bool is_coboundary(const Cochain& z) const;

  /// Subtracts the coboundary part: writes a cocycle z in the basis
  /// (B_basis ++ representatives) of Z and drops the B components. The
  /// result is the canonical representative of z's class.
  Cochain reduce_mod_coboundaries(const Cochain& z) const;

  /// Representatives completing B_basis to a basis of Z_basis, chosen by
  /// greedy pivoting over Z_basis vectors in fixed coordinate order.
  const std::vector<Cochain>& representatives(std::size_t n) const;

 private:
  AlgebraPtr alg_;
  std::size_t cap_;
  std::vector<ComplexSlice> slices_;                     // index n-1 holds degree n
  std::vector<std::vector<Cochain>> representatives_;    // same indexing
};

std::vector<ComplexSlice> build_complex(AlgebraPtr alg, std::size_t cap);

/// Per-degree dimension row of a cohomology report. dim_H is reported for
/// n >= 2 only (the quotient is not defined at n = 1 for a general twist).
struct DegreeSummary {
  std::size_t n = 0;
  std::size_t dim_C = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::optional<std::size_t> dim_H;
};

struct CohomologyReport {
  std::string algebra_name;
  std::size_t cap = 0;
  std::vector<DegreeSummary> degrees;
  std::vector<std::vector<Cochain>> representatives;  // index n-1; nonempty for n >= 2
};

CohomologyReport cohomology_report(AlgebraPtr alg, std::size_t cap);
CohomologyReport cohomology_report(const Complex& cx);

/// Cup product on cohomology classes: cup of the representatives, reduced
/// modulo coboundaries. Inputs must be cocycles; degrees must fit the cap.
Cochain induced_cup(const Complex& cx, const Cochain& x, const Cochain& y);

/// Bracket on cohomology classes, likewise reduced.
Cochain induced_bracket(const Complex& cx, const Cochain& x, const Cochain& y);

/// Deterministic cocycle sample: integer combination of the Z_basis.
Cochain random_cocycle(const Complex& cx, std::size_t degree, std::uint64_t seed,
                       long coeff_bound);

}  // namespace homalg

#endif
