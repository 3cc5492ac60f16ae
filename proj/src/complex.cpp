#include "homalg/complex.hpp"

#include <stdexcept>
#include <utility>

namespace homalg {

std::vector<ComplexSlice> build_complex(AlgebraPtr alg, std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("build_complex: cap must be >= 2");
  if (!alg->multiplicative())
    throw std::invalid_argument("build_complex: algebra twist is not multiplicative");

  std::vector<CochainSpaceBasis> bases;
  bases.reserve(cap + 1);
  for (std::size_t n = 1; n <= cap + 1; ++n) bases.push_back(cochain_space_basis(alg, n));

  std::vector<ComplexSlice> slices(cap);
  for (std::size_t n = 1; n <= cap; ++n) {
    ComplexSlice& s = slices[n - 1];
    s.degree = n;
    s.C_basis = bases[n - 1];
    const CochainSpaceBasis& next = bases[n];

    // Columns of the next basis, for expressing coboundaries in coordinates.
    const std::size_t next_ambient = next.basis.ambient_dim;
    const Matrix next_cols = columns_matrix(next.basis.vectors, next_ambient);

    s.delta_matrix = Matrix(next.dim(), s.C_basis.dim());
    std::vector<Vector> images;
    images.reserve(s.C_basis.dim());
    for (std::size_t c = 0; c < s.C_basis.dim(); ++c) {
      Cochain image = delta(s.C_basis.vector_as_cochain(c));
      auto coords = solve(next_cols, image.coeffs);
      if (!coords)
        throw std::runtime_error(
            "build_complex: coboundary left the equivariant subspace (equivariance bug)");
      for (std::size_t r = 0; r < next.dim(); ++r) s.delta_matrix.at(r, c) = (*coords)[r];
      images.push_back(std::move(image.coeffs));
    }

    // Z = kernel of delta in coordinates, lifted back to the ambient space.
    s.Z_basis.ambient_dim = s.C_basis.basis.ambient_dim;
    for (const Vector& coords : kernel_basis(s.delta_matrix).vectors) {
      std::vector<Rational> cs(coords.begin(), coords.end());
      s.Z_basis.vectors.push_back(s.C_basis.combination(cs).coeffs);
    }

    // B at degree n+1 = independent subset of the images, in fixed order.
    if (n + 1 <= cap) {
      ComplexSlice& nxt = slices[n];
      nxt.B_basis.ambient_dim = next_ambient;
      for (std::size_t kept : independent_subset(images, next_ambient))
        nxt.B_basis.vectors.push_back(images[kept]);
    }
  }
  for (std::size_t n = 1; n <= cap; ++n)
    if (slices[n - 1].B_basis.ambient_dim == 0)
      slices[n - 1].B_basis.ambient_dim = slices[n - 1].Z_basis.ambient_dim;
  return slices;
}

Complex::Complex(AlgebraPtr alg, std::size_t cap) : alg_(std::move(alg)), cap_(cap) {
  slices_ = build_complex(alg_, cap_);
  representatives_.resize(cap_);
  for (std::size_t n = 1; n <= cap_; ++n) {
    const ComplexSlice& s = slices_[n - 1];
    // Extend B to a basis of Z greedily over Z_basis vectors in order.
    SubspaceBasis span = s.B_basis;
    for (const Vector& z : s.Z_basis.vectors) {
      if (span.dim() == s.dim_Z()) break;
      if (!in_span(z, span)) {
        span.vectors.push_back(z);
        representatives_[n - 1].push_back(Cochain(alg_, n, z));
      }
    }
  }
}

const ComplexSlice& Complex::slice(std::size_t n) const {
  if (n < 1 || n > cap_) throw std::invalid_argument("Complex::slice: degree out of range");
  return slices_[n - 1];
}

bool Complex::is_cocycle(const Cochain& z) const { return delta(z).is_zero(); }

bool Complex::is_coboundary(const Cochain& z) const {
  return in_span(z.coeffs, slice(z.degree).B_basis);
}

const std::vector<Cochain>& Complex::representatives(std::size_t n) const {
  if (n < 1 || n > cap_)
    throw std::invalid_argument("Complex::representatives: degree out of range");
  return representatives_[n - 1];
}

Cochain Complex::reduce_mod_coboundaries(const Cochain& z) const {
  const ComplexSlice& s = slice(z.degree);
  const std::vector<Cochain>& reps = representatives(z.degree);
  std::vector<Vector> cols;
  cols.reserve(s.dim_B() + reps.size());
  for (const Vector& v : s.B_basis.vectors) cols.push_back(v);
  for (const Cochain& r : reps) cols.push_back(r.coeffs);
  auto coords = solve(columns_matrix(cols, s.B_basis.ambient_dim), z.coeffs);
  if (!coords)
    throw std::invalid_argument("reduce_mod_coboundaries: input is not a cocycle");
  Cochain out(alg_, z.degree);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Rational& c = (*coords)[s.dim_B() + r];
    if (c.is_zero()) continue;
    for (std::size_t t = 0; t < out.coeffs.size(); ++t)
      out.coeffs[t] += c * reps[r].coeffs[t];
  }
  return out;
}

CohomologyReport cohomology_report(AlgebraPtr alg, std::size_t cap) {
  Complex cx(std::move(alg), cap);
  return cohomology_report(cx);
}

CohomologyReport cohomology_report(const Complex& cx) {
  const std::size_t cap = cx.cap();
  CohomologyReport report;
  report.algebra_name = cx.algebra()->name();
  report.cap = cap;
  report.representatives.resize(cap);
  for (std::size_t n = 1; n <= cap; ++n) {
    const ComplexSlice& s = cx.slice(n);
    DegreeSummary row;
    row.n = n;
    row.dim_C = s.dim_C();
    row.dim_Z = s.dim_Z();
    row.dim_B = s.dim_B();
    if (n >= 2) {
      row.dim_H = s.dim_H();
      report.representatives[n - 1] = cx.representatives(n);
    }
    report.degrees.push_back(row);
  }
  return report;
}

namespace {

void require_cocycle(const Complex& cx, const Cochain& z, const char* what) {
  if (!cx.is_cocycle(z))
    throw std::invalid_argument(std::string(what) + ": input is not a cocycle");
}

}  // namespace

Cochain induced_cup(const Complex& cx, const Cochain& x, const Cochain& y) {
  require_cocycle(cx, x, "induced_cup");
  require_cocycle(cx, y, "induced_cup");
  return cx.reduce_mod_coboundaries(cup(x, y));
}

Cochain induced_bracket(const Complex& cx, const Cochain& x, const Cochain& y) {
  require_cocycle(cx, x, "induced_bracket");
  require_cocycle(cx, y, "induced_bracket");
  return cx.reduce_mod_coboundaries(bracket(x, y));
}

Cochain random_cocycle(const Complex& cx, std::size_t degree, std::uint64_t seed,
                       long coeff_bound) {
  const ComplexSlice& s = cx.slice(degree);
  const std::vector<long> ints = random_combination(s.dim_Z(), seed, coeff_bound);
  Cochain out(cx.algebra(), degree);
  for (std::size_t i = 0; i < ints.size(); ++i) {
    if (ints[i] == 0) continue;
    const Rational c(ints[i]);
    for (std::size_t t = 0; t < out.coeffs.size(); ++t)
      out.coeffs[t] += c * s.Z_basis.vectors[i][t];
  }
  return out;
}

}  // namespace homalg
