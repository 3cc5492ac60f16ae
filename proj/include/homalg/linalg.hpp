#ifndef HOMALG_LINALG_HPP
#define HOMALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  bool is_identity() const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// A list of linearly independent vectors spanning a subspace of K^ambient_dim.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;

  std::size_t dim() const { return vectors.size(); }
};

Vector mat_vec(const Matrix& m, const Vector& v);

/// Rank over the rationals, by exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}; dim = cols - rank.
SubspaceBasis kernel_basis(const Matrix& m);

/// True iff v is a rational linear combination of b.vectors (decided exactly).
/// Throws std::invalid_argument if v has the wrong length.
bool in_span(const Vector& v, const SubspaceBasis& b);

/// One exact solution of m x = rhs, or nullopt when inconsistent.
/// Throws std::invalid_argument if rhs has the wrong length.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Stacks vectors as columns; vectors must share length (the row count).
Matrix columns_matrix(const std::vector<Vector>& columns, std::size_t rows);

/// Greedily selects a maximal independent subset, scanning in order.
/// Returns the indices kept.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors,
                                            std::size_t ambient_dim);

}  // namespace homalg

#endif
