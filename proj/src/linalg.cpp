#include "homalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace homalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix multiply: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? Rational(1) : Rational(0))) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Rational& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out[r] += m.at(r, c) * v[c];
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot
// row, in order. First nonzero entry in column order is the pivot
// (deterministic; exact arithmetic needs no magnitude pivoting).
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(piv, c));
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref(work).size();
}

SubspaceBasis kernel_basis(const Matrix& m) {
  Matrix work = m;
  const std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  SubspaceBasis b;
  b.ambient_dim = m.cols();
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free_col);
    b.vectors.push_back(std::move(v));
  }
  return b;
}

bool in_span(const Vector& v, const SubspaceBasis& b) {
  if (v.size() != b.ambient_dim) throw std::invalid_argument("in_span: dimension mismatch");
  // rank([B]) == rank([B | v]) decided exactly.
  Matrix stacked(b.ambient_dim, b.dim() + 1);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < b.ambient_dim; ++i) stacked.at(i, j) = b.vectors[j][i];
  for (std::size_t i = 0; i < b.ambient_dim; ++i) stacked.at(i, b.dim()) = v[i];
  return rank(stacked) == b.dim();
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

Matrix columns_matrix(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("columns_matrix: ragged input");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors,
                                            std::size_t ambient_dim) {
  std::vector<std::size_t> kept;
  SubspaceBasis current;
  current.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!in_span(vectors[i], current)) {
      current.vectors.push_back(vectors[i]);
      kept.push_back(i);
    }
  }
  return kept;
}

}  // namespace homalg
