#include "homalg/classical.hpp"

#include <stdexcept>

namespace homalg {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

bool mu_is_associative(const HomAlgebra& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational lhs(0), rhs(0);
          for (std::size_t s = 0; s < d; ++s) {
            lhs += alg.mu_at(i, j, s) * alg.mu_at(s, k, l);
            rhs += alg.mu_at(j, k, s) * alg.mu_at(i, s, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace

Matrix classical_coboundary_matrix(const HomAlgebra& alg, std::size_t degree) {
  const std::size_t d = alg.dim();
  const std::size_t n = degree;
  const std::size_t rows_args = ipow(d, n + 1);
  const std::size_t cols_args = ipow(d, n);
  Matrix m(rows_args * d, cols_args * d);

  std::vector<std::size_t> t(n + 1, 0);
  for (std::size_t row_arg = 0; row_arg < rows_args; ++row_arg) {
    std::size_t rem = row_arg;
    for (std::size_t s = n + 1; s-- > 0;) {
      t[s] = rem % d;
      rem /= d;
    }

    // a_1 * f(a_2..a_{n+1})
    std::size_t tail = 0;
    for (std::size_t s = 1; s <= n; ++s) tail = tail * d + t[s];
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t kp = 0; kp < d; ++kp) {
        const Rational& c = alg.mu_at(t[0], k, kp);
        if (!c.is_zero()) m.at(row_arg * d + kp, tail * d + k) += c;
      }

    // (-1)^i f(a_1, .., a_i a_{i+1}, .., a_{n+1}), contracting slots i-1, i
    for (std::size_t i = 1; i <= n; ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t s = 0; s < d; ++s) {
        const Rational& c = alg.mu_at(t[i - 1], t[i], s);
        if (c.is_zero()) continue;
        std::size_t col_arg = 0;
        for (std::size_t q = 0; q <= n; ++q) {
          if (q == i - 1)
            col_arg = col_arg * d + s;
          else if (q == i)
            continue;
          else
            col_arg = col_arg * d + t[q];
        }
        for (std::size_t kp = 0; kp < d; ++kp) {
          if (sign == 1)
            m.at(row_arg * d + kp, col_arg * d + kp) += c;
          else
            m.at(row_arg * d + kp, col_arg * d + kp) -= c;
        }
      }
    }

    // (-1)^{n+1} f(a_1..a_n) * a_{n+1}
    const int last_sign = ((n + 1) % 2 == 0) ? 1 : -1;
    std::size_t head = 0;
    for (std::size_t s = 0; s < n; ++s) head = head * d + t[s];
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t kp = 0; kp < d; ++kp) {
        const Rational& c = alg.mu_at(k, t[n], kp);
        if (c.is_zero()) continue;
        if (last_sign == 1)
          m.at(row_arg * d + kp, head * d + k) += c;
        else
          m.at(row_arg * d + kp, head * d + k) -= c;
      }
  }
  return m;
}

std::vector<DegreeSummary> classical_hochschild_dims(const HomAlgebra& alg, std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("classical_hochschild_dims: cap must be >= 2");
  if (!mu_is_associative(alg))
    throw std::invalid_argument("classical_hochschild_dims: product is not associative");
  const std::size_t d = alg.dim();

  std::vector<std::size_t> ranks(cap + 1, 0);    // rank of delta at degree n
  std::vector<std::size_t> kernels(cap + 1, 0);  // nullity of delta at degree n
  for (std::size_t n = 1; n <= cap; ++n) {
    const Matrix m = classical_coboundary_matrix(alg, n);
    ranks[n] = rank(m);
    kernels[n] = m.cols() - ranks[n];
  }

  std::vector<DegreeSummary> rows;
  for (std::size_t n = 1; n <= cap; ++n) {
    DegreeSummary row;
    row.n = n;
    row.dim_C = ipow(d, n + 1);
    row.dim_Z = kernels[n];
    row.dim_B = (n == 1) ? 0 : ranks[n - 1];
    if (n >= 2) row.dim_H = row.dim_Z - row.dim_B;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace homalg
