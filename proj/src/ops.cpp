#include "homalg/ops.hpp"

#include <stdexcept>
#include <vector>

namespace homalg {

namespace {

void require_same_algebra(const Cochain& a, const Cochain& b, const char* what) {
  if (a.algebra.get() != b.algebra.get() && !(a.algebra->dim() == b.algebra->dim() &&
                                              a.algebra->mu_flat() == b.algebra->mu_flat() &&
                                              a.algebra->alpha() == b.algebra->alpha()))
    throw std::invalid_argument(std::string(what) + ": cochains over different algebras");
}

void require_equivariant(const Cochain& f, const char* what) {
  if (!is_equivariant(f))
    throw std::invalid_argument(std::string(what) + ": input cochain is not equivariant");
}

void add_scaled(Cochain& acc, const Cochain& term, int sign) {
  if (sign == 1)
    acc += term;
  else
    acc -= term;
}

}  // namespace

Cochain delta(const Cochain& f) {
  require_equivariant(f, "delta");
  const HomAlgebra& alg = *f.algebra;
  if (!alg.multiplicative())
    throw std::invalid_argument("delta: algebra twist is not multiplicative");
  const std::size_t n = f.degree;
  const Cochain mu = mu_cochain(f.algebra);
  const Matrix& alpha = alg.alpha();
  const Matrix& alpha_pre = alg.alpha_power(n - 1);

  Cochain out = splice(apply_to_slot(mu, 0, alpha_pre), 1, f);
  for (std::size_t i = 1; i <= n; ++i) {
    Cochain fi = apply_to_slots_except(f, i - 1, alpha);
    add_scaled(out, splice(fi, i - 1, mu), parity_sign(static_cast<long>(i)));
  }
  add_scaled(out, splice(apply_to_slot(mu, 1, alpha_pre), 0, f),
             parity_sign(static_cast<long>(n) + 1));
  return out;
}

Cochain circ_i(const Cochain& f, const Cochain& g, std::size_t i) {
  require_same_algebra(f, g, "circ_i");
  if (i >= f.degree) throw std::invalid_argument("circ_i: index out of range");
  const Matrix& outer = f.algebra->alpha_power(g.degree - 1);
  return splice(apply_to_slots_except(f, i, outer), i, g);
}

Cochain circ(const Cochain& f, const Cochain& g) {
  require_same_algebra(f, g, "circ");
  const std::size_t m = f.degree, n = g.degree;
  Cochain out(f.algebra, m + n - 1);
  for (std::size_t i = 1; i <= m; ++i)
    add_scaled(out, circ_i(f, g, i - 1),
               parity_sign(static_cast<long>((n - 1) * (i - 1))));
  return out;
}

Cochain bracket(const Cochain& f, const Cochain& g) {
  const std::size_t m = f.degree, n = g.degree;
  Cochain out = circ(f, g);
  add_scaled(out, circ(g, f), -parity_sign(static_cast<long>((m - 1) * (n - 1))));
  return out;
}

Cochain cup(const Cochain& f, const Cochain& g) {
  require_same_algebra(f, g, "cup");
  require_equivariant(f, "cup");
  require_equivariant(g, "cup");
  const std::size_t m = f.degree, n = g.degree;
  const Cochain mu = mu_cochain(f.algebra);
  Cochain fp = apply_to_slots_except(f, m, f.algebra->alpha_power(n - 1));
  Cochain gp = apply_to_slots_except(g, n, f.algebra->alpha_power(m - 1));
  return splice(splice(mu, 1, gp), 0, fp);
}

Cochain homotopy(const Cochain& f, const Cochain& g, const Cochain& h) {
  require_same_algebra(f, g, "homotopy");
  require_same_algebra(f, h, "homotopy");
  const std::size_t m = f.degree, n = g.degree, p = h.degree;
  Cochain out(f.algebra, m + n + p - 2);
  if (p < 2) return out;
  for (std::size_t i = 0; i + 2 <= p; ++i) {
    const Cochain hf = circ_i(h, f, i);
    for (std::size_t j = m + i; j <= m + p - 2; ++j)
      add_scaled(out, circ_i(hf, g, j),
                 parity_sign(static_cast<long>((m - 1) * i + (n - 1) * j)));
  }
  return out;
}

int leibniz_defect_sign(std::size_t m, std::size_t n, std::size_t p) {
  const long e = static_cast<long>((p - 1) * (m + n - 1) + (m - 1) * n);
  return -parity_sign(e);
}

namespace {

// Shared scaffolding for the three coboundary term groups: evaluates the
// per-basis-tuple formulas, which are written in 1-based argument positions
// a_1..a_{m+n+p-1}.
class BlockEvaluator {
 public:
  BlockEvaluator(const Cochain& f, const Cochain& g, const Cochain& h)
      : f_(f), g_(g), h_(h), alg_(*f.algebra), d_(alg_.dim()) {}

  std::size_t m() const { return f_.degree; }
  std::size_t n() const { return g_.degree; }
  std::size_t p() const { return h_.degree; }
  std::size_t total_args() const { return m() + n() + p() - 1; }

  void set_tuple(const std::vector<std::size_t>& idx) { idx_ = &idx; }

  // alpha^theta e_{a_t}
  Vector arg(std::size_t theta, std::size_t t) const {
    const Matrix& pw = alg_.alpha_power(theta);
    Vector v(d_);
    const std::size_t col = (*idx_)[t - 1];
    for (std::size_t r = 0; r < d_; ++r) v[r] = pw.at(r, col);
    return v;
  }

  void append_block(std::vector<Vector>& out, std::size_t theta, std::size_t lo,
                    std::size_t hi) const {
    for (std::size_t t = lo; t <= hi; ++t) out.push_back(arg(theta, t));
  }

  // f(alpha^theta a_start, .., alpha^theta a_{start+m-1}); likewise for g.
  Vector eval_f(std::size_t theta, std::size_t start) const {
    return eval_block(f_, theta, start, m());
  }
  Vector eval_g(std::size_t theta, std::size_t start) const {
    return eval_block(g_, theta, start, n());
  }
  Vector eval_h(const std::vector<Vector>& args) const {
    return h_.evaluate(std::span<const Vector>(args.data(), args.size()));
  }

  Vector mu(const Vector& a, const Vector& b) const { return alg_.mu_apply(a, b); }

  Vector alpha_pow(const Vector& v, std::size_t theta) const {
    return alg_.alpha_power_apply(v, theta);
  }

 private:
  Vector eval_block(const Cochain& c, std::size_t theta, std::size_t start,
                    std::size_t count) const {
    std::vector<Vector> args;
    args.reserve(count);
    for (std::size_t t = start; t < start + count; ++t) args.push_back(arg(theta, t));
    return c.evaluate(std::span<const Vector>(args.data(), args.size()));
  }

  const Cochain& f_;
  const Cochain& g_;
  const Cochain& h_;
  const HomAlgebra& alg_;
  std::size_t d_;
  const std::vector<std::size_t>* idx_ = nullptr;
};

void check_block_ranges(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                        std::size_t j) {
  require_same_algebra(f, g, "leibniz_block");
  require_same_algebra(f, h, "leibniz_block");
  const std::size_t m = f.degree, p = h.degree;
  if (i < 1 || i + 1 > p) throw std::invalid_argument("leibniz_block: i out of range");
  if (j < m + i || j > m + p - 1) throw std::invalid_argument("leibniz_block: j out of range");
}

// Fills the output tensor by evaluating `term` on every basis tuple.
template <typename TermFn>
Cochain tabulate(const Cochain& f, const Cochain& g, const Cochain& h, TermFn&& term) {
  BlockEvaluator ev(f, g, h);
  const std::size_t d = f.dim();
  const std::size_t N = ev.total_args();
  Cochain out(f.algebra, N);
  std::vector<std::size_t> idx(N, 0);
  const std::size_t tuples = out.arg_count();
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rem = flat;
    for (std::size_t t = N; t-- > 0;) {
      idx[t] = rem % d;
      rem /= d;
    }
    ev.set_tuple(idx);
    Vector value = term(ev);
    for (std::size_t k = 0; k < d; ++k) out.coeffs[flat * d + k] = value[k];
  }
  return out;
}

void axpy_sign(Vector& acc, const Vector& v, int sign) {
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (sign == 1)
      acc[k] += v[k];
    else
      acc[k] -= v[k];
  }
}

}  // namespace

Cochain leibniz_block_head(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                           std::size_t j) {
  check_block_ranges(f, g, h, i, j);
  const std::size_t m = f.degree, n = g.degree, p = h.degree;
  const std::size_t N = m + n + p - 1;
  return tabulate(f, g, h, [&](const BlockEvaluator& ev) {
    Vector acc(ev.arg(0, 1).size(), Rational(0));
    // mu(alpha^{m+n+p-3} a_1, h(a_{2,i}^{m+n-2}, f^{n-1}, a_{i+m+1,j}^{m+n-2},
    //                           g^{m-1}, a_{j+n+1,N}^{m+n-2}))
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 2, 2, i);
      hargs.push_back(ev.eval_f(n - 1, i + 1));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 2, i + m + 1, j);
      hargs.push_back(ev.eval_g(m - 1, j + 1));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 2, j + n + 1, N);
      axpy_sign(acc, ev.mu(ev.arg(m + n + p - 3, 1), ev.eval_h(hargs)), 1);
    }
    // sum_{lambda=1}^{i-1} (-1)^lambda h(a_{1,lambda-1}^{m+n-1},
    //   alpha^{m+n-2} mu(a_lambda, a_{lambda+1}), a_{lambda+2,i}^{m+n-1}, f^n,
    //   a_{i+m+1,j}^{m+n-1}, g^m, a_{j+n+1,N}^{m+n-1})
    for (std::size_t lam = 1; lam + 1 <= i; ++lam) {
      std::vector<Vector> hargs;
      if (lam >= 2) ev.append_block(hargs, m + n - 1, 1, lam - 1);
      hargs.push_back(ev.alpha_pow(ev.mu(ev.arg(0, lam), ev.arg(0, lam + 1)), m + n - 2));
      if (i >= lam + 2) ev.append_block(hargs, m + n - 1, lam + 2, i);
      hargs.push_back(ev.eval_f(n, i + 1));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m + 1, j);
      hargs.push_back(ev.eval_g(m, j + 1));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(lam)));
    }
    // (-1)^i h(a_{1,i-1}^{m+n-1}, mu(alpha^{m+n-2} a_i, f^{n-1}),
    //          a_{i+m+1,j}^{m+n-1}, g^m, a_{j+n+1,N}^{m+n-1})
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.mu(ev.arg(m + n - 2, i), ev.eval_f(n - 1, i + 1)));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m + 1, j);
      hargs.push_back(ev.eval_g(m, j + 1));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(i)));
    }
    return acc;
  });
}

Cochain leibniz_block_mid(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                          std::size_t j) {
  check_block_ranges(f, g, h, i, j);
  const std::size_t m = f.degree, n = g.degree;
  const std::size_t N = m + n + h.degree - 1;
  return tabulate(f, g, h, [&](const BlockEvaluator& ev) {
    Vector acc(ev.arg(0, 1).size(), Rational(0));
    // (-1)^{m+i-1} h(a_{1,i-1}^{m+n-1}, mu(f^{n-1}, alpha^{m+n-2} a_{i+m}),
    //               a_{i+m+1,j}^{m+n-1}, g^m, a_{j+n+1,N}^{m+n-1})
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.mu(ev.eval_f(n - 1, i), ev.arg(m + n - 2, i + m)));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m + 1, j);
      hargs.push_back(ev.eval_g(m, j + 1));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(m + i) - 1));
    }
    // sum_{lambda=m+i}^{j-1} (-1)^lambda h(a_{1,i-1}^{m+n-1}, f^n,
    //   a_{i+m,lambda-1}^{m+n-1}, alpha^{m+n-2} mu(a_lambda, a_{lambda+1}),
    //   a_{lambda+2,j}^{m+n-1}, g^m, a_{j+n+1,N}^{m+n-1})
    for (std::size_t lam = m + i; lam + 1 <= j; ++lam) {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.eval_f(n, i));
      if (lam >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m, lam - 1);
      hargs.push_back(ev.alpha_pow(ev.mu(ev.arg(0, lam), ev.arg(0, lam + 1)), m + n - 2));
      if (j >= lam + 2) ev.append_block(hargs, m + n - 1, lam + 2, j);
      hargs.push_back(ev.eval_g(m, j + 1));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(lam)));
    }
    // (-1)^j h(a_{1,i-1}^{m+n-1}, f^n, a_{i+m,j-1}^{m+n-1},
    //          mu(alpha^{m+n-2} a_j, g^{m-1}), a_{j+n+1,N}^{m+n-1})
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.eval_f(n, i));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m, j - 1);
      hargs.push_back(ev.mu(ev.arg(m + n - 2, j), ev.eval_g(m - 1, j + 1)));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(j)));
    }
    return acc;
  });
}

Cochain leibniz_block_tail(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                           std::size_t j) {
  check_block_ranges(f, g, h, i, j);
  const std::size_t m = f.degree, n = g.degree, p = h.degree;
  const std::size_t N = m + n + p - 1;
  return tabulate(f, g, h, [&](const BlockEvaluator& ev) {
    Vector acc(ev.arg(0, 1).size(), Rational(0));
    // (-1)^{j+n-1} h(a_{1,i-1}^{m+n-1}, f^n, a_{i+m,j-1}^{m+n-1},
    //               mu(g^{m-1}, alpha^{m+n-2} a_{j+n}), a_{j+n+1,N}^{m+n-1})
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.eval_f(n, i));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m, j - 1);
      hargs.push_back(ev.mu(ev.eval_g(m - 1, j), ev.arg(m + n - 2, j + n)));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n + 1, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(j + n) - 1));
    }
    // sum_{lambda=j+n}^{N-1} (-1)^lambda h(a_{1,i-1}^{m+n-1}, f^n,
    //   a_{i+m,j-1}^{m+n-1}, g^m, a_{j+n,lambda-1}^{m+n-1},
    //   alpha^{m+n-2} mu(a_lambda, a_{lambda+1}), a_{lambda+2,N}^{m+n-1})
    for (std::size_t lam = j + n; lam + 1 <= N; ++lam) {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 1, 1, i - 1);
      hargs.push_back(ev.eval_f(n, i));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 1, i + m, j - 1);
      hargs.push_back(ev.eval_g(m, j));
      if (lam >= j + n + 1) ev.append_block(hargs, m + n - 1, j + n, lam - 1);
      hargs.push_back(ev.alpha_pow(ev.mu(ev.arg(0, lam), ev.arg(0, lam + 1)), m + n - 2));
      if (N >= lam + 2) ev.append_block(hargs, m + n - 1, lam + 2, N);
      axpy_sign(acc, ev.eval_h(hargs), parity_sign(static_cast<long>(lam)));
    }
    // (-1)^{m+n+p-1} mu(h(a_{1,i-1}^{m+n-2}, f^{n-1}, a_{i+m,j-1}^{m+n-2},
    //                   g^{m-1}, a_{j+n,N-1}^{m+n-2}), alpha^{m+n+p-3} a_N)
    {
      std::vector<Vector> hargs;
      if (i >= 2) ev.append_block(hargs, m + n - 2, 1, i - 1);
      hargs.push_back(ev.eval_f(n - 1, i));
      if (j >= i + m + 1) ev.append_block(hargs, m + n - 2, i + m, j - 1);
      hargs.push_back(ev.eval_g(m - 1, j));
      if (N >= j + n + 1) ev.append_block(hargs, m + n - 2, j + n, N - 1);
      axpy_sign(acc, ev.mu(ev.eval_h(hargs), ev.arg(m + n + p - 3, N)),
                parity_sign(static_cast<long>(m + n + p) - 1));
    }
    return acc;
  });
}

}  // namespace homalg
