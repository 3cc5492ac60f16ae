#include "homalg/cochain.hpp"

#include <stdexcept>
#include <utility>

namespace homalg {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

Cochain::Cochain(AlgebraPtr alg, std::size_t degree_) : algebra(std::move(alg)), degree(degree_) {
  if (degree == 0) throw std::invalid_argument("Cochain: degree must be >= 1");
  coeffs.assign(ipow(algebra->dim(), degree + 1), Rational(0));
}

Cochain::Cochain(AlgebraPtr alg, std::size_t degree_, Vector coeffs_)
    : algebra(std::move(alg)), degree(degree_), coeffs(std::move(coeffs_)) {
  if (degree == 0) throw std::invalid_argument("Cochain: degree must be >= 1");
  if (coeffs.size() != ipow(algebra->dim(), degree + 1))
    throw std::invalid_argument("Cochain: coefficient count does not match degree");
}

std::size_t Cochain::arg_count() const { return ipow(dim(), degree); }

bool Cochain::is_zero() const {
  for (const Rational& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (degree != o.degree || algebra->dim() != o.algebra->dim())
    throw std::invalid_argument("Cochain +=: shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (degree != o.degree || algebra->dim() != o.algebra->dim())
    throw std::invalid_argument("Cochain -=: shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Cochain& Cochain::scale(const Rational& c) {
  for (Rational& x : coeffs) x *= c;
  return *this;
}

Vector Cochain::evaluate(std::span<const Vector> args) const {
  if (args.size() != degree) throw std::invalid_argument("evaluate: wrong argument count");
  const std::size_t d = dim();
  // Contract the leading slot with each argument in turn.
  Vector current = coeffs;
  for (std::size_t s = 0; s < degree; ++s) {
    const Vector& v = args[s];
    if (v.size() != d) throw std::invalid_argument("evaluate: argument has wrong dimension");
    const std::size_t block = current.size() / d;
    Vector next(block, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i].is_zero()) continue;
      const std::size_t base = i * block;
      for (std::size_t t = 0; t < block; ++t) next[t] += v[i] * current[base + t];
    }
    current = std::move(next);
  }
  return current;  // length d: the output coordinates
}

Cochain zero_cochain(AlgebraPtr alg, std::size_t degree) { return Cochain(std::move(alg), degree); }

Cochain identity_cochain(AlgebraPtr alg) {
  Cochain f(alg, 1);
  const std::size_t d = alg->dim();
  for (std::size_t i = 0; i < d; ++i) f.coeffs[i * d + i] = Rational(1);
  return f;
}

Cochain mu_cochain(AlgebraPtr alg) {
  Cochain f(alg, 2);
  f.coeffs = alg->mu_flat();
  return f;
}

Cochain apply_to_slot(const Cochain& f, std::size_t slot, const Matrix& m) {
  if (slot >= f.degree) throw std::invalid_argument("apply_to_slot: slot out of range");
  const std::size_t d = f.dim();
  if (m.is_identity()) return f;
  const std::size_t lo_count = ipow(d, f.degree - 1 - slot) * d;  // trailing args and output
  const std::size_t hi_count = ipow(d, slot);
  Cochain out(f.algebra, f.degree);
  for (std::size_t hi = 0; hi < hi_count; ++hi)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        const Rational& c = m.at(r, j);
        if (c.is_zero()) continue;
        const std::size_t src = (hi * d + r) * lo_count;
        const std::size_t dst = (hi * d + j) * lo_count;
        for (std::size_t lo = 0; lo < lo_count; ++lo)
          out.coeffs[dst + lo] += c * f.coeffs[src + lo];
      }
  return out;
}

Cochain apply_to_slots_except(const Cochain& f, std::size_t except, const Matrix& m) {
  if (m.is_identity()) return f;
  Cochain out = f;
  for (std::size_t s = 0; s < f.degree; ++s)
    if (s != except) out = apply_to_slot(out, s, m);
  return out;
}

Cochain apply_to_output(const Cochain& f, const Matrix& m) {
  const std::size_t d = f.dim();
  if (m.is_identity()) return f;
  Cochain out(f.algebra, f.degree);
  for (std::size_t a = 0; a < f.arg_count(); ++a)
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& c = f.coeffs[a * d + k];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r) {
        const Rational& mk = m.at(r, k);
        if (!mk.is_zero()) out.coeffs[a * d + r] += mk * c;
      }
    }
  return out;
}

Cochain splice(const Cochain& f, std::size_t slot, const Cochain& g) {
  if (slot >= f.degree) throw std::invalid_argument("splice: slot out of range");
  if (f.dim() != g.dim()) throw std::invalid_argument("splice: algebra dimension mismatch");
  const std::size_t d = f.dim();
  const std::size_t m = f.degree, n = g.degree;
  const std::size_t lo_count = ipow(d, m - 1 - slot) * d;  // f's trailing args + output
  const std::size_t hi_count = ipow(d, slot);
  const std::size_t g_args = ipow(d, n);
  Cochain out(f.algebra, m + n - 1);
  for (std::size_t hi = 0; hi < hi_count; ++hi)
    for (std::size_t ga = 0; ga < g_args; ++ga)
      for (std::size_t r = 0; r < d; ++r) {
        const Rational& gc = g.coeffs[ga * d + r];
        if (gc.is_zero()) continue;
        const std::size_t src = (hi * d + r) * lo_count;
        const std::size_t dst = (hi * g_args + ga) * lo_count;
        for (std::size_t lo = 0; lo < lo_count; ++lo)
          out.coeffs[dst + lo] += gc * f.coeffs[src + lo];
      }
  return out;
}

bool is_equivariant(const Cochain& f) {
  const Matrix& alpha = f.algebra->alpha();
  return apply_to_output(f, alpha) == apply_to_slots_except(f, f.degree, alpha);
}

Cochain CochainSpaceBasis::vector_as_cochain(std::size_t idx) const {
  return Cochain(algebra, degree, basis.vectors.at(idx));
}

Cochain CochainSpaceBasis::combination(const std::vector<Rational>& coords) const {
  if (coords.size() != basis.dim())
    throw std::invalid_argument("combination: coordinate count mismatch");
  Cochain out(algebra, degree);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t t = 0; t < out.coeffs.size(); ++t)
      out.coeffs[t] += coords[i] * basis.vectors[i][t];
  }
  return out;
}

Matrix equivariance_defect_matrix(const HomAlgebra& alg, std::size_t degree) {
  const std::size_t d = alg.dim();
  const std::size_t args = ipow(d, degree);
  const std::size_t total = args * d;
  const Matrix& alpha = alg.alpha();
  Matrix m(total, total);
  // (alpha o f)[A][k'] = sum_k alpha(k', k) f[A][k]
  for (std::size_t a = 0; a < args; ++a)
    for (std::size_t kp = 0; kp < d; ++kp)
      for (std::size_t k = 0; k < d; ++k) m.at(a * d + kp, a * d + k) += alpha.at(kp, k);
  // (f o alpha^n)[A'][k] = sum_A f[A][k] * prod_t alpha(A_t, A'_t)
  for (std::size_t ap = 0; ap < args; ++ap)
    for (std::size_t a = 0; a < args; ++a) {
      Rational prod(1);
      std::size_t ra = a, rap = ap;
      for (std::size_t t = 0; t < degree && !prod.is_zero(); ++t) {
        // Slots are read least-significant first; the product is symmetric
        // over slots so the order does not matter.
        prod *= alpha.at(ra % d, rap % d);
        ra /= d;
        rap /= d;
      }
      if (prod.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) m.at(ap * d + k, a * d + k) -= prod;
    }
  return m;
}

CochainSpaceBasis cochain_space_basis(AlgebraPtr alg, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("cochain_space_basis: degree must be >= 1");
  CochainSpaceBasis out;
  out.algebra = alg;
  out.degree = degree;
  out.basis = kernel_basis(equivariance_defect_matrix(*alg, degree));
  return out;
}

std::uint64_t split_mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = a;
  std::uint64_t h = split_mix64(state);
  state = h ^ (b + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
  return split_mix64(state);
}

std::vector<long> random_combination(std::size_t count, std::uint64_t seed, long coeff_bound) {
  if (coeff_bound < 0) throw std::invalid_argument("random_combination: negative bound");
  std::vector<long> out(count, 0);
  std::uint64_t state = seed;
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(coeff_bound) + 1;
  for (std::size_t i = 0; i < count; ++i)
    out[i] = static_cast<long>(split_mix64(state) % span) - coeff_bound;
  return out;
}

Cochain random_cochain(const CochainSpaceBasis& basis, std::uint64_t seed, long coeff_bound) {
  const std::vector<long> ints = random_combination(basis.dim(), seed, coeff_bound);
  std::vector<Rational> coords(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) coords[i] = Rational(ints[i]);
  return basis.combination(coords);
}

}  // namespace homalg
