#include <doctest.h>

#include "homalg/cochain.hpp"
#include "test_support.hpp"

using namespace homalg;
using namespace homalg::test;

namespace {

// Independent commutant oracle for degree 1: vectorizes [alpha, X] = 0 into
// a (d^2 x d^2) system by direct entry bookkeeping and returns its nullity.
std::size_t commutant_dimension(const Matrix& alpha) {
  const std::size_t d = alpha.rows();
  Matrix sys(d * d, d * d);
  // (alpha X - X alpha)[r][c] = sum_s alpha(r,s) X(s,c) - X(r,s) alpha(s,c)
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t s = 0; s < d; ++s) {
        sys.at(r * d + c, s * d + c) += alpha.at(r, s);
        sys.at(r * d + c, r * d + s) -= alpha.at(s, c);
      }
  return kernel_basis(sys).dim();
}

}  // namespace

TEST_CASE("equivariance checks") {
  auto alg = singular_twist();
  SUBCASE("identity map is equivariant") { CHECK(is_equivariant(identity_cochain(alg))); }
  SUBCASE("mu of a multiplicative algebra is equivariant") {
    CHECK(is_equivariant(mu_cochain(alg)));
  }
  SUBCASE("constant-to-e1 map is not equivariant here") {
    // f(e_i) = e_1 for both i: alpha f(e_2) = e_1 - e_2 but f(alpha e_2) = f(0) = 0.
    Cochain f(alg, 1);
    f.coeffs[0 * 2 + 0] = Rational(1);
    f.coeffs[1 * 2 + 0] = Rational(1);
    CHECK(!is_equivariant(f));
  }
}

TEST_CASE("cochain space bases") {
  SUBCASE("identity twist gives the full space") {
    auto alg = duals();
    for (std::size_t n = 1; n <= 3; ++n) {
      auto basis = cochain_space_basis(alg, n);
      std::size_t full = 1;
      for (std::size_t t = 0; t <= n; ++t) full *= alg->dim();
      CHECK(basis.dim() == full);
    }
  }
  SUBCASE("degree 1 on the singular twist matches the commutant oracle") {
    auto alg = singular_twist();
    auto basis = cochain_space_basis(alg, 1);
    CHECK(basis.dim() == commutant_dimension(alg->alpha()));
    CHECK(basis.dim() == 2);
  }
  SUBCASE("degree 2 on the singular twist: frozen kernel dimension") {
    // Direct kernel computation on the 8-dimensional coefficient space
    // (regression fixture; alpha has eigenvalues 1 and 0).
    auto alg = singular_twist();
    CHECK(cochain_space_basis(alg, 2).dim() == 4);
  }
  SUBCASE("basis vectors are independent and individually equivariant") {
    for (auto alg : {singular_twist(), duals_twisted()}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        auto basis = cochain_space_basis(alg, n);
        Matrix stacked = columns_matrix(basis.basis.vectors, basis.basis.ambient_dim);
        CHECK(rank(stacked) == basis.dim());
        for (std::size_t i = 0; i < basis.dim(); ++i)
          CHECK(is_equivariant(basis.vector_as_cochain(i)));
      }
    }
  }
}

TEST_CASE("random cochains") {
  auto alg = singular_twist();
  auto basis = cochain_space_basis(alg, 2);

  SUBCASE("coeff_bound 0 gives the zero cochain") {
    CHECK(random_cochain(basis, 42, 0).is_zero());
  }
  SUBCASE("deterministic from the seed") {
    CHECK(random_cochain(basis, 7, 3) == random_cochain(basis, 7, 3));
  }
  SUBCASE("equivariant by construction, over 100 seeds") {
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      CHECK(is_equivariant(random_cochain(basis, seed, 3)));
  }
  SUBCASE("closed under addition and scaling") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Cochain a = random_cochain(basis, mix_seed(seed, 1), 3);
      Cochain b = random_cochain(basis, mix_seed(seed, 2), 3);
      Cochain sum = a + b;
      sum.scale(Rational(5, 3));
      CHECK(is_equivariant(sum));
    }
  }
  SUBCASE("empty basis yields the zero cochain") {
    CochainSpaceBasis empty;
    empty.algebra = alg;
    empty.degree = 2;
    empty.basis.ambient_dim = 8;
    CHECK(random_cochain(empty, 3, 5).is_zero());
  }
}

TEST_CASE("flattening round-trips through evaluation") {
  // The flat coefficient order is (i_1..i_n, k) row-major: evaluating at
  // basis tuples must read back exactly the stored coefficients.
  auto alg = duals_twisted();
  const std::size_t d = alg->dim();
  auto basis = cochain_space_basis(alg, 3);
  Cochain f = random_cochain(basis, 11, 4);
  for (std::size_t i1 = 0; i1 < d; ++i1)
    for (std::size_t i2 = 0; i2 < d; ++i2)
      for (std::size_t i3 = 0; i3 < d; ++i3) {
        std::vector<Vector> args = {unit(d, i1), unit(d, i2), unit(d, i3)};
        Vector out = f.evaluate(std::span<const Vector>(args.data(), args.size()));
        for (std::size_t k = 0; k < d; ++k)
          CHECK(out[k] == f.coeffs[((i1 * d + i2) * d + i3) * d + k]);
      }
}

TEST_CASE("evaluate is multilinear") {
  auto alg = singular_twist();
  const std::size_t d = alg->dim();
  auto basis = cochain_space_basis(alg, 2);
  Cochain f = random_cochain(basis, 3, 3);
  Vector u = {Rational(2), Rational(-1, 3)};
  Vector v = {Rational(1, 2), Rational(5)};
  Vector w = {Rational(-3), Rational(7, 2)};
  auto eval = [&](const Vector& a, const Vector& b) {
    std::vector<Vector> args = {a, b};
    return f.evaluate(std::span<const Vector>(args.data(), args.size()));
  };
  Vector uv = eval(u, v), uw = eval(u, w);
  Vector vw_sum(d);
  for (std::size_t k = 0; k < d; ++k) vw_sum[k] = uv[k] + uw[k];
  Vector both = eval(u, [&] {
    Vector s(d);
    for (std::size_t k = 0; k < d; ++k) s[k] = v[k] + w[k];
    return s;
  }());
  CHECK(both == vw_sum);
}

TEST_CASE("shape errors") {
  auto alg = singular_twist();
  CHECK_THROWS_AS(Cochain(alg, 0), std::invalid_argument);
  CHECK_THROWS_AS(Cochain(alg, 2, Vector(5)), std::invalid_argument);
  Cochain f(alg, 1);
  std::vector<Vector> wrong = {unit(2, 0), unit(2, 1)};
  CHECK_THROWS_AS(f.evaluate(std::span<const Vector>(wrong.data(), wrong.size())),
                  std::invalid_argument);
}
