#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wlab/contraction_operators.hpp"
#include "wlab/lefschetz.hpp"

using namespace wlab;

namespace {

PqForm random_primitive(const ContextPtr& ctx, int p, int q, Rng& rng) {
  MatrixXc b = primitive_basis(ctx, p, q);
  PqForm psi(ctx, p, q);
  if (b.cols() > 0) psi.coeffs() = b * random_complex_vector(static_cast<int>(b.cols()), rng);
  return psi;
}

}  // namespace

TEST_SUITE("lefschetz") {

TEST_CASE("c constants") {
  CHECK(c_constant(4, 1, 0, 2) == 12.0);
  CHECK(c_constant(5, 2, 1, 0) == 1.0);
  CHECK(c_constant(3, 1, 1, 2) == 0.0);
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q)
        for (int k = 0; k <= n; ++k) {
          CHECK(c_constant(n, p, q, k) == double(oracle::c_k(n, p, q, k)));
          CHECK(c_constant(n, p, q, k) >= 0.0);
          CHECK((c_constant(n, p, q, k) == 0.0) == (k >= n - p - q + 1));
        }
}

TEST_CASE("primitivity") {
  auto ctx = AlgebraContext::identity(2);
  PqForm x = PqForm::basis(ctx, {1}, {1}) - PqForm::basis(ctx, {2}, {2});
  CHECK(is_primitive(x));
  CHECK(!is_primitive(kaehler_form(ctx)));
  Rng rng(1);
  auto c3 = testutil::random_context(3, 9);
  for (int p = 0; p <= 3; ++p) {
    CHECK(is_primitive(PqForm::random(c3, p, 0, 1, rng)));
    CHECK(is_primitive(PqForm::random(c3, 0, p, 1, rng)));
  }
  CHECK(is_primitive(PqForm(c3, 1, 1)));
}

TEST_CASE("primitive subspaces have the expected dimension") {
  // dim P^{p,q} = C(n,p)C(n,q) - C(n,p-1)C(n,q-1) for p + q <= n, else 0.
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 20 + n);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        long long expect = p + q <= n ? binomial(n, p) * binomial(n, q) -
                                            (p > 0 && q > 0 ? binomial(n, p - 1) * binomial(n, q - 1) : 0)
                                      : 0;
        CHECK(primitive_basis(ctx, p, q).cols() == expect);
      }
  }
}

TEST_CASE("decomposition of powers of omega and of primitives") {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 30 + n);
    PqForm w = PqForm::one(ctx);
    for (int p = 0; p <= n; ++p) {
      PrimitiveDecomposition d = primitive_decompose(w);
      for (int k = 0; k <= p; ++k) CHECK(norm(d.parts[k]) < (k == p ? 2.0 : 1e-10));
      CHECK(std::abs(d.parts[p].coeffs()(0) - 1.0) < 1e-10);
      if (p < n) w = lefschetz_L(w);
    }
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        PqForm psi = random_primitive(ctx, p, q, rng);
        PrimitiveDecomposition d = primitive_decompose(psi);
        CHECK(norm(d.parts[0] - psi) < 1e-10 * std::max(1.0, norm(psi)));
        for (std::size_t k = 1; k < d.parts.size(); ++k) CHECK(norm(d.parts[k]) < 1e-10);
      }
  }
}

TEST_CASE("reconstruction and primitivity on random forms") {
  Rng rng(3);
  auto c3 = AlgebraContext::identity(3);
  PqForm big = PqForm::random(c3, 2, 2, 1, rng);
  PrimitiveDecomposition d = primitive_decompose(big);
  CHECK(norm(reconstruct(d, big) - big) < 1e-9);
  for (const PqForm& part : d.parts) CHECK(is_primitive(part));
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 40 + n);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm f = PqForm::random(ctx, p, q, 1, rng);
        PrimitiveDecomposition e = primitive_decompose(f);
        CHECK(norm(reconstruct(e, f) - f) < 1e-9 * std::max(1.0, norm(f)));
        for (std::size_t k = 0; k < e.parts.size(); ++k) {
          const PqForm& part = e.parts[k];
          CHECK(part.p() == p - int(k));
          CHECK(is_primitive(part));
          if (part.p() + part.q() > n) CHECK(norm(part) < 1e-12);
        }
      }
  }
}

TEST_CASE("Lambda^k L^k on primitives and the norm of L^k") {
  auto c3 = AlgebraContext::identity(3);
  CHECK(lambda_l_power_defect(PqForm::one(c3), 1) < 1e-14);
  CHECK(norm_squared(lefschetz_L(PqForm::one(c3))) == doctest::Approx(3.0));
  Rng rng(4);
  auto c4 = AlgebraContext::identity(4);
  CHECK(lambda_l_power_defect(random_primitive(c4, 1, 1, rng), 2) < 1e-10);
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 50 + n);
    CHECK(l_power_norm_defect(PqForm::one(ctx), 1) < 1e-12);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q)
        for (int k = 0; k <= 2; ++k) {
          PqForm eta = random_primitive(ctx, p, q, rng);
          const double scale = std::max(1.0, norm_squared(eta));
          CHECK(l_power_norm_defect(eta, k) < 1e-9 * scale);
          if (p + q + 2 * k <= 2 * n) CHECK(lambda_l_power_defect(eta, k) < 1e-9 * scale);
        }
  }
  CHECK_THROWS(lambda_l_power_defect(kaehler_form(c3), 1));
  CHECK_THROWS(l_power_norm_defect(kaehler_form(c3), 1));
}

TEST_CASE("L power overflow and primitive roots") {
  auto ctx = AlgebraContext::identity(2);
  CHECK(!lefschetz_power(PqForm::one(ctx), 3).has_value());
  CHECK(lefschetz_power(PqForm::one(ctx), 2).has_value());
  Rng rng(5);
  PqForm psi = random_primitive(ctx, 1, 0, rng);
  auto phi = lefschetz_power(psi, 1);
  REQUIRE(phi.has_value());
  auto root = primitive_root(*phi, 1);
  REQUIRE(root.has_value());
  CHECK(norm(*root - psi) < 1e-10);
  CHECK(!primitive_root(PqForm::random(ctx, 1, 1, 1, rng), 1).has_value());
}

TEST_CASE("B form decomposes along the Lefschetz parts") {
  Rng rng(6);
  for (int n = 2; n <= 3; ++n) {
    auto ctx = testutil::random_context(n, 60 + n);
    KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1, 1});
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        PqForm f = PqForm::random(ctx, p, q, 1, rng);
        PrimitiveDecomposition d = primitive_decompose(f);
        cplx rhs = 0.0;
        for (std::size_t k = 0; k < d.parts.size(); ++k)
          rhs += c_constant(n, p - int(k), q - int(k), int(k)) * b_form(d.parts[k], d.parts[k], rc);
        CHECK(relative_residual(b_form(f, f, rc), rhs) < 1e-8);
      }
  }
}

}  // TEST_SUITE
