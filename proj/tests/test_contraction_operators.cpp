#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wlab/contraction_operators.hpp"
#include "wlab/lefschetz.hpp"

using namespace wlab;
using testutil::max_abs;

TEST_SUITE("contraction_operators") {

TEST_CASE("T on dzbar^1 with v = dz^1 dz^1") {
  auto ctx = AlgebraContext::identity(2);
  PqForm phi = PqForm::basis(ctx, {}, {1});
  MatrixXc v = MatrixXc::Zero(2, 2);
  v(0, 0) = 1.0;
  PqForm t = t_apply(phi, v);
  PqForm ora = oracle::to_form(oracle::t_apply(oracle::from_form(phi), v, ctx->g_inv()), ctx);
  CHECK(max_abs(t.coeffs() - ora.coeffs()) < 1e-15);
  // 2 I_{d/dzbar^1}(dz^1 ^ dzbar^1) = -2 dz^1
  CHECK(t.coeff({1}, {}) == cplx(-2.0));
  CHECK(norm_squared(t) == doctest::Approx(4.0));
}

TEST_CASE("T agrees with the oracle, is linear, and vanishes at the edges") {
  Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 10 + n);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm phi = PqForm::random(ctx, p, q, 1, rng);
        MatrixXc v1 = random_symmetric_complex(n, rng), v2 = random_symmetric_complex(n, rng);
        PqForm t = t_apply(phi, v1);
        if (q == 0 || p == n) {
          CHECK(norm(t) == 0.0);
          continue;
        }
        if (p + q <= 5) {
          PqForm ora = oracle::to_form(oracle::t_apply(oracle::from_form(phi), v1, ctx->g_inv()), ctx);
          CHECK(max_abs(t.coeffs() - ora.coeffs()) < 1e-11);
        }
        CHECK(norm(t_apply(phi, v1 + v2) - t - t_apply(phi, v2)) < 1e-12 * (1 + norm(t)));
      }
  }
  auto ctx = AlgebraContext::identity(2);
  MatrixXc bad = MatrixXc::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS(t_apply(PqForm::basis(ctx, {}, {1}), bad));
}

TEST_CASE("T components reconstruct t_apply") {
  Rng rng(2);
  auto ctx = testutil::random_context(3, 21);
  auto basis = sym2_basis(*ctx);
  for (int p = 0; p < 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      PqForm phi = PqForm::random(ctx, p, q, 1, rng);
      MatrixXc v = random_symmetric_complex(3, rng);
      TensorValuedForm t = t_operator(phi);
      REQUIRE(t.carrier_dim() == 6);
      PqForm sum(ctx, p + 1, q - 1);
      for (int a = 0; a < t.carrier_dim(); ++a) {
        // <u_A, v> pairs a contravariant basis element with covariant v
        cplx c = (basis[a].array() * v.array()).sum();
        sum += c * t.components[a];
      }
      CHECK(norm(sum - t_apply(phi, v)) < 1e-11 * std::max(1.0, norm(sum)));
    }
  CHECK(norm_squared(t_operator(PqForm(ctx, 1, 1))) == 0.0);
}

TEST_CASE("norm identities for T and S") {
  Rng rng(3);
  auto id2 = AlgebraContext::identity(2);
  PqForm phi = PqForm::basis(id2, {}, {1});
  double ll = inner_product(lefschetz_dual(lefschetz_L(phi)), phi).real();
  CHECK(norm_squared(t_operator(phi)) == doctest::Approx(8.0 - 2.0 * ll));
  CHECK(norm_squared(s_operator(phi)) == doctest::Approx(1.0));
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 30 + n, 2);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm f = PqForm::random(ctx, p, q, 1, rng);
        CHECK(norm_t_identity_defect(f) < 1e-10 * std::max(1.0, norm_squared(f)));
        // both forms of the right-hand side agree by adjointness
        if (p < n && q < n)
          CHECK(norm_squared(lefschetz_L(f)) ==
                doctest::Approx(inner_product(lefschetz_dual(lefschetz_L(f)), f).real()).epsilon(1e-10));
        PqForm e = PqForm::random(ctx, p, q, 2, rng);
        CHECK(norm_squared(s_operator(e)) == doctest::Approx(q * norm_squared(e)).epsilon(1e-10));
        TensorValuedForm s = s_operator(e);
        CHECK(s.carrier_dim() == 2 * n);
      }
  }
}

TEST_CASE("Y vanishes on functions and on the Kaehler form") {
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 40 + n);
    CHECK(norm_squared(y_operator(PqForm::one(ctx))) == 0.0);
    CHECK(norm_squared(y_operator(kaehler_form(ctx))) < 1e-24);
    CHECK(y_operator(PqForm::one(ctx)).carrier_dim() == n * n);
  }
  auto b = AlgebraContext::identity(2, 2);
  CHECK_THROWS(y_operator(PqForm(b, 1, 1, 2)));
}

TEST_CASE("Y components agree with the oracle") {
  Rng rng(4);
  for (int n = 1; n <= 3; ++n) {
    auto ctx = testutil::random_context(n, 50 + n);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm phi = PqForm::random(ctx, p, q, 1, rng);
        std::vector<PqForm> y = y_coordinate_components(phi);
        oracle::Dense d = oracle::from_form(phi);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            PqForm ora = oracle::to_form(oracle::y_component(d, i, j, ctx->g_inv()), ctx);
            CHECK(max_abs(y[i * n + j].coeffs() - ora.coeffs()) < 1e-12);
          }
      }
  }
}

TEST_CASE("B form: Hermitian, real diagonal, FS gives 2|T|^2, oracle value") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n) {
    auto ctx = testutil::random_context(n, 60 + n);
    KaehlerCurvature fs = model_fubini_study(ctx);
    KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1, 1});
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm a = PqForm::random(ctx, p, q, 1, rng), b = PqForm::random(ctx, p, q, 1, rng);
        CHECK(relative_residual(b_form(a, a, fs), cplx(2.0 * norm_squared(t_operator(a)))) < 1e-12);
        cplx baa = b_form(a, a, rc);
        CHECK(std::abs(baa.imag()) < 1e-10 * std::max(1.0, std::abs(baa)));
        CHECK(relative_residual(b_form(a, b, rc), std::conj(b_form(b, a, rc))) < 1e-12);
        if (q > 0 && p < n) {
          cplx ora = oracle::b_form(oracle::from_form(a), rc, ctx->g(), ctx->g_inv(), ctx->frame());
          CHECK(relative_residual(baa, ora) < 1e-10);
        }
      }
  }
  auto ctx = AlgebraContext::identity(2);
  CHECK_THROWS(b_form(PqForm(ctx, 0, 1), PqForm(ctx, 1, 1), model_fubini_study(ctx)));
}

TEST_CASE("B(L psi, phi) = B(psi, Lambda phi)") {
  Rng rng(6);
  for (int n = 2; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 70 + n);
    KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1});
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        PqForm psi = PqForm::random(ctx, p - 1, q - 1, 1, rng), phi = PqForm::random(ctx, p, q, 1, rng);
        CHECK(relative_residual(b_form(lefschetz_L(psi), phi, rc), b_form(psi, lefschetz_dual(phi), rc)) < 1e-9);
      }
  }
}

TEST_CASE("curvature action: zero inputs, q = 0, oracles") {
  Rng rng(7);
  auto ctx = testutil::random_context(3, 81, 2);
  PqForm f = PqForm::random(ctx, 1, 2, 2, rng);
  BundleCurvature zero_e(ctx);
  CHECK(curvature_action(f, KaehlerCurvature(ctx), &zero_e) == cplx(0.0));
  BundleCurvature re = random_bundle(ctx, rng, {1, -1});
  CHECK(curvature_action(PqForm::random(ctx, 2, 0, 2, rng), random_kaehler(ctx, rng, {1}), &re) == cplx(0.0));

  // Scalar forms: the final pairing and the pre-symmetrization operator form
  // both agree with the library.
  for (int n = 1; n <= 3; ++n) {
    auto c = testutil::random_context(n, 90 + n);
    KaehlerCurvature rc = random_kaehler(c, rng, {1, -1, 1});
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm phi = PqForm::random(c, p, q, 1, rng);
        oracle::Dense d = oracle::from_form(phi);
        cplx lib = curvature_action(phi, rc);
        CHECK(relative_residual(lib, oracle::bk_pairing_term(d, rc, c->g_inv())) < 1e-10);
        CHECK(relative_residual(lib, oracle::bk_operator_term(d, rc, c->g_inv())) < 1e-10);
      }
  }
}

TEST_CASE("bundle term agrees with the oracle (unit h)") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    Rng mr(200 + n);
    auto ctx = AlgebraContext::create(n, random_metric(n, mr), 2);
    BundleCurvature re = random_bundle(ctx, rng, {1, -1});
    for (int p = 0; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        PqForm phi = PqForm::random(ctx, p, q, 2, rng);
        std::vector<oracle::Dense> parts{oracle::from_form(phi.component(0)), oracle::from_form(phi.component(1))};
        CHECK(relative_residual(bundle_s_pairing(phi, re), oracle::bundle_term(parts, re, ctx->g_inv())) < 1e-10);
      }
  }
}

TEST_CASE("Bochner-Kodaira identity on a few bidegrees") {
  Rng rng(9);
  for (int r = 1; r <= 2; ++r) {
    auto ctx = testutil::random_context(3, 95 + r, r);
    for (int s = 0; s < 20; ++s) {
      KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1, 1});
      BundleCurvature re = random_bundle(ctx, rng, {1, -1});
      PqForm phi = PqForm::random(ctx, s % 4, 1 + s % 3, r, rng);
      cplx lhs = curvature_action(phi, rc, &re);
      cplx rhs = 0.25 * b_form(phi, phi, rc) + bundle_s_pairing(phi, re);
      CHECK(relative_residual(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("Kaehler-Weitzenboeck pairing matches the double sum oracle") {
  Rng rng(10);
  for (int n = 1; n <= 3; ++n) {
    auto ctx = testutil::random_context(n, 110 + n);
    KaehlerCurvature fs = model_fubini_study(ctx);
    KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1});
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm phi = PqForm::random(ctx, p, q, 1, rng);
        oracle::Dense d = oracle::from_form(phi);
        CHECK(relative_residual(cplx(y_curvature_pairing(phi, rc)), oracle::y_double_sum(d, rc, ctx->g_inv())) < 1e-10);
        CHECK(relative_residual(y_curvature_action(phi, fs), oracle::y_double_sum(d, fs, ctx->g_inv())) < 1e-10);
        MatrixXc red = reduced_curv_operator(rc);
        CHECK(hermitian_defect(red) < 1e-12);
      }
  }
  auto ctx = AlgebraContext::identity(2);
  CHECK(y_curvature_pairing(PqForm::basis(ctx, {1}, {2}), KaehlerCurvature(ctx)) == 0.0);
}

TEST_CASE("L and Lambda commute with T") {
  Rng rng(11);
  for (int n = 2; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 120 + n);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        PqForm eta = PqForm::random(ctx, p, q, 1, rng);
        MatrixXc v = random_symmetric_complex(n, rng);
        const double scale = std::max(1.0, norm(eta) * v.norm());
        if (q >= 1 && p + 2 <= n && q + 1 <= n)
          CHECK(norm(lefschetz_L(t_apply(eta, v)) - t_apply(lefschetz_L(eta), v)) < 1e-10 * scale);
        if (p >= 1 && q >= 2 && p + 1 <= n)
          CHECK(norm(lefschetz_dual(t_apply(eta, v)) - t_apply(lefschetz_dual(eta), v)) < 1e-10 * scale);
      }
  }
}

TEST_CASE("real T on forms") {
  RealForm w = RealForm::basis(3, {1});
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(3, 3);
  v(0, 1) = 1.0;
  v(1, 0) = -1.0;
  RealForm t = t_riem(w, v);
  CHECK(t.coeff({2}) == -1.0);
  CHECK(real_norm_squared(t) == 1.0);
  Rng rng(12);
  for (int d = 2; d <= 5; ++d) {
    Eigen::MatrixXd a = random_antisymmetric(d, rng);
    RealForm vol = RealForm::basis(d, MultiIndex::from_mask((Mask{1} << d) - 1));
    CHECK(real_norm_squared(t_riem(vol, a)) < 1e-28);
    CHECK(riem_t_operator(vol).carrier_dim() == d * (d - 1) / 2);
  }
  CHECK_THROWS(t_riem(w, Eigen::MatrixXd::Identity(3, 3)));
}

TEST_CASE("Riemannian curvature term") {
  Rng rng(13);
  RiemCurvature sphere = model_sphere(3);
  RealForm w = RealForm::basis(3, {1});
  CHECK(riem_curvature_pairing(w, sphere) == doctest::Approx(norm_squared(riem_t_operator(w))));
  CHECK(riem_curvature_pairing(w, RiemCurvature(3)) == 0.0);
  for (int d = 2; d <= 5; ++d)
    for (int k = 0; k <= d; ++k) {
      RiemCurvature rr = random_riemannian(d, rng);
      RealForm om = RealForm::random(d, k, rng);
      CHECK(relative_residual(riem_curvature_pairing(om, rr), riem_t_pairing(om, rr)) < 1e-9);
    }
}

}  // TEST_SUITE
