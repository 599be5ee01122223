#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wlab/spectral_bounds.hpp"

using namespace wlab;

TEST_SUITE("spectral_bounds") {

TEST_CASE("Takagi: examples, reconstruction, singular values") {
  TakagiFactorization t = takagi(MatrixXc::Identity(3, 3));
  CHECK((t.Lambda.array() - 1.0).abs().maxCoeff() < 1e-12);
  MatrixXc swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  TakagiFactorization s = takagi(swap);
  CHECK((s.Lambda.array() - 1.0).abs().maxCoeff() < 1e-12);
  CHECK((s.U * s.Lambda.cast<cplx>().asDiagonal() * s.U.transpose() - swap).cwiseAbs().maxCoeff() < 1e-10);

  Rng rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    MatrixXc v = random_symmetric_complex(n, rng);
    if (trial % 5 == 0 && n > 1) {
      // rank-deficient: v = w w^T
      MatrixXc w = random_complex_matrix(n, 1, rng);
      v = w * w.transpose();
    }
    TakagiFactorization f = takagi(v);
    const double scale = std::max(1.0, v.norm());
    CHECK((f.U * f.Lambda.cast<cplx>().asDiagonal() * f.U.transpose() - v).cwiseAbs().maxCoeff() < 1e-10 * scale);
    CHECK((f.U.adjoint() * f.U - MatrixXc::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::VectorXd sv = Eigen::JacobiSVD<MatrixXc>(v).singularValues();
    CHECK((sv - f.Lambda).cwiseAbs().maxCoeff() < 1e-10 * scale);
    for (int i = 0; i + 1 < n; ++i) CHECK(f.Lambda(i) >= f.Lambda(i + 1));
    CHECK(f.Lambda.minCoeff() >= 0.0);
  }
  CHECK_THROWS(takagi(random_complex_matrix(3, 3, rng)));
}

TEST_CASE("C_pq constants and the case analysis") {
  CHECK(c_pq_k(4, 1, 3, 0) == Rational(4));
  CHECK(c_pq_min(4, 1, 3).k == 0);
  CHECK(c_pq_min(4, 2, 2).value == Rational(2));
  CHECK(c_pq_min(4, 2, 2).k == 1);
  CHECK_THROWS(c_pq_k(4, 1, 3, 3));
  CHECK_THROWS(c_pq_min(3, 3, 1));
  int mismatches = 0;
  for (int n = 1; n <= 12; ++n)
    for (int p = 0; p < n; ++p)
      for (int q = 1; q <= n; ++q) {
        oracle::BruteMin b = oracle::c_pq_brute_min(n, p, q);
        CpqMin m = c_pq_min(n, p, q);
        if (m.value != b.value) ++mismatches;
        if (std::find(b.argmins.begin(), b.argmins.end(), m.k) == b.argmins.end()) ++mismatches;
        for (int k = 0; k <= std::min(p, q - 1); ++k)
          if (c_pq_k(n, p, q, k) != oracle::c_pq(n, p, q, k)) ++mismatches;
      }
  CHECK(mismatches == 0);
}

TEST_CASE("T bound: example and Monte Carlo") {
  auto ctx = AlgebraContext::identity(2);
  PqForm phi = PqForm::basis(ctx, {}, {1});
  MatrixXc v = MatrixXc::Zero(2, 2);
  v(0, 0) = 1.0;
  CHECK(t_norm_bound_factor(0, 1) == 4.0);
  CHECK(t_norm_bound_defect(phi, v) == 0.0);
  CHECK(norm_squared(t_apply(phi, v)) <= 4.0 * sym_tensor_norm_squared(*ctx, v) * norm_squared(phi));

  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    auto c = testutil::random_context(n, 10 + n);
    for (int p = 0; p < n; ++p)
      for (int q = 1; q <= n; ++q)
        for (int s = 0; s < 50; ++s) {
          PqForm f = PqForm::random(c, p, q, 1, rng);
          MatrixXc w = random_symmetric_complex(n, rng);
          const double scale = sym_tensor_norm_squared(*c, w) * norm_squared(f);
          CHECK(t_norm_bound_defect(f, w) <= 1e-9 * scale);
        }
  }
}

TEST_CASE("improved T bound on L^k of primitives; k = q kills T") {
  Rng rng(3);
  for (int n = 2; n <= 4; ++n) {
    auto c = testutil::random_context(n, 20 + n);
    for (int p0 = 0; p0 <= n; ++p0)
      for (int q0 = 0; p0 + q0 <= n; ++q0)
        for (int k = 0; p0 + k < n && q0 + k <= n; ++k) {
          const int p = p0 + k, q = q0 + k;
          if (q == 0) continue;
          MatrixXc b = primitive_basis(c, p0, q0);
          if (b.cols() == 0) continue;
          PqForm psi(c, p0, q0);
          psi.coeffs() = b * random_complex_vector(static_cast<int>(b.cols()), rng);
          PqForm f = *lefschetz_power(psi, k);
          MatrixXc w = random_symmetric_complex(n, rng);
          const double scale = sym_tensor_norm_squared(*c, w) * norm_squared(f);
          if (q0 == 0) {
            // phi = L^q psi: the bound factor (q - k) vanishes
            CHECK(norm_squared(t_apply(f, w)) < 1e-20 * std::max(1.0, scale));
          }
          if (p + q == 2 * k) {
            CHECK_THROWS(t_norm_bound_factor(p, q, k));
            continue;
          }
          CHECK(t_norm_bound_defect(f, w, k) <= 1e-9 * scale);
        }
  }
  auto c = AlgebraContext::identity(2);
  CHECK_THROWS(t_norm_bound_defect(PqForm::random(c, 1, 1, 1, rng), MatrixXc::Identity(2, 2), 1));
}

TEST_CASE("index-pair subspaces") {
  IndexPairDecomposition d = subspace_decomposition(2, 1, 1);
  std::size_t total = 0;
  for (const auto& pr : d.pairs) total += pr.basis.size();
  CHECK(total == 4);
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        IndexPairDecomposition e = subspace_decomposition(n, p, q);
        std::vector<int> seen;
        for (const auto& pr : e.pairs) {
          CHECK((pr.k1 & pr.k2) == 0);
          const int k2 = popcount(pr.k2);
          CHECK(popcount(pr.k1) + 2 * k2 == p + q);
          CHECK(static_cast<long long>(pr.basis.size()) == binomial(p + q - 2 * k2, p - k2));
          seen.insert(seen.end(), pr.basis.begin(), pr.basis.end());
        }
        std::sort(seen.begin(), seen.end());
        CHECK(static_cast<long long>(seen.size()) == binomial(n, p) * binomial(n, q));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      }
}

TEST_CASE("operator norms agree across the K2 isomorphism") {
  Rng rng(4);
  for (int n = 2; n <= 3; ++n) {
    auto ctx = AlgebraContext::identity(n);
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        MatrixXc v = MatrixXc::Zero(n, n);
        for (int i = 0; i < n; ++i) v(i, i) = complex_gaussian(rng);
        IndexPairDecomposition d = subspace_decomposition(n, p, q);
        for (const auto& pr : d.pairs) {
          if (!pr.k2) continue;
          const int k2 = popcount(pr.k2);
          IndexPairDecomposition lo = subspace_decomposition(n, p - k2, q - k2);
          for (const auto& base : lo.pairs)
            if (base.k1 == pr.k1 && base.k2 == 0) {
              double a = restricted_t_norm(ctx, p, q, pr.basis, v);
              double b = restricted_t_norm(ctx, p - k2, q - k2, base.basis, v);
              CHECK(relative_residual(a, b) < 1e-8);
            }
        }
      }
  }
}

TEST_CASE("compound matrices") {
  Rng rng(5);
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= n; ++p) {
      Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
      const int N = static_cast<int>(binomial(n, p));
      CHECK((compound_matrix<double>(id, p) - double(p) * Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff() == 0.0);
    }
  // diagonal: eigenvalues are p-fold sums
  Eigen::MatrixXd dg = Eigen::MatrixXd::Zero(4, 4);
  dg.diagonal() << 1, 2, 4, 8;
  Eigen::MatrixXd c2 = compound_matrix<double>(dg, 2);
  Eigen::VectorXd diag = c2.diagonal();
  std::vector<double> got(diag.data(), diag.data() + diag.size()), want{3, 5, 9, 6, 10, 12};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  // random Hermitian A, p = 2, n = 4: pairwise sums of eig(A)
  MatrixXc a = random_hermitian(4, rng);
  Eigen::VectorXd ev = hermitian_eigenvalues(a);
  std::vector<double> sums;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sums.push_back(ev(i) + ev(j));
  std::sort(sums.begin(), sums.end());
  Eigen::VectorXd ce = hermitian_eigenvalues(compound_matrix<cplx>(a, 2));
  for (int i = 0; i < 6; ++i) CHECK(std::abs(ce(i) - sums[i]) < 1e-8);
  CHECK(compound_matrix<double>(dg, 0).size() == 1);
  CHECK_THROWS(compound_matrix<double>(dg, 5));
}

TEST_CASE("skew spectrum and T_k extremes") {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
  v(0, 1) = 1;
  v(1, 0) = -1;
  SkewSpectrum s = skew_spectrum(v);
  REQUIRE(s.lambdas.size() == 1);
  CHECK(s.lambdas[0] == doctest::Approx(1.0));
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
  w(0, 1) = 1;
  w(1, 0) = -1;
  w(2, 3) = 1;
  w(3, 2) = -1;
  CHECK(t_k_extremes(w, 2) == doctest::Approx(4.0));
  Rng rng(6);
  for (int d = 2; d <= 6; ++d) {
    Eigen::MatrixXd a = random_antisymmetric(d, rng);
    SkewSpectrum sp = skew_spectrum(a);
    double sum2 = 0.0;
    for (double l : sp.lambdas) sum2 += l * l;
    CHECK(a.squaredNorm() == doctest::Approx(2.0 * sum2).epsilon(1e-10));
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(a);
    std::vector<double> im;
    for (int i = 0; i < d; ++i) im.push_back(std::abs(es.eigenvalues()(i).imag()));
    std::sort(im.rbegin(), im.rend());
    for (std::size_t i = 0; i < sp.lambdas.size(); ++i) CHECK(std::abs(im[2 * i] - sp.lambdas[i]) < 1e-9);
  }
  CHECK_THROWS(skew_spectrum(Eigen::MatrixXd::Identity(3, 3)));
}

TEST_CASE("Riemannian T bound") {
  Rng rng(7);
  int violations = 0;
  for (int s = 0; s < 1000; ++s) {
    Eigen::MatrixXd v = random_antisymmetric(3, rng);
    RealForm w = RealForm::basis(3, {1});
    if (riem_t_bound_defect(w, v) > 1e-9 * v.squaredNorm()) ++violations;
  }
  CHECK(violations == 0);
  for (int d = 2; d <= 5; ++d) {
    Eigen::MatrixXd v = random_antisymmetric(d, rng);
    CHECK(riem_t_bound_defect(RealForm::random(d, 0, rng), v) == 0.0);
    CHECK(riem_t_bound_defect(RealForm::random(d, d, rng), v) == 0.0);
  }
}

TEST_CASE("Y bound on L^k of primitives") {
  Rng rng(8);
  for (int n = 1; n <= 4; ++n) {
    auto ctx = testutil::random_context(n, 30 + n);
    CHECK(y_norm_bound_defect(PqForm::one(ctx), 0) == 0.0);
    for (int k = 1; k <= n; ++k) {
      PqForm wk = *lefschetz_power(PqForm::one(ctx), k);
      CHECK(y_direction_norm_squared(wk) < 1e-20);
      CHECK(y_norm_bound_defect(wk, k) < 1e-12);
    }
    for (int p0 = 0; p0 <= n; ++p0)
      for (int q0 = 0; p0 + q0 <= n; ++q0) {
        MatrixXc b = primitive_basis(ctx, p0, q0);
        if (b.cols() == 0) continue;
        for (int k = 0; p0 + k <= n && q0 + k <= n; ++k)
          for (int s = 0; s < 10; ++s) {
            PqForm psi(ctx, p0, q0);
            psi.coeffs() = b * random_complex_vector(static_cast<int>(b.cols()), rng);
            PqForm phi = *lefschetz_power(psi, k);
            CHECK(y_norm_bound_defect(phi, k) <= 1e-9 * std::max(1.0, norm_squared(phi)));
          }
      }
  }
}

TEST_CASE("Y direction norm is the sup over unit directions") {
  // Random unit directions never exceed the reported value, and the top
  // eigenvector attains it.
  Rng rng(9);
  auto ctx = testutil::random_context(3, 44);
  PqForm phi = PqForm::random(ctx, 1, 2, 1, rng);
  TensorValuedForm y = y_operator(phi);
  const double sup = y_direction_norm_squared(phi);
  for (int s = 0; s < 200; ++s) {
    VectorXc xi = random_complex_vector(9, rng);
    xi.normalize();
    PqForm acc(ctx, 1, 2);
    for (int a = 0; a < 9; ++a) acc += xi(a) * y.components[a];
    CHECK(norm_squared(acc) <= sup * (1 + 1e-12));
  }
  MatrixXc gram(9, 9);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) gram(a, b) = inner_product(y.components[b], y.components[a]);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(gram);
  VectorXc top = es.eigenvectors().col(8);
  PqForm best(ctx, 1, 2);
  for (int a = 0; a < 9; ++a) best += top(a) * y.components[a];
  CHECK(norm_squared(best) == doctest::Approx(sup).epsilon(1e-10));
}

}  // TEST_SUITE
