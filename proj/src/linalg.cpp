#include "wlab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace wlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ stream);
  s = splitmix64(s ^ index);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

double gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

cplx complex_gaussian(Rng& rng) {
  const double s = std::sqrt(0.5);
  double re = gaussian(rng);
  double im = gaussian(rng);
  return {s * re, s * im};
}

MatrixXc random_complex_matrix(int rows, int cols, Rng& rng) {
  MatrixXc m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = complex_gaussian(rng);
  return m;
}

VectorXc random_complex_vector(int n, Rng& rng) {
  VectorXc v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_gaussian(rng);
  return v;
}

Eigen::MatrixXd random_real_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = gaussian(rng);
  return m;
}

MatrixXc random_symmetric_complex(int n, Rng& rng) {
  MatrixXc a = random_complex_matrix(n, n, rng);
  return (a + a.transpose()) * 0.5;
}

Eigen::MatrixXd random_antisymmetric(int d, Rng& rng) {
  Eigen::MatrixXd a = random_real_matrix(d, d, rng);
  return (a - a.transpose()) * 0.5;
}

MatrixXc random_hermitian(int n, Rng& rng) {
  MatrixXc a = random_complex_matrix(n, n, rng);
  return (a + a.adjoint()) * 0.5;
}

MatrixXc random_unitary(int n, Rng& rng) {
  MatrixXc a = random_complex_matrix(n, n, rng);
  Eigen::HouseholderQR<MatrixXc> qr(a);
  MatrixXc q = qr.householderQ() * MatrixXc::Identity(n, n);
  // Fix phases so the distribution does not depend on QR conventions.
  MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    double mag = std::abs(r(i, i));
    if (mag > 0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

MatrixXc random_metric(int n, Rng& rng, double eps) {
  MatrixXc a = random_complex_matrix(n, n, rng);
  MatrixXc g = MatrixXc::Identity(n, n) + eps * a * a.adjoint();
  return (g + g.adjoint()) * 0.5;
}

Eigen::VectorXd hermitian_eigenvalues(const MatrixXc& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double hermitian_defect(const MatrixXc& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double relative_residual(cplx lhs, cplx rhs) {
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

double relative_residual(double lhs, double rhs) {
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace wlab
