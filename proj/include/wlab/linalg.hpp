#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace wlab {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using Rng = std::mt19937_64;

inline const cplx kI{0.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x);

// Independent generator for sample `index` of stream `stream`; the basis of
// order-independent (and therefore thread-count-independent) sweeps.
Rng derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

double gaussian(Rng& rng);
// Standard complex normal: real and imaginary parts N(0, 1/2).
cplx complex_gaussian(Rng& rng);

MatrixXc random_complex_matrix(int rows, int cols, Rng& rng);
VectorXc random_complex_vector(int n, Rng& rng);
Eigen::MatrixXd random_real_matrix(int rows, int cols, Rng& rng);
MatrixXc random_symmetric_complex(int n, Rng& rng);
Eigen::MatrixXd random_antisymmetric(int d, Rng& rng);
MatrixXc random_hermitian(int n, Rng& rng);
MatrixXc random_unitary(int n, Rng& rng);
// Id + eps * A A^*.
MatrixXc random_metric(int n, Rng& rng, double eps = 0.3);

// Ascending eigenvalues of a Hermitian matrix (upper triangle ignored).
Eigen::VectorXd hermitian_eigenvalues(const MatrixXc& a);

double hermitian_defect(const MatrixXc& a);

// |lhs - rhs| / max(1, |lhs|, |rhs|)
double relative_residual(cplx lhs, cplx rhs);
double relative_residual(double lhs, double rhs);

}  // namespace wlab
