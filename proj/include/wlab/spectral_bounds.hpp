#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "wlab/compound.hpp"
#include "wlab/contraction_operators.hpp"
#include "wlab/lefschetz.hpp"

namespace wlab {

using Rational = boost::rational<long long>;

struct TakagiFactorization {
  MatrixXc U;
  Eigen::VectorXd Lambda;  // descending, non-negative
};

// V = U diag(Lambda) U^T for complex symmetric V.
TakagiFactorization takagi(const MatrixXc& v);

struct SkewSpectrum {
  // Lambda_1 >= ... >= 0, one entry per conjugate pair +-i Lambda (floor(d/2) entries).
  std::vector<double> lambdas;
};

SkewSpectrum skew_spectrum(const Eigen::MatrixXd& v);
// min{2 (Lambda_1 + ... + Lambda_k), 2 (Lambda_1 + ... + Lambda_{d-k})}
double t_k_extremes(const Eigen::MatrixXd& v, int k);

// (n - p + k + 1)(p + q - 2k) / (2 (p + 1 - k))
Rational c_pq_k(int n, int p, int q, int k);
struct CpqMin {
  Rational value;
  int k;
};
// Minimum over 0 <= k <= min(p, q-1), located by the case analysis.
CpqMin c_pq_min(int n, int p, int q);

// sum v_{ij} conj(v_{kl}) g^{i kbar} g^{j lbar}
double sym_tensor_norm_squared(const AlgebraContext& ctx, const MatrixXc& v);

// max(0, |T_phi(v)|^2 - bound |v|^2 |phi|^2); the improved bound applies
// when k_primitive is given and phi = L^k psi with psi primitive.
double t_norm_bound_defect(const PqForm& phi, const MatrixXc& v, std::optional<int> k_primitive = std::nullopt);
double t_norm_bound_factor(int p, int q, std::optional<int> k_primitive = std::nullopt);

// max(0, |Y_phi|^2 - (p + q - 2k)|phi|^2) for phi = L^k psi, psi primitive,
// with |Y_phi| the norm of Y_phi as a map on unit directions xi.
double y_norm_bound_defect(const PqForm& phi, int k_primitive);

// max(0, |T_k(v) omega|^2 - 2 min{k, d-k} |omega|^2 |v|^2), with
// T_k(v) = 2 t_riem(., v) and |v|^2 = sum_{ij} v_ij^2.
double riem_t_bound_defect(const RealForm& omega, const Eigen::MatrixXd& v);

struct IndexPair {
  Mask k1 = 0;
  Mask k2 = 0;
  // Positions of the spanning basis elements in the (p,q) coefficient vector.
  std::vector<int> basis;
};

struct IndexPairDecomposition {
  int n = 0, p = 0, q = 0;
  std::vector<IndexPair> pairs;
};

// Splitting of the (p,q)-forms (identity metric) by I ^ J = K2, I xor J = K1.
IndexPairDecomposition subspace_decomposition(int n, int p, int q);

// Largest singular value of phi -> T_phi(v) restricted to span(basis) at (p,q).
double restricted_t_norm(const ContextPtr& ctx, int p, int q, const std::vector<int>& basis, const MatrixXc& v);

}  // namespace wlab
