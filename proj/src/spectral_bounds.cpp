#include "wlab/spectral_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wlab {

TakagiFactorization takagi(const MatrixXc& v) {
  const int n = static_cast<int>(v.rows());
  if (v.cols() != n) throw std::invalid_argument("takagi needs a square matrix");
  double scale = std::max(1.0, v.size() ? v.cwiseAbs().maxCoeff() : 0.0);
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("takagi needs a symmetric matrix");
  // V conj(u) = s u  <=>  [[A, B], [B, -A]] [x; y] = s [x; y] for V = A + iB, u = x + iy.
  Eigen::MatrixXd a = v.real(), b = v.imag();
  Eigen::MatrixXd m(2 * n, 2 * n);
  m << a, b, b, -a;
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const double smax = ev.size() ? std::abs(ev(2 * n - 1)) : 0.0;
  const double cutoff = 1e-12 * std::max(1.0, smax);
  TakagiFactorization out{MatrixXc::Zero(n, n), Eigen::VectorXd::Zero(n)};
  int col = 0;
  for (int idx = 2 * n - 1; idx >= 0 && col < n; --idx) {
    if (ev(idx) <= cutoff) break;
    Eigen::VectorXd w = es.eigenvectors().col(idx);
    VectorXc u(n);
    for (int i = 0; i < n; ++i) u(i) = cplx(w(i), w(n + i));
    u.normalize();
    out.U.col(col) = u;
    out.Lambda(col) = ev(idx);
    ++col;
  }
  if (col < n) {
    // Zero Takagi values: columns are conjugates of a kernel basis of V.
    Eigen::JacobiSVD<MatrixXc> svd(v, Eigen::ComputeFullV);
    MatrixXc ker = svd.matrixV().rightCols(n - col);
    out.U.rightCols(n - col) = ker.conjugate();
  }
  return out;
}

SkewSpectrum skew_spectrum(const Eigen::MatrixXd& v) {
  const int d = static_cast<int>(v.rows());
  if (v.cols() != d) throw std::invalid_argument("skew_spectrum needs a square matrix");
  double scale = std::max(1.0, v.size() ? v.cwiseAbs().maxCoeff() : 0.0);
  if ((v + v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("skew_spectrum needs an antisymmetric matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v);
  const Eigen::VectorXd& s = svd.singularValues();
  SkewSpectrum out;
  for (int i = 0; 2 * i + 1 < d; ++i) out.lambdas.push_back(0.5 * (s(2 * i) + s(2 * i + 1)));
  return out;
}

double t_k_extremes(const Eigen::MatrixXd& v, int k) {
  const int d = static_cast<int>(v.rows());
  if (k < 0 || k > d) throw std::invalid_argument("degree out of range");
  SkewSpectrum sp = skew_spectrum(v);
  auto head = [&](int m) {
    double s = 0.0;
    for (int i = 0; i < m && i < static_cast<int>(sp.lambdas.size()); ++i) s += sp.lambdas[i];
    return s;
  };
  return std::min(2.0 * head(k), 2.0 * head(d - k));
}

namespace {

void check_cpq_range(int n, int p, int q) {
  if (!(0 <= p && p < n && 0 < q && q <= n))
    throw std::invalid_argument("C_pq needs 0 <= p < n and 0 < q <= n");
}

}  // namespace

Rational c_pq_k(int n, int p, int q, int k) {
  check_cpq_range(n, p, q);
  if (k < 0 || k > std::min(p, q - 1)) throw std::invalid_argument("k out of range for C_pq");
  return Rational((n - p + k + 1) * static_cast<long long>(p + q - 2 * k), 2LL * (p + 1 - k));
}

CpqMin c_pq_min(int n, int p, int q) {
  check_cpq_range(n, p, q);
  int k = (q >= p + 2 || 2 * p > n) ? 0 : q - 1;
  return {c_pq_k(n, p, q, k), k};
}

double sym_tensor_norm_squared(const AlgebraContext& ctx, const MatrixXc& v) {
  const int n = ctx.n();
  if (ctx.identity_metrics()) return v.squaredNorm();
  const MatrixXc& gi = ctx.g_inv();
  // sum_{ijkl} v_ij gi(i,k) gi(j,l) conj(v_kl) = sum_kl (gi^T v gi)_kl conj(v_kl)
  MatrixXc w = gi.transpose() * v * gi;
  cplx s = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) s += w(k, l) * std::conj(v(k, l));
  return s.real();
}

double t_norm_bound_factor(int p, int q, std::optional<int> k) {
  if (!k) {
    if (p + q == 0) return 0.0;
    return 4.0 * (p + 1) * q / double(p + q);
  }
  int kk = *k;
  if (p + q == 2 * kk) throw std::domain_error("improved bound is undefined for k = (p+q)/2");
  return 4.0 * (p - kk + 1) * (q - kk) / double(p + q - 2 * kk);
}

double t_norm_bound_defect(const PqForm& phi, const MatrixXc& v, std::optional<int> k) {
  if (k && !primitive_root(phi, *k)) throw std::invalid_argument("input is not L^k of a primitive form");
  double lhs = norm_squared(t_apply(phi, v));
  double rhs = t_norm_bound_factor(phi.p(), phi.q(), k) * sym_tensor_norm_squared(phi.context(), v) *
               norm_squared(phi);
  return std::max(0.0, lhs - rhs);
}

double y_norm_bound_defect(const PqForm& phi, int k) {
  if (!primitive_root(phi, k)) throw std::invalid_argument("input is not L^k of a primitive form");
  double lhs = y_direction_norm_squared(phi);
  double rhs = double(phi.p() + phi.q() - 2 * k) * norm_squared(phi);
  return std::max(0.0, lhs - rhs);
}

double riem_t_bound_defect(const RealForm& omega, const Eigen::MatrixXd& v) {
  const int d = omega.d(), k = omega.k();
  double lhs = 4.0 * real_norm_squared(t_riem(omega, v));
  double rhs = 2.0 * std::min(k, d - k) * real_norm_squared(omega) * v.squaredNorm();
  return std::max(0.0, lhs - rhs);
}

IndexPairDecomposition subspace_decomposition(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0 || p > n || q > n) throw std::invalid_argument("bidegree out of range");
  const SubsetBasis& bp = subset_basis(n, p);
  const SubsetBasis& bq = subset_basis(n, q);
  // Ordered by (|K2|, K2, K1) for a reproducible listing.
  std::map<std::tuple<int, Mask, Mask>, std::vector<int>> groups;
  for (int i = 0; i < bp.size(); ++i)
    for (int j = 0; j < bq.size(); ++j) {
      Mask I = bp.mask(i), J = bq.mask(j);
      Mask k2 = I & J, k1 = I ^ J;
      groups[{popcount(k2), k2, k1}].push_back(i * bq.size() + j);
    }
  IndexPairDecomposition out{n, p, q, {}};
  for (auto& [key, basis] : groups) out.pairs.push_back({std::get<2>(key), std::get<1>(key), std::move(basis)});
  return out;
}

double restricted_t_norm(const ContextPtr& ctx, int p, int q, const std::vector<int>& basis, const MatrixXc& v) {
  if (!ctx->identity_metrics()) throw std::invalid_argument("restricted norms need identity metrics");
  if (basis.empty()) return 0.0;
  PqForm e(ctx, p, q, 1);
  MatrixXc m;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    e.coeffs().setZero();
    e.coeffs()(basis[c]) = 1.0;
    PqForm t = t_apply(e, v);
    if (c == 0) m.resize(t.dim(), basis.size());
    m.col(c) = t.coeffs();
  }
  Eigen::JacobiSVD<MatrixXc> svd(m);
  return svd.singularValues()(0);
}

}  // namespace wlab
