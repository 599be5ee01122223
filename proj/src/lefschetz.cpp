#include "wlab/lefschetz.hpp"

#include <cmath>
#include <stdexcept>

namespace wlab {

double c_constant(int n, int p, int q, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c *= double(i) * double(n - p - q - i + 1);
  return c;
}

std::optional<PqForm> lefschetz_power(const PqForm& a, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (a.p() + k > a.n() || a.q() + k > a.n()) return std::nullopt;
  PqForm out = a;
  for (int i = 0; i < k; ++i) out = lefschetz_L(out);
  return out;
}

PqForm lefschetz_dual_power(const PqForm& a, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > a.p() || k > a.q()) throw std::domain_error("Lambda power below degree zero");
  PqForm out = a;
  for (int i = 0; i < k; ++i) out = lefschetz_dual(out);
  return out;
}

MatrixXc primitive_basis(const ContextPtr& ctx, int p, int q, int fiber) {
  const int dim = static_cast<int>(binomial(ctx->n(), p) * binomial(ctx->n(), q) * fiber);
  if (p == 0 || q == 0) return MatrixXc::Identity(dim, dim);
  MatrixXc lam = operator_matrix(ctx, p, q, fiber, [](const PqForm& f) { return lefschetz_dual(f); });
  Eigen::JacobiSVD<MatrixXc> svd(lam, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  double cutoff = 1e-10 * (s.size() ? s(0) : 0.0);
  int rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(dim - rank);
}

bool is_primitive(const PqForm& psi, double tol) {
  if (psi.p() == 0 || psi.q() == 0) return true;
  double n0 = norm(psi);
  if (n0 == 0.0) return true;
  return norm(lefschetz_dual(psi)) < tol * n0;
}

PrimitiveDecomposition primitive_decompose(const PqForm& phi) {
  const ContextPtr& ctx = phi.context_ptr();
  const int n = phi.n(), p = phi.p(), q = phi.q(), t = std::min(p, q), fib = phi.fiber();
  PrimitiveDecomposition out;
  std::vector<MatrixXc> kernels(t + 1);
  std::vector<MatrixXc> images(t + 1);
  int total_cols = 0;
  for (int k = 0; k <= t; ++k) {
    out.parts.emplace_back(ctx, p - k, q - k, fib);
    if (p + q - 2 * k > n) continue;
    kernels[k] = primitive_basis(ctx, p - k, q - k, fib);
    MatrixXc img(phi.dim(), kernels[k].cols());
    PqForm e(ctx, p - k, q - k, fib);
    for (int c = 0; c < kernels[k].cols(); ++c) {
      e.coeffs() = kernels[k].col(c);
      auto lk = lefschetz_power(e, k);
      img.col(c) = lk ? lk->coeffs() : VectorXc::Zero(phi.dim());
    }
    images[k] = std::move(img);
    total_cols += static_cast<int>(kernels[k].cols());
  }
  MatrixXc a(phi.dim(), total_cols);
  int col = 0;
  for (int k = 0; k <= t; ++k) {
    if (images[k].size() == 0) continue;
    a.middleCols(col, images[k].cols()) = images[k];
    col += static_cast<int>(images[k].cols());
  }
  Eigen::CompleteOrthogonalDecomposition<MatrixXc> cod;
  cod.setThreshold(1e-10);
  cod.compute(a);
  VectorXc x = cod.solve(phi.coeffs());
  col = 0;
  for (int k = 0; k <= t; ++k) {
    if (images[k].size() == 0) continue;
    out.parts[k].coeffs() = kernels[k] * x.segment(col, kernels[k].cols());
    col += static_cast<int>(kernels[k].cols());
  }
  double residual = (a * x - phi.coeffs()).norm();
  if (residual > 1e-9 * std::max(1.0, phi.coeffs().norm()))
    throw std::runtime_error("primitive decomposition failed to reconstruct the input");
  return out;
}

PqForm reconstruct(const PrimitiveDecomposition& d, const PqForm& like) {
  PqForm out(like.context_ptr(), like.p(), like.q(), like.fiber());
  for (std::size_t k = 0; k < d.parts.size(); ++k) {
    auto lk = lefschetz_power(d.parts[k], static_cast<int>(k));
    if (lk) out += *lk;
  }
  return out;
}

double lambda_l_power_defect(const PqForm& psi, int k) {
  if (!is_primitive(psi)) throw std::invalid_argument("input is not primitive");
  const double c = c_constant(psi.n(), psi.p(), psi.q(), k);
  PqForm target = psi;
  target *= c;
  auto lk = lefschetz_power(psi, k);
  if (!lk) return norm(target);
  return norm(lefschetz_dual_power(*lk, k) - target);
}

double l_power_norm_defect(const PqForm& eta, int k) {
  if (!is_primitive(eta)) throw std::invalid_argument("input is not primitive");
  const double c = c_constant(eta.n(), eta.p(), eta.q(), k);
  auto lk = lefschetz_power(eta, k);
  double lhs = lk ? norm_squared(*lk) : 0.0;
  return std::abs(lhs - c * norm_squared(eta));
}

std::optional<PqForm> primitive_root(const PqForm& phi, int k, double tol) {
  if (k < 0 || k > phi.p() || k > phi.q()) return std::nullopt;
  if (k == 0) return is_primitive(phi, tol) ? std::optional<PqForm>(phi) : std::nullopt;
  const double c = c_constant(phi.n(), phi.p() - k, phi.q() - k, k);
  const double n0 = norm(phi);
  PqForm psi(phi.context_ptr(), phi.p() - k, phi.q() - k, phi.fiber());
  if (c == 0.0) {
    if (n0 <= tol) return psi;
    return std::nullopt;
  }
  psi = lefschetz_dual_power(phi, k);
  psi *= 1.0 / c;
  if (!is_primitive(psi, tol)) return std::nullopt;
  auto back = lefschetz_power(psi, k);
  double err = back ? norm(*back - phi) : n0;
  if (err > tol * std::max(n0, 1e-300)) return std::nullopt;
  return psi;
}

}  // namespace wlab
