#include "wlab/contraction_operators.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "wlab/compound.hpp"

namespace wlab {

namespace {

// Coefficient columns of a list of same-shape forms.
MatrixXc columns(const std::vector<PqForm>& forms) {
  if (forms.empty()) return MatrixXc();
  MatrixXc m(forms[0].dim(), forms.size());
  for (std::size_t a = 0; a < forms.size(); ++a) m.col(a) = forms[a].coeffs();
  return m;
}

// P(x, y) = <form_y, form_x> for forms stored as coefficient columns.
MatrixXc gram_of(const std::vector<PqForm>& forms) {
  MatrixXc c = columns(forms);
  if (c.size() == 0) return MatrixXc::Zero(forms.size(), forms.size());
  const PqForm& f = forms[0];
  const AlgebraContext& ctx = f.context();
  if (ctx.identity_metrics()) return c.adjoint() * c;
  return c.adjoint() * ctx.gram(f.p(), f.q(), f.fiber()) * c;
}

// sum_{x,y} M(x,y) <form_y, form_x>
cplx contract_with(const MatrixXc& m, const std::vector<PqForm>& forms) {
  return (m.array() * gram_of(forms).array()).sum();
}

void check_symmetric(const MatrixXc& v, int n) {
  if (v.rows() != n || v.cols() != n) throw std::invalid_argument("v must be n x n");
  double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("v must be symmetric");
}

// Y_{jk} = I_{kbar}(dz^j ^ phi), row-major; empty when T vanishes.
std::vector<PqForm> t_blocks(const PqForm& phi) {
  const int n = phi.n();
  std::vector<PqForm> out;
  if (phi.q() == 0 || phi.p() == n) return out;
  out.reserve(n * n);
  for (int j = 0; j < n; ++j) {
    PqForm x = elem::wedge_dz(j, phi);
    for (int k = 0; k < n; ++k) out.push_back(elem::contract_dzbar(k, x));
  }
  return out;
}

PqForm t_from_blocks(const PqForm& phi, const std::vector<PqForm>& blocks, const MatrixXc& v) {
  const int n = phi.n();
  PqForm out(phi.context_ptr(), std::min(phi.p() + 1, n), std::max(phi.q() - 1, 0), phi.fiber());
  if (blocks.empty()) return out;
  MatrixXc m = 2.0 * v * phi.context().g_inv();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (m(j, k) != cplx(0.0)) out.coeffs() += m(j, k) * blocks[j * n + k].coeffs();
  return out;
}

// Fiber-rank-sized matrix h(e_alpha, f_b) = (H conj F)(alpha, b); 1x1 for scalar forms.
MatrixXc fiber_pairing(const PqForm& phi) {
  if (phi.fiber() == 1) return MatrixXc::Identity(1, 1);
  const AlgebraContext& ctx = phi.context();
  return ctx.h() * ctx.bundle_frame().conjugate();
}

}  // namespace

double norm_squared(const TensorValuedForm& t) {
  double s = 0.0;
  for (const PqForm& c : t.components) s += norm_squared(c);
  return s;
}

double norm_squared(const RealTensorValuedForm& t) {
  double s = 0.0;
  for (const RealForm& c : t.components) s += real_norm_squared(c);
  return s;
}

PqForm t_apply(const PqForm& phi, const MatrixXc& v) {
  check_symmetric(v, phi.n());
  return t_from_blocks(phi, t_blocks(phi), v);
}

TensorValuedForm t_operator(const PqForm& phi) {
  std::vector<PqForm> blocks = t_blocks(phi);
  TensorValuedForm t{CarrierKind::Sym2, {}};
  for (const MatrixXc& w : sym2_dual_basis(phi.context())) t.components.push_back(t_from_blocks(phi, blocks, w));
  return t;
}

namespace {

// s^{i alpha} = g^{i jbar} I_{jbar} phi^alpha as scalar forms, index i * fiber + alpha.
std::vector<PqForm> s_coordinate_components(const PqForm& phi) {
  const int n = phi.n(), r = phi.fiber();
  const MatrixXc& gi = phi.context().g_inv();
  std::vector<PqForm> out;
  out.reserve(n * r);
  std::vector<PqForm> contracted;
  for (int j = 0; j < n; ++j) contracted.push_back(elem::contract_dzbar(j, phi));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a) {
      PqForm s(phi.context_ptr(), phi.p(), std::max(phi.q() - 1, 0), 1);
      if (phi.q() > 0)
        for (int j = 0; j < n; ++j)
          if (gi(i, j) != cplx(0.0)) s.coeffs() += gi(i, j) * contracted[j].component(a).coeffs();
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace

TensorValuedForm s_operator(const PqForm& phi) {
  const int n = phi.n(), r = phi.fiber();
  std::vector<PqForm> s = s_coordinate_components(phi);
  MatrixXc pg = phi.context().g() * phi.context().frame().conjugate();
  MatrixXc ph = fiber_pairing(phi);
  TensorValuedForm t{CarrierKind::VecBundle, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < r; ++b) {
      PqForm c(phi.context_ptr(), phi.p(), std::max(phi.q() - 1, 0), 1);
      for (int i = 0; i < n; ++i)
        for (int al = 0; al < r; ++al) c.coeffs() += (pg(i, a) * ph(al, b)) * s[i * r + al].coeffs();
      t.components.push_back(std::move(c));
    }
  return t;
}

std::vector<PqForm> y_coordinate_components(const PqForm& phi) {
  if (phi.fiber() != 1) throw std::invalid_argument("Y operator needs a scalar-valued form");
  const int n = phi.n(), p = phi.p(), q = phi.q();
  const MatrixXc& gi = phi.context().g_inv();
  std::vector<PqForm> cbar, chol;
  for (int k = 0; k < n; ++k) {
    if (q > 0) cbar.push_back(elem::contract_dzbar(k, phi));
    if (p > 0) chol.push_back(elem::contract_dz(k, phi));
  }
  std::vector<PqForm> out;
  out.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PqForm y(phi.context_ptr(), p, q, 1);
      if (q > 0) {
        PqForm acc(phi.context_ptr(), p, q - 1, 1);
        for (int k = 0; k < n; ++k) acc.coeffs() += gi(i, k) * cbar[k].coeffs();
        y += elem::wedge_dzbar(j, acc);
      }
      if (p > 0) {
        PqForm acc(phi.context_ptr(), p - 1, q, 1);
        for (int k = 0; k < n; ++k) acc.coeffs() += gi(k, j) * chol[k].coeffs();
        y -= elem::wedge_dz(i, acc);
      }
      out.push_back(std::move(y));
    }
  return out;
}

TensorValuedForm y_operator(const PqForm& phi) {
  const int n = phi.n();
  std::vector<PqForm> y = y_coordinate_components(phi);
  MatrixXc pg = phi.context().g() * phi.context().frame().conjugate();
  TensorValuedForm t{CarrierKind::Mixed, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      PqForm c(phi.context_ptr(), phi.p(), phi.q(), 1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.coeffs() += (pg(i, a) * std::conj(pg(j, b))) * y[i * n + j].coeffs();
      t.components.push_back(std::move(c));
    }
  return t;
}

RealForm t_riem(const RealForm& omega, const Eigen::MatrixXd& v) {
  const int d = omega.d();
  if (v.rows() != d || v.cols() != d) throw std::invalid_argument("v must be d x d");
  double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v + v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("v must be antisymmetric");
  RealForm out(d, omega.k());
  if (omega.k() == 0) return out;
  for (int j = 0; j < d; ++j) {
    RealForm c = elem::contract_e(j, omega);
    for (int i = 0; i < d; ++i)
      if (v(i, j) != 0.0) out.coeffs() += v(i, j) * elem::wedge_dx(i, c).coeffs();
  }
  return out;
}

RealTensorValuedForm riem_t_operator(const RealForm& omega) {
  const int d = omega.d(), k = omega.k();
  RealTensorValuedForm t{CarrierKind::Bivector, {}};
  std::vector<RealForm> c;
  for (int i = 0; i < d; ++i) c.push_back(elem::contract_e(i, omega));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      RealForm tau(d, k);
      if (k > 0) tau = elem::wedge_dx(i, c[j]) - elem::wedge_dx(j, c[i]);
      t.components.push_back(std::move(tau));
    }
  return t;
}

cplx b_form(const PqForm& phi, const PqForm& psi, const KaehlerCurvature& rc) {
  if (phi.context_ptr() != psi.context_ptr() || rc.context_ptr() != phi.context_ptr())
    throw std::invalid_argument("context mismatch");
  if (phi.bidegree() != psi.bidegree() || phi.fiber() != psi.fiber())
    throw std::invalid_argument("bidegree mismatch in B form");
  if (phi.q() == 0 || phi.p() == phi.n()) return 0.0;
  MatrixXc m = sym_curv_operator(rc);
  TensorValuedForm tf = t_operator(phi), tp = t_operator(psi);
  MatrixXc cf = columns(tf.components), cp = columns(tp.components);
  const PqForm& f0 = tf.components[0];
  MatrixXc pair = f0.context().identity_metrics()
                      ? MatrixXc(cp.adjoint() * cf)
                      : MatrixXc(cp.adjoint() * f0.context().gram(f0.p(), f0.q(), f0.fiber()) * cf);
  // pair(A, B) = <T_phi_B, T_psi_A>
  return (m.array() * pair.array()).sum();
}

cplx bundle_s_pairing(const PqForm& phi, const BundleCurvature& re) {
  if (re.context_ptr() != phi.context_ptr()) throw std::invalid_argument("context mismatch");
  if (phi.fiber() != re.r()) throw std::invalid_argument("form fiber does not match bundle rank");
  if (phi.q() == 0) return 0.0;
  return contract_with(bundle_curv_operator(re), s_operator(phi).components);
}

cplx curvature_action(const PqForm& phi, const KaehlerCurvature& rc, const BundleCurvature* re) {
  if (rc.context_ptr() != phi.context_ptr()) throw std::invalid_argument("context mismatch");
  const int n = phi.n(), p = phi.p(), q = phi.q();
  if (q == 0) return 0.0;
  const MatrixXc& gi = phi.context().g_inv();
  cplx total = 0.0;
  if (p < n) {
    // sigma^{im} = g^{i jbar} I_{jbar}(dz^m ^ phi), index i * n + m.
    std::vector<PqForm> blocks = t_blocks(phi);
    std::vector<PqForm> sigma;
    sigma.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m) {
        PqForm s(phi.context_ptr(), p + 1, q - 1, phi.fiber());
        for (int j = 0; j < n; ++j) s.coeffs() += gi(i, j) * blocks[m * n + j].coeffs();
        sigma.push_back(std::move(s));
      }
    MatrixXc pair = gram_of(sigma);  // pair(x, y) = <sigma_y, sigma_x>
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          for (int l = 0; l < n; ++l) total += rc(i, k, m, l) * pair(k * n + l, i * n + m);
  }
  if (re) {
    if (re->context_ptr() != phi.context_ptr()) throw std::invalid_argument("context mismatch");
    if (phi.fiber() != re->r()) throw std::invalid_argument("form fiber does not match bundle rank");
    const int r = phi.fiber();
    std::vector<PqForm> s = s_coordinate_components(phi);
    MatrixXc pair = gram_of(s);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) total += (*re)(i, k, a, b) * pair(k * r + b, i * r + a);
  }
  return total;
}

double riem_t_pairing(const RealForm& omega, const RiemCurvature& rr) {
  if (rr.d() != omega.d()) throw std::invalid_argument("dimension mismatch");
  Eigen::MatrixXd f = riem_curv_operator(rr);
  RealTensorValuedForm t = riem_t_operator(omega);
  const int N = t.carrier_dim();
  double s = 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) s += f(a, b) * real_inner(t.components[b], t.components[a]);
  return s;
}

double riem_curvature_pairing(const RealForm& omega, const RiemCurvature& rr) {
  const int d = omega.d(), k = omega.k();
  if (rr.d() != d) throw std::invalid_argument("dimension mismatch");
  if (k == 0) return 0.0;
  double total = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RealForm lhs = elem::wedge_dx(i, elem::contract_e(j, omega));
      // R(d_j, d_i) on 1-forms: dx^l -> -sum_k R_{jikl} dx^k.
      Eigen::MatrixXd a(d, d);
      for (int kk = 0; kk < d; ++kk)
        for (int l = 0; l < d; ++l) a(kk, l) = -rr(j, i, kk, l);
      Eigen::VectorXd rw = compound_matrix<double>(a, k) * omega.coeffs();
      total -= lhs.coeffs().dot(rw);
    }
  return total;
}

double y_curvature_pairing(const PqForm& phi, const KaehlerCurvature& rc) {
  if (rc.context_ptr() != phi.context_ptr()) throw std::invalid_argument("context mismatch");
  return contract_with(reduced_curv_operator(rc), y_operator(phi).components).real();
}

cplx y_curvature_action(const PqForm& phi, const KaehlerCurvature& rc) {
  if (rc.context_ptr() != phi.context_ptr()) throw std::invalid_argument("context mismatch");
  const int n = phi.n();
  MatrixXc pair = gram_of(y_coordinate_components(phi));  // pair(x, y) = <Y_y, Y_x>
  cplx total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) total += rc(i, j, k, l) * pair(l * n + k, i * n + j);
  return total;
}

double norm_t_identity_defect(const PqForm& phi) {
  const int n = phi.n(), p = phi.p(), q = phi.q();
  double t2 = norm_squared(t_operator(phi));
  double llphi = (p < n && q < n) ? inner_product(lefschetz_dual(lefschetz_L(phi)), phi).real() : 0.0;
  double rhs = 2.0 * (q + 1) * (n - p) * norm_squared(phi) - 2.0 * llphi;
  return std::abs(t2 - rhs);
}

double y_direction_norm_squared(const PqForm& phi) {
  MatrixXc gram = gram_of(y_operator(phi).components);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(gram, Eigen::EigenvaluesOnly);
  return std::max(0.0, es.eigenvalues().maxCoeff());
}

}  // namespace wlab
