#include "wlab/curvature_models.hpp"

#include <algorithm>
#include <cmath>

namespace wlab {

SymmetryError::SymmetryError(const std::string& relation, std::array<int, 4> indices, double deviation)
    : std::invalid_argument("curvature symmetry violated (" + relation + ") at indices (" +
                            std::to_string(indices[0]) + "," + std::to_string(indices[1]) + "," +
                            std::to_string(indices[2]) + "," + std::to_string(indices[3]) +
                            "), deviation " + std::to_string(deviation)),
      relation_(relation),
      indices_(indices),
      deviation_(deviation) {}

// ------------------------------------------------------------ Kaehler

KaehlerCurvature::KaehlerCurvature(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("null context");
  n_ = ctx_->n();
  data_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_, cplx(0.0));
}

namespace {

struct Violation {
  double dev = 0.0;
  std::string relation;
  std::array<int, 4> at{};
  void offer(double d, const char* rel, int i, int j, int k, int l) {
    if (d > dev) {
      dev = d;
      relation = rel;
      at = {i + 1, j + 1, k + 1, l + 1};
    }
  }
};

Violation kaehler_violation(const KaehlerCurvature& r) {
  Violation v;
  const int n = r.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx x = r(i, j, k, l);
          v.offer(std::abs(x - r(k, j, i, l)), "R_ijkl = R_kjil", i, j, k, l);
          v.offer(std::abs(x - r(i, l, k, j)), "R_ijkl = R_ilkj", i, j, k, l);
          v.offer(std::abs(std::conj(x) - r(j, i, l, k)), "conj R_ijkl = R_jilk", i, j, k, l);
        }
  return v;
}

}  // namespace

double KaehlerCurvature::symmetry_defect() const { return kaehler_violation(*this).dev; }

void KaehlerCurvature::validate(double tol) const {
  Violation v = kaehler_violation(*this);
  if (v.dev > tol) throw SymmetryError(v.relation, v.at, v.dev);
}

// ------------------------------------------------------------- bundle

BundleCurvature::BundleCurvature(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("null context");
  n_ = ctx_->n();
  r_ = ctx_->r();
  data_.assign(static_cast<std::size_t>(n_) * n_ * r_ * r_, cplx(0.0));
}

namespace {

Violation bundle_violation(const BundleCurvature& re) {
  Violation v;
  for (int i = 0; i < re.n(); ++i)
    for (int j = 0; j < re.n(); ++j)
      for (int a = 0; a < re.r(); ++a)
        for (int b = 0; b < re.r(); ++b)
          v.offer(std::abs(std::conj(re(i, j, a, b)) - re(j, i, b, a)), "conj RE_ijab = RE_jiba", i, j, a, b);
  return v;
}

}  // namespace

double BundleCurvature::symmetry_defect() const { return bundle_violation(*this).dev; }

void BundleCurvature::validate(double tol) const {
  Violation v = bundle_violation(*this);
  if (v.dev > tol) throw SymmetryError(v.relation, v.at, v.dev);
}

// ---------------------------------------------------------- Riemannian

RiemCurvature::RiemCurvature(int d) : d_(d) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("dimension d out of range");
  data_.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);
}

namespace {

Violation riem_violation(const RiemCurvature& r, bool bianchi) {
  Violation v;
  const int d = r.d();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double x = r(i, j, k, l);
          if (bianchi) {
            v.offer(std::abs(x + r(j, k, i, l) + r(k, i, j, l)), "first Bianchi", i, j, k, l);
            continue;
          }
          v.offer(std::abs(x + r(j, i, k, l)), "R_ijkl = -R_jikl", i, j, k, l);
          v.offer(std::abs(x + r(i, j, l, k)), "R_ijkl = -R_ijlk", i, j, k, l);
          v.offer(std::abs(x - r(k, l, i, j)), "R_ijkl = R_klij", i, j, k, l);
        }
  return v;
}

}  // namespace

double RiemCurvature::symmetry_defect() const { return riem_violation(*this, false).dev; }
double RiemCurvature::bianchi_defect() const { return riem_violation(*this, true).dev; }

void RiemCurvature::validate(double tol) const {
  Violation v = riem_violation(*this, false);
  if (v.dev > tol) throw SymmetryError(v.relation, v.at, v.dev);
  v = riem_violation(*this, true);
  if (v.dev > tol) throw SymmetryError(v.relation, v.at, v.dev);
}

RiemCurvature bianchi_project(const RiemCurvature& r) {
  const int d = r.d();
  RiemCurvature s(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          // Antisymmetrize both pairs, then symmetrize under pair exchange.
          auto anti = [&](int a, int b, int c, int e) {
            return 0.25 * (r(a, b, c, e) - r(b, a, c, e) - r(a, b, e, c) + r(b, a, e, c));
          };
          s(i, j, k, l) = 0.5 * (anti(i, j, k, l) + anti(k, l, i, j));
        }
  RiemCurvature out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          out(i, j, k, l) = s(i, j, k, l) - (s(i, j, k, l) + s(j, k, i, l) + s(k, i, j, l)) / 3.0;
  return out;
}

// ------------------------------------------------------------ Spectrum

Spectrum::Spectrum(std::vector<double> values) : eigenvalues(std::move(values)) {
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end()))
    throw std::invalid_argument("spectrum must be ascending");
}

Spectrum Spectrum::of(const MatrixXc& hermitian) {
  Eigen::VectorXd ev = hermitian_eigenvalues(hermitian);
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

// ------------------------------------------------------------ operators

std::vector<MatrixXc> sym2_basis(const AlgebraContext& ctx) {
  const int n = ctx.n();
  const MatrixXc& e = ctx.frame();
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<MatrixXc> out;
  out.reserve(n * (n + 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      MatrixXc u = e.col(a) * e.col(b).transpose();
      if (a == b)
        out.push_back(u);
      else
        out.push_back(s * (u + u.transpose()));
    }
  return out;
}

std::vector<MatrixXc> sym2_dual_basis(const AlgebraContext& ctx) {
  const MatrixXc& g = ctx.g();
  std::vector<MatrixXc> out;
  for (const MatrixXc& u : sym2_basis(ctx)) out.push_back(g * u.conjugate() * g.transpose());
  return out;
}

namespace {

// sum R_{i jbar k lbar} x^{ik} conj(y^{jl})
cplx pair_sym(const KaehlerCurvature& rc, const MatrixXc& x, const MatrixXc& y) {
  const int n = rc.n();
  cplx s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      cplx xik = x(i, k);
      if (xik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) s += rc(i, j, k, l) * xik * std::conj(y(j, l));
    }
  return s;
}

}  // namespace

MatrixXc sym_curv_operator(const KaehlerCurvature& rc) {
  rc.validate();
  std::vector<MatrixXc> u = sym2_basis(rc.context());
  const int N = static_cast<int>(u.size());
  MatrixXc m(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) m(a, b) = pair_sym(rc, u[b], u[a]);
  return m;
}

MatrixXc reduced_curv_operator(const KaehlerCurvature& rc) {
  rc.validate();
  const int n = rc.n();
  const MatrixXc& e = rc.context().frame();
  // Basis w_{ab} = e_a (x) conj(e_b), components w^{i jbar} = E(i,a) conj(E(j,b)).
  auto comp = [&](int A, int i, int j) { return e(i, A / n) * std::conj(e(j, A % n)); };
  MatrixXc m(n * n, n * n);
  for (int A2 = 0; A2 < n * n; ++A2)
    for (int A = 0; A < n * n; ++A) {
      // <R(w_A), w_A2> = sum R_{i jbar k lbar} w_A^{i jbar} conj(w_A2^{l kbar})
      cplx s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          cplx w = comp(A, i, j);
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) s += rc(i, j, k, l) * w * std::conj(comp(A2, l, k));
        }
      m(A2, A) = s;
    }
  return m;
}

MatrixXc bundle_curv_operator(const BundleCurvature& re) {
  re.validate();
  const int n = re.n(), r = re.r();
  const MatrixXc& e = re.context().frame();
  const MatrixXc& f = re.context().bundle_frame();
  auto comp = [&](int A, int i, int al) { return e(i, A / r) * f(al, A % r); };
  MatrixXc m(n * r, n * r);
  for (int A2 = 0; A2 < n * r; ++A2)
    for (int A = 0; A < n * r; ++A) {
      cplx s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) s += re(i, j, a, b) * comp(A, i, a) * std::conj(comp(A2, j, b));
      m(A2, A) = s;
    }
  return m;
}

Eigen::MatrixXd riem_curv_operator(const RiemCurvature& rr) {
  rr.validate();
  const int d = rr.d();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  const int N = static_cast<int>(pairs.size());
  Eigen::MatrixXd m(N, N);
  // <F(e_i ^ e_j), e_k ^ e_l> = R_{ijlk}
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto [k, l] = pairs[a];
      auto [i, j] = pairs[b];
      m(a, b) = rr(i, j, l, k);
    }
  return m;
}

KaehlerCurvature kaehler_from_sym_operator(const ContextPtr& ctx, const MatrixXc& op) {
  std::vector<MatrixXc> w = sym2_dual_basis(*ctx);
  const int N = static_cast<int>(w.size());
  if (op.rows() != N || op.cols() != N) throw std::invalid_argument("operator has wrong size");
  const int n = ctx->n();
  KaehlerCurvature rc(ctx);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      cplx m = op(a, b);
      if (m == cplx(0.0)) continue;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          cplx wb = m * w[b](i, k);
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) rc(i, j, k, l) += wb * std::conj(w[a](j, l));
        }
    }
  return rc;
}

// --------------------------------------------------------------- models

KaehlerCurvature model_fubini_study(const ContextPtr& ctx) {
  const int n = ctx->n();
  const MatrixXc& g = ctx->g();
  KaehlerCurvature rc(ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) rc(i, j, k, l) = g(i, j) * g(k, l) + g(i, l) * g(k, j);
  return rc;
}

KaehlerCurvature model_fubini_study(int n) { return model_fubini_study(AlgebraContext::identity(n)); }

Spectrum model_hyperquadric(int n) {
  if (n < 2) throw std::invalid_argument("hyperquadric model needs n >= 2");
  std::vector<double> ev(n * (n + 1) / 2, 2.0);
  ev[0] = 2.0 - n;
  return Spectrum(std::move(ev));
}

RiemCurvature model_sphere(int d) {
  RiemCurvature r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      r(i, j, j, i) += 1.0;
      r(i, j, i, j) -= 1.0;
    }
  return r;
}

KaehlerCurvature random_kaehler(const ContextPtr& ctx, Rng& rng, const std::vector<int>& signs) {
  const int n = ctx->n();
  KaehlerCurvature rc(ctx);
  for (int s : signs) {
    MatrixXc S = random_symmetric_complex(n, rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) rc(i, j, k, l) += double(s) * S(i, k) * std::conj(S(j, l));
  }
  return rc;
}

KaehlerCurvature random_kaehler(int n, std::uint64_t seed, const std::vector<int>& signs) {
  Rng rng = derived_rng(seed, 0, 0);
  return random_kaehler(AlgebraContext::identity(n), rng, signs);
}

BundleCurvature random_bundle(const ContextPtr& ctx, Rng& rng, const std::vector<int>& signs, double shift) {
  const int n = ctx->n(), r = ctx->r();
  BundleCurvature re(ctx);
  for (int s : signs) {
    MatrixXc P = random_complex_matrix(n, r, rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) re(i, j, a, b) += double(s) * P(i, a) * std::conj(P(j, b));
  }
  if (shift != 0.0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) re(i, j, a, b) += shift * ctx->g()(i, j) * ctx->h()(a, b);
  return re;
}

RiemCurvature random_riemannian(int d, Rng& rng) {
  RiemCurvature r(d);
  const int terms = d * (d + 1) / 2 + 1;
  for (int t = 0; t < terms; ++t) {
    Eigen::MatrixXd a = random_real_matrix(d, d, rng);
    Eigen::MatrixXd h = 0.5 * (a + a.transpose());
    double c = gaussian(rng);
    // -c/2 (h o h): positive c makes h = Id a round sphere.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            r(i, j, k, l) += -c * (h(i, k) * h(j, l) - h(i, l) * h(j, k));
  }
  return r;
}

RiemCurvature random_riemannian(int d, std::uint64_t seed) {
  Rng rng = derived_rng(seed, 0, 0);
  return random_riemannian(d, rng);
}

std::optional<int> m_positivity_level(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw std::invalid_argument("empty spectrum");
  double sum = 0.0;
  for (int m = 0; m < s.dim(); ++m) {
    sum += s.eigenvalues[m];
    if (sum > 0.0) return m + 1;
  }
  return std::nullopt;
}

bool partial_trace_check(const MatrixXc& a, const MatrixXc& frame, int k) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || frame.rows() != n) throw std::invalid_argument("shape mismatch");
  if (k < 0 || k > frame.cols()) throw std::invalid_argument("k exceeds frame size");
  MatrixXc f = frame.leftCols(k);
  if ((f.adjoint() * f - MatrixXc::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("frame is not orthonormal");
  Eigen::VectorXd ev = hermitian_eigenvalues(a);
  double lhs = (f.adjoint() * a * f).trace().real();
  double rhs = ev.head(k).sum();
  return lhs - rhs >= -1e-9;
}

}  // namespace wlab
