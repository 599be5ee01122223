#include "wlab/exterior_algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wlab {

namespace {

void check_metric(const MatrixXc& m, int size, const char* name) {
  if (m.rows() != size || m.cols() != size)
    throw std::invalid_argument(std::string(name) + " has wrong shape");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermitian_defect(m) > 1e-12 * scale)
    throw std::invalid_argument(std::string(name) + " is not Hermitian");
  if (hermitian_eigenvalues(m)(0) <= 0.0)
    throw std::invalid_argument(std::string(name) + " is not positive definite");
}

// Columns f_a with F^T m conj(F) = Id, from m = C C^*.
MatrixXc unitary_frame(const MatrixXc& m) {
  Eigen::LLT<MatrixXc> llt(m);
  MatrixXc c = llt.matrixL();
  MatrixXc cinv = c.triangularView<Eigen::Lower>().solve(MatrixXc::Identity(m.rows(), m.cols()));
  return cinv.transpose();
}

}  // namespace

ContextPtr AlgebraContext::create(int n, const MatrixXc& g, int r, const MatrixXc& h) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension n out of range");
  if (r < 1) throw std::invalid_argument("bundle rank must be positive");
  MatrixXc hh = h.size() == 0 ? MatrixXc::Identity(r, r) : h;
  check_metric(g, n, "g");
  check_metric(hh, r, "h");
  // Rank-one values share storage with scalar forms, so their metric must be trivial.
  if (r == 1 && std::abs(hh(0, 0) - 1.0) > 1e-12)
    throw std::invalid_argument("a rank-one bundle must be given in a unit frame (h = 1)");
  std::shared_ptr<AlgebraContext> ctx(new AlgebraContext());
  ctx->n_ = n;
  ctx->r_ = r;
  ctx->g_ = (g + g.adjoint()) * 0.5;
  ctx->h_ = (hh + hh.adjoint()) * 0.5;
  ctx->g_inv_ = ctx->g_.inverse().conjugate();
  ctx->h_inv_ = ctx->h_.inverse().conjugate();
  ctx->identity_ = ctx->g_ == MatrixXc::Identity(n, n) && ctx->h_ == MatrixXc::Identity(r, r);
  ctx->frame_ = unitary_frame(ctx->g_);
  ctx->bundle_frame_ = unitary_frame(ctx->h_);
  return ctx;
}

ContextPtr AlgebraContext::identity(int n, int r) {
  return create(n, MatrixXc::Identity(n, n), r);
}

const MatrixXc& AlgebraContext::minors(int k) const {
  // Caller holds cache_mu_.
  auto& slot = minor_cache_[k];
  if (!slot) {
    const SubsetBasis& sb = subset_basis(n_, k);
    auto m = std::make_unique<MatrixXc>(sb.size(), sb.size());
    std::vector<int> rows, cols;
    for (int a = 0; a < sb.size(); ++a) {
      for (int b = 0; b < sb.size(); ++b) {
        MatrixXc sub(k, k);
        int ii = 0;
        for (Mask ra = sb.mask(a); ra; ra &= ra - 1, ++ii) {
          int jj = 0;
          for (Mask rb = sb.mask(b); rb; rb &= rb - 1, ++jj)
            sub(ii, jj) = g_inv_(__builtin_ctz(ra), __builtin_ctz(rb));
        }
        (*m)(a, b) = k == 0 ? cplx(1.0) : sub.determinant();
      }
    }
    slot = std::move(m);
  }
  return *slot;
}

const AlgebraContext::GramEntry& AlgebraContext::gram_entry(int p, int q, int fiber) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  int key = (p * 64 + q) * 64 + fiber;
  auto& slot = gram_cache_[key];
  if (!slot) {
    const MatrixXc& mp = minors(p);
    const MatrixXc& mq = minors(q);
    MatrixXc hf = fiber == 1 ? MatrixXc::Identity(1, 1) : h_.conjugate().eval();
    if (fiber != 1 && fiber != r_) throw std::invalid_argument("fiber size does not match context");
    int np = mp.rows(), nq = mq.rows();
    int dim = np * nq * fiber;
    auto e = std::make_unique<GramEntry>();
    e->gram.resize(dim, dim);
    for (int i1 = 0; i1 < np; ++i1)
      for (int j1 = 0; j1 < nq; ++j1)
        for (int a1 = 0; a1 < fiber; ++a1)
          for (int i2 = 0; i2 < np; ++i2)
            for (int j2 = 0; j2 < nq; ++j2)
              for (int a2 = 0; a2 < fiber; ++a2)
                e->gram((i1 * nq + j1) * fiber + a1, (i2 * nq + j2) * fiber + a2) =
                    std::conj(mp(i1, i2)) * mq(j1, j2) * hf(a1, a2);
    e->llt.compute(e->gram);
    slot = std::move(e);
  }
  return *slot;
}

const MatrixXc& AlgebraContext::gram(int p, int q, int fiber) const {
  return gram_entry(p, q, fiber).gram;
}

VectorXc AlgebraContext::gram_solve(int p, int q, int fiber, const VectorXc& b) const {
  if (identity_) return b;
  return gram_entry(p, q, fiber).llt.solve(b);
}

// ---------------------------------------------------------------- PqForm

PqForm::PqForm(ContextPtr ctx, int p, int q, int fiber)
    : ctx_(std::move(ctx)), p_(p), q_(q), fiber_(fiber) {
  if (!ctx_) throw std::invalid_argument("null context");
  int n = ctx_->n();
  if (p < 0 || q < 0 || p > n || q > n)
    throw std::invalid_argument("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                ") out of range for n=" + std::to_string(n));
  if (fiber != 1 && fiber != ctx_->r())
    throw std::invalid_argument("fiber must be 1 or the bundle rank");
  cols_j_ = static_cast<int>(binomial(n, q));
  c_ = VectorXc::Zero(binomial(n, p) * cols_j_ * fiber);
}

PqForm PqForm::one(ContextPtr ctx) {
  PqForm f(std::move(ctx), 0, 0, 1);
  f.c_(0) = 1.0;
  return f;
}

PqForm PqForm::basis(ContextPtr ctx, const MultiIndex& I, const MultiIndex& J, int alpha,
                     int fiber) {
  PqForm f(std::move(ctx), I.size(), J.size(), fiber);
  f.set_coeff(I, J, alpha, 1.0);
  return f;
}

PqForm PqForm::random(ContextPtr ctx, int p, int q, int fiber, Rng& rng) {
  PqForm f(std::move(ctx), p, q, fiber);
  for (int i = 0; i < f.dim(); ++i) f.c_(i) = complex_gaussian(rng);
  return f;
}

cplx PqForm::coeff(const MultiIndex& I, const MultiIndex& J, int alpha) const {
  if (I.size() != p_ || J.size() != q_) throw std::invalid_argument("multi-index lengths do not match bidegree");
  I.check_bound(n());
  J.check_bound(n());
  if (alpha < 1 || alpha > fiber_) throw std::invalid_argument("fiber index out of range");
  return c_(index(subset_basis(n(), p_).rank(I.mask()), subset_basis(n(), q_).rank(J.mask()), alpha - 1));
}

void PqForm::set_coeff(const MultiIndex& I, const MultiIndex& J, int alpha, cplx value) {
  if (I.size() != p_ || J.size() != q_) throw std::invalid_argument("multi-index lengths do not match bidegree");
  I.check_bound(n());
  J.check_bound(n());
  if (alpha < 1 || alpha > fiber_) throw std::invalid_argument("fiber index out of range");
  c_(index(subset_basis(n(), p_).rank(I.mask()), subset_basis(n(), q_).rank(J.mask()), alpha - 1)) = value;
}

PqForm PqForm::component(int alpha) const {
  PqForm out(ctx_, p_, q_, 1);
  for (int b = 0; b < out.dim(); ++b) out.c_(b) = c_(b * fiber_ + alpha);
  return out;
}

void PqForm::check_compatible(const PqForm& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("context mismatch");
  if (p_ != o.p_ || q_ != o.q_ || fiber_ != o.fiber_) throw std::invalid_argument("bidegree or fiber mismatch");
}

PqForm& PqForm::operator+=(const PqForm& o) {
  check_compatible(o);
  c_ += o.c_;
  return *this;
}

PqForm& PqForm::operator-=(const PqForm& o) {
  check_compatible(o);
  c_ -= o.c_;
  return *this;
}

PqForm& PqForm::operator*=(cplx s) {
  c_ *= s;
  return *this;
}

PqForm operator+(PqForm a, const PqForm& b) { return a += b; }
PqForm operator-(PqForm a, const PqForm& b) { return a -= b; }
PqForm operator*(cplx s, PqForm a) { return a *= s; }
PqForm operator*(PqForm a, cplx s) { return a *= s; }

std::string PqForm::str() const {
  std::ostringstream os;
  os << "(" << p_ << "," << q_ << ")-form";
  const SubsetBasis& bp = subset_basis(n(), p_);
  const SubsetBasis& bq = subset_basis(n(), q_);
  bool any = false;
  for (int i = 0; i < bp.size(); ++i)
    for (int j = 0; j < bq.size(); ++j)
      for (int a = 0; a < fiber_; ++a) {
        cplx c = c_(index(i, j, a));
        if (c == cplx(0.0)) continue;
        any = true;
        os << " + " << c << " dz" << MultiIndex::from_mask(bp.mask(i)).str() << " dzbar"
           << MultiIndex::from_mask(bq.mask(j)).str();
        if (fiber_ > 1) os << " e" << (a + 1);
      }
  if (!any) os << " 0";
  return os.str();
}

TangentVector TangentVector::coordinate(Type type, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("coordinate index out of range");
  TangentVector x{type, VectorXc::Zero(n)};
  x.components(i - 1) = 1.0;
  return x;
}

// ------------------------------------------------------- elementary ops

namespace {

// Applies a signed basis map (I, J) -> (I', J') to every coefficient.
template <class F>
PqForm map_basis(const PqForm& a, int np, int nq, F&& f) {
  PqForm out(a.context_ptr(), np, nq, a.fiber());
  const int n = a.n(), fib = a.fiber();
  const SubsetBasis& sp = subset_basis(n, a.p());
  const SubsetBasis& sq = subset_basis(n, a.q());
  const SubsetBasis& tp = subset_basis(n, np);
  const SubsetBasis& tq = subset_basis(n, nq);
  const VectorXc& src = a.coeffs();
  VectorXc& dst = out.coeffs();
  for (int ri = 0; ri < sp.size(); ++ri) {
    for (int rj = 0; rj < sq.size(); ++rj) {
      Mask mi = sp.mask(ri), mj = sq.mask(rj);
      int s = f(mi, mj);
      if (s == 0) continue;
      int base_src = a.index(ri, rj, 0);
      int base_dst = out.index(tp.rank(mi), tq.rank(mj), 0);
      for (int al = 0; al < fib; ++al) dst(base_dst + al) += double(s) * src(base_src + al);
    }
  }
  return out;
}

}  // namespace

namespace elem {

PqForm wedge_dz(int i, const PqForm& a) {
  if (a.p() >= a.n()) throw std::domain_error("degree overflow in wedge");
  const Mask bit = Mask{1} << i;
  return map_basis(a, a.p() + 1, a.q(), [&](Mask& mi, Mask&) {
    if (mi & bit) return 0;
    int s = (count_below(mi, i) & 1) ? -1 : 1;
    mi |= bit;
    return s;
  });
}

PqForm wedge_dzbar(int j, const PqForm& a) {
  if (a.q() >= a.n()) throw std::domain_error("degree overflow in wedge");
  const Mask bit = Mask{1} << j;
  const int p = a.p();
  return map_basis(a, p, a.q() + 1, [&](Mask&, Mask& mj) {
    if (mj & bit) return 0;
    int s = ((p + count_below(mj, j)) & 1) ? -1 : 1;
    mj |= bit;
    return s;
  });
}

PqForm contract_dz(int i, const PqForm& a) {
  if (a.p() == 0) return PqForm(a.context_ptr(), 0, a.q(), a.fiber());
  const Mask bit = Mask{1} << i;
  return map_basis(a, a.p() - 1, a.q(), [&](Mask& mi, Mask&) {
    if (!(mi & bit)) return 0;
    int s = (count_below(mi, i) & 1) ? -1 : 1;
    mi &= ~bit;
    return s;
  });
}

PqForm contract_dzbar(int j, const PqForm& a) {
  if (a.q() == 0) return PqForm(a.context_ptr(), a.p(), 0, a.fiber());
  const Mask bit = Mask{1} << j;
  const int p = a.p();
  return map_basis(a, p, a.q() - 1, [&](Mask&, Mask& mj) {
    if (!(mj & bit)) return 0;
    int s = ((p + count_below(mj, j)) & 1) ? -1 : 1;
    mj &= ~bit;
    return s;
  });
}

PqForm lefschetz_L_transpose(const PqForm& a) {
  const int n = a.n();
  const MatrixXc& g = a.context().g();
  PqForm out(a.context_ptr(), a.p() - 1, a.q() - 1, a.fiber());
  for (int i = 0; i < n; ++i) {
    PqForm ci = contract_dz(i, a);
    for (int j = 0; j < n; ++j) {
      cplx c = std::conj(kI * g(i, j));
      if (c == cplx(0.0)) continue;
      out.coeffs() += c * contract_dzbar(j, ci).coeffs();
    }
  }
  return out;
}

}  // namespace elem

// ------------------------------------------------------------ public ops

PqForm wedge(const PqForm& a, const PqForm& b) {
  if (a.context_ptr() != b.context_ptr()) throw std::invalid_argument("context mismatch");
  if (a.fiber() > 1 && b.fiber() > 1) throw std::invalid_argument("both operands are bundle-valued");
  const int n = a.n();
  if (a.p() + b.p() > n || a.q() + b.q() > n) throw std::domain_error("degree overflow in wedge");
  const int fib = std::max(a.fiber(), b.fiber());
  PqForm out(a.context_ptr(), a.p() + b.p(), a.q() + b.q(), fib);
  const SubsetBasis &ap = subset_basis(n, a.p()), &aq = subset_basis(n, a.q());
  const SubsetBasis &bp = subset_basis(n, b.p()), &bq = subset_basis(n, b.q());
  const SubsetBasis &op = subset_basis(n, out.p()), &oq = subset_basis(n, out.q());
  const int cross = (a.q() * b.p()) & 1;
  for (int ai = 0; ai < ap.size(); ++ai)
    for (int aj = 0; aj < aq.size(); ++aj)
      for (int bi = 0; bi < bp.size(); ++bi) {
        Mask I = ap.mask(ai), K = bp.mask(bi);
        if (I & K) continue;
        for (int bj = 0; bj < bq.size(); ++bj) {
          Mask J = aq.mask(aj), L = bq.mask(bj);
          if (J & L) continue;
          int s = merge_sign(I, K) * merge_sign(J, L) * (cross ? -1 : 1);
          int dst = out.index(op.rank(I | K), oq.rank(J | L), 0);
          for (int al = 0; al < fib; ++al) {
            cplx ca = a.coeffs()(a.index(ai, aj, a.fiber() > 1 ? al : 0));
            cplx cb = b.coeffs()(b.index(bi, bj, b.fiber() > 1 ? al : 0));
            out.coeffs()(dst + al) += double(s) * ca * cb;
          }
        }
      }
  return out;
}

PqForm contract(const TangentVector& x, const PqForm& a) {
  const int n = a.n();
  if (x.components.size() != n) throw std::invalid_argument("tangent vector dimension mismatch");
  bool holo = x.type == TangentVector::Type::Holomorphic;
  PqForm out(a.context_ptr(), holo ? std::max(a.p() - 1, 0) : a.p(),
             holo ? a.q() : std::max(a.q() - 1, 0), a.fiber());
  if ((holo && a.p() == 0) || (!holo && a.q() == 0)) return out;
  for (int i = 0; i < n; ++i) {
    cplx c = x.components(i);
    if (c == cplx(0.0)) continue;
    out.coeffs() += c * (holo ? elem::contract_dz(i, a) : elem::contract_dzbar(i, a)).coeffs();
  }
  return out;
}

cplx inner_product(const PqForm& a, const PqForm& b) {
  if (a.context_ptr() != b.context_ptr()) throw std::invalid_argument("context mismatch");
  if (a.bidegree() != b.bidegree() || a.fiber() != b.fiber())
    throw std::invalid_argument("bidegree mismatch in inner product");
  const AlgebraContext& ctx = a.context();
  if (ctx.identity_metrics()) return b.coeffs().dot(a.coeffs());
  return b.coeffs().dot(ctx.gram(a.p(), a.q(), a.fiber()) * a.coeffs());
}

double norm_squared(const PqForm& a) { return inner_product(a, a).real(); }

double norm(const PqForm& a) { return std::sqrt(std::max(0.0, norm_squared(a))); }

PqForm kaehler_form(const ContextPtr& ctx) { return lefschetz_L(PqForm::one(ctx)); }

PqForm lefschetz_L(const PqForm& a) {
  const int n = a.n();
  if (a.p() >= n || a.q() >= n) throw std::domain_error("degree overflow in L");
  const MatrixXc& g = a.context().g();
  PqForm out(a.context_ptr(), a.p() + 1, a.q() + 1, a.fiber());
  for (int j = 0; j < n; ++j) {
    PqForm wj = elem::wedge_dzbar(j, a);
    for (int i = 0; i < n; ++i) {
      cplx c = kI * g(i, j);
      if (c == cplx(0.0)) continue;
      out.coeffs() += c * elem::wedge_dz(i, wj).coeffs();
    }
  }
  return out;
}

PqForm lefschetz_dual(const PqForm& a) {
  if (a.p() == 0 || a.q() == 0)
    return PqForm(a.context_ptr(), std::max(a.p() - 1, 0), std::max(a.q() - 1, 0), a.fiber());
  const AlgebraContext& ctx = a.context();
  if (ctx.identity_metrics()) return elem::lefschetz_L_transpose(a);
  // Lambda = K_lo^{-1} L^* K_hi in coefficient space.
  PqForm weighted = a;
  weighted.coeffs() = ctx.gram(a.p(), a.q(), a.fiber()) * a.coeffs();
  PqForm out = elem::lefschetz_L_transpose(weighted);
  out.coeffs() = ctx.gram_solve(out.p(), out.q(), out.fiber(), out.coeffs());
  return out;
}

PqForm commutator_defect(const PqForm& a) {
  const int n = a.n(), p = a.p(), q = a.q();
  PqForm out = a;
  out *= -double(n - p - q);
  if (p < n && q < n) out += lefschetz_dual(lefschetz_L(a));
  if (p >= 1 && q >= 1) out -= lefschetz_L(lefschetz_dual(a));
  return out;
}

}  // namespace wlab
