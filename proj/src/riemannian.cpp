#include "wlab/riemannian.hpp"

#include <stdexcept>

namespace wlab {

RealForm::RealForm(int d, int k) : d_(d), k_(k) {
  if (d < 1 || d > kMaxDim || k < 0 || k > d) throw std::invalid_argument("real form degree out of range");
  c_ = Eigen::VectorXd::Zero(binomial(d, k));
}

RealForm RealForm::basis(int d, const MultiIndex& I) {
  RealForm f(d, I.size());
  f.set_coeff(I, 1.0);
  return f;
}

RealForm RealForm::random(int d, int k, Rng& rng) {
  RealForm f(d, k);
  for (int i = 0; i < f.dim(); ++i) f.c_(i) = gaussian(rng);
  return f;
}

double RealForm::coeff(const MultiIndex& I) const {
  if (I.size() != k_) throw std::invalid_argument("multi-index length does not match degree");
  I.check_bound(d_);
  return c_(subset_basis(d_, k_).rank(I.mask()));
}

void RealForm::set_coeff(const MultiIndex& I, double v) {
  if (I.size() != k_) throw std::invalid_argument("multi-index length does not match degree");
  I.check_bound(d_);
  c_(subset_basis(d_, k_).rank(I.mask())) = v;
}

void RealForm::check_compatible(const RealForm& o) const {
  if (d_ != o.d_ || k_ != o.k_) throw std::invalid_argument("real form shape mismatch");
}

RealForm& RealForm::operator+=(const RealForm& o) {
  check_compatible(o);
  c_ += o.c_;
  return *this;
}

RealForm& RealForm::operator-=(const RealForm& o) {
  check_compatible(o);
  c_ -= o.c_;
  return *this;
}

RealForm& RealForm::operator*=(double s) {
  c_ *= s;
  return *this;
}

RealForm operator+(RealForm a, const RealForm& b) { return a += b; }
RealForm operator-(RealForm a, const RealForm& b) { return a -= b; }
RealForm operator*(double s, RealForm a) { return a *= s; }

namespace elem {

RealForm wedge_dx(int i, const RealForm& a) {
  if (a.k() >= a.d()) throw std::domain_error("degree overflow in wedge");
  RealForm out(a.d(), a.k() + 1);
  const SubsetBasis& src = subset_basis(a.d(), a.k());
  const SubsetBasis& dst = subset_basis(a.d(), a.k() + 1);
  const Mask bit = Mask{1} << i;
  for (int r = 0; r < src.size(); ++r) {
    Mask m = src.mask(r);
    if (m & bit) continue;
    double s = (count_below(m, i) & 1) ? -1.0 : 1.0;
    out.coeffs()(dst.rank(m | bit)) += s * a.coeffs()(r);
  }
  return out;
}

RealForm contract_e(int i, const RealForm& a) {
  if (a.k() == 0) return RealForm(a.d(), 0);
  RealForm out(a.d(), a.k() - 1);
  const SubsetBasis& src = subset_basis(a.d(), a.k());
  const SubsetBasis& dst = subset_basis(a.d(), a.k() - 1);
  const Mask bit = Mask{1} << i;
  for (int r = 0; r < src.size(); ++r) {
    Mask m = src.mask(r);
    if (!(m & bit)) continue;
    double s = (count_below(m, i) & 1) ? -1.0 : 1.0;
    out.coeffs()(dst.rank(m & ~bit)) += s * a.coeffs()(r);
  }
  return out;
}

}  // namespace elem

RealForm real_wedge(const RealForm& a, const RealForm& b) {
  if (a.d() != b.d()) throw std::invalid_argument("real form dimension mismatch");
  const int d = a.d();
  if (a.k() + b.k() > d) throw std::domain_error("degree overflow in wedge");
  RealForm out(d, a.k() + b.k());
  const SubsetBasis &sa = subset_basis(d, a.k()), &sb = subset_basis(d, b.k());
  const SubsetBasis& so = subset_basis(d, out.k());
  for (int i = 0; i < sa.size(); ++i)
    for (int j = 0; j < sb.size(); ++j) {
      Mask x = sa.mask(i), y = sb.mask(j);
      if (x & y) continue;
      out.coeffs()(so.rank(x | y)) += merge_sign(x, y) * a.coeffs()(i) * b.coeffs()(j);
    }
  return out;
}

RealForm real_contract(const Eigen::VectorXd& x, const RealForm& a) {
  if (x.size() != a.d()) throw std::invalid_argument("vector dimension mismatch");
  RealForm out(a.d(), a.k() == 0 ? 0 : a.k() - 1);
  if (a.k() == 0) return out;
  for (int i = 0; i < a.d(); ++i)
    if (x(i) != 0.0) out.coeffs() += x(i) * elem::contract_e(i, a).coeffs();
  return out;
}

double real_inner(const RealForm& a, const RealForm& b) {
  if (a.d() != b.d() || a.k() != b.k()) throw std::invalid_argument("real form shape mismatch");
  return a.coeffs().dot(b.coeffs());
}

double real_norm_squared(const RealForm& a) { return a.coeffs().squaredNorm(); }

std::string to_string(BettiVerdict v) {
  switch (v) {
    case BettiVerdict::Vanishes: return "vanishes";
    case BettiVerdict::ParallelOnly: return "parallel-only";
    case BettiVerdict::NoClaim: return "no-claim";
  }
  return "no-claim";
}

BettiVerdict betti_prediction(int d, int k, int p_level, bool strict) {
  if (d < 2 || k < 1 || k > d - 1) throw std::invalid_argument("degree k must satisfy 1 <= k <= d-1");
  if (p_level < 1) throw std::invalid_argument("positivity level must be positive");
  bool in_range = k <= d - p_level || k >= p_level;
  if (strict) {
    if (in_range || 2 * p_level <= d) return BettiVerdict::Vanishes;
    return BettiVerdict::NoClaim;
  }
  return in_range ? BettiVerdict::ParallelOnly : BettiVerdict::NoClaim;
}

}  // namespace wlab
