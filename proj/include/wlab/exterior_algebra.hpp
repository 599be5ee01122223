#pragma once

// Pointwise complex exterior algebra: E-valued (p,q)-forms over C^n with a
// Hermitian base metric g and bundle metric h.
//
// Conventions
//   * A basis element is dz^I ^ dzbar^J (x) e_alpha with I, J strictly
//     increasing; holomorphic factors always come first.
//   * Coefficients are stored in lexicographic order of (I, J, alpha).
//   * g(i,j) = g_{i jbar};  g_inv(i,j) = g^{i jbar}, so that
//     sum_j g^{i jbar} g_{k jbar} = delta_ik.  Same for h.
//   * E-valued forms pair their values with h_{alpha betabar}.

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlab/combinatorics.hpp"
#include "wlab/linalg.hpp"

namespace wlab {

class AlgebraContext;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

class AlgebraContext {
 public:
  // h may be empty, meaning the identity of size r. For r = 1 it must be
  // the identity: rank-one values are stored like scalar forms.
  static ContextPtr create(int n, const MatrixXc& g, int r = 1, const MatrixXc& h = MatrixXc());
  static ContextPtr identity(int n, int r = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const MatrixXc& g() const { return g_; }
  const MatrixXc& g_inv() const { return g_inv_; }
  const MatrixXc& h() const { return h_; }
  const MatrixXc& h_inv() const { return h_inv_; }
  bool identity_metrics() const { return identity_; }

  // Columns e_a with g(e_a, e_b) = delta_ab, i.e. E^T g conj(E) = Id.
  const MatrixXc& frame() const { return frame_; }
  // Columns f_a with F^T h conj(F) = Id.
  const MatrixXc& bundle_frame() const { return bundle_frame_; }

  // K(x, y) = <e_y, e_x> over the basis of (p,q)-forms with `fiber` values.
  const MatrixXc& gram(int p, int q, int fiber) const;
  // Solves gram(p,q,fiber) x = b.
  VectorXc gram_solve(int p, int q, int fiber, const VectorXc& b) const;

 private:
  AlgebraContext() = default;

  struct GramEntry {
    MatrixXc gram;
    Eigen::LLT<MatrixXc> llt;
  };
  const GramEntry& gram_entry(int p, int q, int fiber) const;
  const MatrixXc& minors(int k) const;

  int n_ = 0, r_ = 1;
  MatrixXc g_, g_inv_, h_, h_inv_, frame_, bundle_frame_;
  bool identity_ = true;

  mutable std::mutex cache_mu_;
  mutable std::unordered_map<int, std::unique_ptr<GramEntry>> gram_cache_;
  mutable std::unordered_map<int, std::unique_ptr<MatrixXc>> minor_cache_;
};

struct Bidegree {
  int p = 0, q = 0;
  bool operator==(const Bidegree&) const = default;
};

class PqForm {
 public:
  PqForm(ContextPtr ctx, int p, int q, int fiber = 1);

  static PqForm one(ContextPtr ctx);
  // alpha is 1-based.
  static PqForm basis(ContextPtr ctx, const MultiIndex& I, const MultiIndex& J, int alpha = 1,
                      int fiber = 1);
  // Complex Gaussian coefficients in the coordinate basis.
  static PqForm random(ContextPtr ctx, int p, int q, int fiber, Rng& rng);

  const AlgebraContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  int n() const { return ctx_->n(); }
  int p() const { return p_; }
  int q() const { return q_; }
  Bidegree bidegree() const { return {p_, q_}; }
  int fiber() const { return fiber_; }
  int dim() const { return static_cast<int>(c_.size()); }

  const VectorXc& coeffs() const { return c_; }
  VectorXc& coeffs() { return c_; }

  cplx coeff(const MultiIndex& I, const MultiIndex& J, int alpha = 1) const;
  void set_coeff(const MultiIndex& I, const MultiIndex& J, int alpha, cplx value);
  // Position of (rank of I, rank of J, 0-based alpha) in the coefficient vector.
  int index(int rank_i, int rank_j, int alpha) const {
    return (rank_i * cols_j_ + rank_j) * fiber_ + alpha;
  }
  // The scalar form formed by the alpha-th (0-based) value component.
  PqForm component(int alpha) const;

  PqForm& operator+=(const PqForm& o);
  PqForm& operator-=(const PqForm& o);
  PqForm& operator*=(cplx s);

  std::string str() const;

 private:
  void check_compatible(const PqForm& o) const;

  ContextPtr ctx_;
  int p_, q_, fiber_, cols_j_;
  VectorXc c_;
};

PqForm operator+(PqForm a, const PqForm& b);
PqForm operator-(PqForm a, const PqForm& b);
PqForm operator*(cplx s, PqForm a);
PqForm operator*(PqForm a, cplx s);

// A tangent vector of pure type: sum_i X^i d/dz^i or sum_i X^i d/dzbar^i.
struct TangentVector {
  enum class Type { Holomorphic, AntiHolomorphic };
  Type type;
  VectorXc components;

  // d/dz^i (Holomorphic) or d/dzbar^i, i 1-based.
  static TangentVector coordinate(Type type, int n, int i);
};

PqForm wedge(const PqForm& a, const PqForm& b);
PqForm contract(const TangentVector& x, const PqForm& a);
cplx inner_product(const PqForm& a, const PqForm& b);
double norm_squared(const PqForm& a);
double norm(const PqForm& a);

PqForm kaehler_form(const ContextPtr& ctx);
PqForm lefschetz_L(const PqForm& a);
PqForm lefschetz_dual(const PqForm& a);
PqForm commutator_defect(const PqForm& a);

// Elementary coordinate operators with 0-based indices. These are the
// building blocks of everything above and of the contraction operators.
namespace elem {
PqForm wedge_dz(int i, const PqForm& a);
PqForm wedge_dzbar(int j, const PqForm& a);
PqForm contract_dz(int i, const PqForm& a);     // I_{d/dz^i}
PqForm contract_dzbar(int j, const PqForm& a);  // I_{d/dzbar^j}
// The coefficient-space adjoint (conjugate transpose) of L.
PqForm lefschetz_L_transpose(const PqForm& a);
}  // namespace elem

// Matrix of a linear map f on the basis of (p,q)-forms with `fiber` values.
template <class F>
MatrixXc operator_matrix(const ContextPtr& ctx, int p, int q, int fiber, F&& f) {
  PqForm e(ctx, p, q, fiber);
  MatrixXc m;
  for (int col = 0; col < e.dim(); ++col) {
    e.coeffs().setZero();
    e.coeffs()(col) = 1.0;
    PqForm out = f(e);
    if (col == 0) m.resize(out.dim(), e.dim());
    m.col(col) = out.coeffs();
  }
  return m;
}

}  // namespace wlab
