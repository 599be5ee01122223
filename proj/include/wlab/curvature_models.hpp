#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlab/exterior_algebra.hpp"

namespace wlab {

// A symmetry relation failed; `indices` are 1-based.
class SymmetryError : public std::invalid_argument {
 public:
  SymmetryError(const std::string& relation, std::array<int, 4> indices, double deviation);
  const std::array<int, 4>& indices() const { return indices_; }
  const std::string& relation() const { return relation_; }
  double deviation() const { return deviation_; }

 private:
  std::string relation_;
  std::array<int, 4> indices_;
  double deviation_;
};

// R_{i jbar k lbar}, stored densely with 0-based indices.
class KaehlerCurvature {
 public:
  explicit KaehlerCurvature(ContextPtr ctx);

  const ContextPtr& context_ptr() const { return ctx_; }
  const AlgebraContext& context() const { return *ctx_; }
  int n() const { return n_; }

  cplx& operator()(int i, int j, int k, int l) { return data_[((i * n_ + j) * n_ + k) * n_ + l]; }
  cplx operator()(int i, int j, int k, int l) const { return data_[((i * n_ + j) * n_ + k) * n_ + l]; }
  const std::vector<cplx>& data() const { return data_; }

  // Largest violation of the Kaehler symmetries and reality condition.
  double symmetry_defect() const;
  // Throws SymmetryError naming the first offending quadruple.
  void validate(double tol = 1e-10) const;

 private:
  ContextPtr ctx_;
  int n_;
  std::vector<cplx> data_;
};

// R^E_{i jbar alpha betabar}.
class BundleCurvature {
 public:
  explicit BundleCurvature(ContextPtr ctx);

  const ContextPtr& context_ptr() const { return ctx_; }
  const AlgebraContext& context() const { return *ctx_; }
  int n() const { return n_; }
  int r() const { return r_; }

  cplx& operator()(int i, int j, int a, int b) { return data_[((i * n_ + j) * r_ + a) * r_ + b]; }
  cplx operator()(int i, int j, int a, int b) const { return data_[((i * n_ + j) * r_ + a) * r_ + b]; }

  double symmetry_defect() const;
  void validate(double tol = 1e-10) const;

 private:
  ContextPtr ctx_;
  int n_, r_;
  std::vector<cplx> data_;
};

// Real algebraic curvature tensor on Euclidean R^d. Sign convention:
// R(X,Y,Y,X) is the sectional curvature, so the round sphere has
// R_{ijkl} = delta_il delta_jk - delta_ik delta_jl.
class RiemCurvature {
 public:
  explicit RiemCurvature(int d);

  int d() const { return d_; }
  double& operator()(int i, int j, int k, int l) { return data_[((i * d_ + j) * d_ + k) * d_ + l]; }
  double operator()(int i, int j, int k, int l) const { return data_[((i * d_ + j) * d_ + k) * d_ + l]; }

  double symmetry_defect() const;
  double bianchi_defect() const;
  void validate(double tol = 1e-10) const;

 private:
  int d_;
  std::vector<double> data_;
};

// Projects an arbitrary 4-tensor onto the algebraic curvature tensors.
RiemCurvature bianchi_project(const RiemCurvature& r);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending

  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);
  static Spectrum of(const MatrixXc& hermitian);
  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Orthonormal basis of Sym^2 T^{1,0}: contravariant components u^{ik}
// built from the unitary frame, ordered by pairs a <= b.
std::vector<MatrixXc> sym2_basis(const AlgebraContext& ctx);
// Metric duals w_{ik} = g_{i jbar} g_{k lbar} conj(u^{jl}), so that
// sum_ik w_{ik} v^{ik} = <v, u>.
std::vector<MatrixXc> sym2_dual_basis(const AlgebraContext& ctx);

MatrixXc sym_curv_operator(const KaehlerCurvature& rc);
MatrixXc reduced_curv_operator(const KaehlerCurvature& rc);
MatrixXc bundle_curv_operator(const BundleCurvature& re);
Eigen::MatrixXd riem_curv_operator(const RiemCurvature& rr);

// Inverse of sym_curv_operator: the unique Kaehler tensor with the given
// matrix in the orthonormal Sym^2 basis of ctx.
KaehlerCurvature kaehler_from_sym_operator(const ContextPtr& ctx, const MatrixXc& op);

KaehlerCurvature model_fubini_study(int n);
KaehlerCurvature model_fubini_study(const ContextPtr& ctx);
Spectrum model_hyperquadric(int n);
RiemCurvature model_sphere(int d);

// sum_a s_a S^a_{ik} conj(S^a_{jl}) with random complex symmetric S^a.
KaehlerCurvature random_kaehler(const ContextPtr& ctx, Rng& rng, const std::vector<int>& signs);
KaehlerCurvature random_kaehler(int n, std::uint64_t seed, const std::vector<int>& signs);
// sum_a s_a P^a_{i alpha} conj(P^a_{j beta}) + shift * g_{i jbar} h_{alpha betabar}.
BundleCurvature random_bundle(const ContextPtr& ctx, Rng& rng, const std::vector<int>& signs,
                              double shift = 0.0);
// Random combination of Kulkarni-Nomizu squares.
RiemCurvature random_riemannian(int d, Rng& rng);
RiemCurvature random_riemannian(int d, std::uint64_t seed);

// Smallest m whose first m eigenvalues have positive sum.
std::optional<int> m_positivity_level(const Spectrum& s);

bool partial_trace_check(const MatrixXc& a, const MatrixXc& frame, int k);

}  // namespace wlab
