#pragma once

#include <optional>
#include <vector>

#include "wlab/curvature_models.hpp"
#include "wlab/exterior_algebra.hpp"
#include "wlab/riemannian.hpp"

namespace wlab {

enum class CarrierKind { Sym2, VecBundle, Bivector, Mixed };

// A form with values in a Hermitian carrier space, stored as its
// components against an orthonormal carrier basis.
template <class Form>
struct TensorValued {
  CarrierKind kind;
  std::vector<Form> components;

  int carrier_dim() const { return static_cast<int>(components.size()); }
};

using TensorValuedForm = TensorValued<PqForm>;
using RealTensorValuedForm = TensorValued<RealForm>;

double norm_squared(const TensorValuedForm& t);
double norm_squared(const RealTensorValuedForm& t);

// T_phi(v) = 2 sum_{ij} v_{ij} g^{i kbar} I_{kbar}(dz^j ^ phi) for a
// symmetric covariant v. Lands in (p+1, q-1); the zero form at the clamped
// bidegree when q = 0 or p = n.
PqForm t_apply(const PqForm& phi, const MatrixXc& v);
// Components against the orthonormal Sym^2 basis of sym2_basis().
TensorValuedForm t_operator(const PqForm& phi);
// Components against e_a (x) f_b (unitary frames of T^{1,0} and E).
TensorValuedForm s_operator(const PqForm& phi);
// Coordinate components Y^{i jbar}, row-major in (i, j).
std::vector<PqForm> y_coordinate_components(const PqForm& phi);
// Components against e_a (x) conj(e_b).
TensorValuedForm y_operator(const PqForm& phi);
// sup |sum_ab xi_ab Y^{ab}|^2 over unit xi in the unitary frame: the top
// eigenvalue of the Gram matrix of y_operator(phi).
double y_direction_norm_squared(const PqForm& phi);

// sum v^{ij} dx^i ^ I_j omega for antisymmetric v.
RealForm t_riem(const RealForm& omega, const Eigen::MatrixXd& v);
// Components against e_i ^ e_j, i < j.
RealTensorValuedForm riem_t_operator(const RealForm& omega);

// <(R (x) Id) T_phi, T_psi>
cplx b_form(const PqForm& phi, const PqForm& psi, const KaehlerCurvature& rc);
// <(R^E (x) Id) S_phi, S_phi>
cplx bundle_s_pairing(const PqForm& phi, const BundleCurvature& re);
cplx curvature_action(const PqForm& phi, const KaehlerCurvature& rc,
                      const BundleCurvature* re = nullptr);
double riem_curvature_pairing(const RealForm& omega, const RiemCurvature& rr);
// <(F (x) Id) T_omega, T_omega> in the orthonormal bivector basis.
double riem_t_pairing(const RealForm& omega, const RiemCurvature& rr);
// <(R_red (x) Id) Y_phi, Y_phi> through the orthonormal frame.
double y_curvature_pairing(const PqForm& phi, const KaehlerCurvature& rc);
// The same term as a coordinate double sum R_{i jbar k lbar} <Y^{i jbar}, Y^{l kbar}>.
cplx y_curvature_action(const PqForm& phi, const KaehlerCurvature& rc);

double norm_t_identity_defect(const PqForm& phi);

}  // namespace wlab
