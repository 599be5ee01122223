#pragma once

#include <optional>
#include <vector>

#include "wlab/exterior_algebra.hpp"

namespace wlab {

struct PrimitiveDecomposition {
  // parts[k] is primitive of bidegree (p-k, q-k).
  std::vector<PqForm> parts;
};

// prod_{i=1..k} i (n - p - q - i + 1)
double c_constant(int n, int p, int q, int k);

// L^k a; nullopt when the result would exceed degree n (it is zero there).
std::optional<PqForm> lefschetz_power(const PqForm& a, int k);
PqForm lefschetz_dual_power(const PqForm& a, int k);

// Orthonormal (coefficient-space) basis of ker Lambda at (p, q), as columns.
MatrixXc primitive_basis(const ContextPtr& ctx, int p, int q, int fiber = 1);

bool is_primitive(const PqForm& psi, double tol = 1e-9);

PrimitiveDecomposition primitive_decompose(const PqForm& phi);
PqForm reconstruct(const PrimitiveDecomposition& d, const PqForm& like);

double lambda_l_power_defect(const PqForm& psi, int k);
double l_power_norm_defect(const PqForm& eta, int k);

// If phi = L^k psi with psi primitive, returns psi; otherwise nullopt.
std::optional<PqForm> primitive_root(const PqForm& phi, int k, double tol = 1e-8);

}  // namespace wlab
