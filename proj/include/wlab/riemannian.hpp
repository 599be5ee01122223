#pragma once

// Real exterior algebra over Euclidean R^d and the Betti-number predicate.

#include <string>

#include <Eigen/Dense>

#include "wlab/combinatorics.hpp"
#include "wlab/linalg.hpp"

namespace wlab {

class RealForm {
 public:
  RealForm(int d, int k);

  static RealForm basis(int d, const MultiIndex& I);
  static RealForm random(int d, int k, Rng& rng);

  int d() const { return d_; }
  int k() const { return k_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const Eigen::VectorXd& coeffs() const { return c_; }
  Eigen::VectorXd& coeffs() { return c_; }

  double coeff(const MultiIndex& I) const;
  void set_coeff(const MultiIndex& I, double v);

  RealForm& operator+=(const RealForm& o);
  RealForm& operator-=(const RealForm& o);
  RealForm& operator*=(double s);

 private:
  void check_compatible(const RealForm& o) const;
  int d_, k_;
  Eigen::VectorXd c_;
};

RealForm operator+(RealForm a, const RealForm& b);
RealForm operator-(RealForm a, const RealForm& b);
RealForm operator*(double s, RealForm a);

RealForm real_wedge(const RealForm& a, const RealForm& b);
// Interior product with the vector x (components in the orthonormal frame).
RealForm real_contract(const Eigen::VectorXd& x, const RealForm& a);
double real_inner(const RealForm& a, const RealForm& b);
double real_norm_squared(const RealForm& a);

namespace elem {
RealForm wedge_dx(int i, const RealForm& a);  // 0-based
RealForm contract_e(int i, const RealForm& a);
}  // namespace elem

enum class BettiVerdict { Vanishes, ParallelOnly, NoClaim };
std::string to_string(BettiVerdict v);

// Curvature operator p_level-positive (strict) or p_level-semipositive.
BettiVerdict betti_prediction(int d, int k, int p_level, bool strict);

}  // namespace wlab
