#pragma once

// Decision procedures for positivity of B^{p,q} and the resulting vanishing
// statements, evaluated in exact rational arithmetic.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "wlab/curvature_models.hpp"

namespace wlab {

enum class Positivity { Positive, Semipositive, NoClaim };
enum class Verdict { Vanishes, EqualsC, NoClaim };

std::string to_string(Positivity p);
std::string to_string(Verdict v);

struct PositivityClass {
  Positivity kind = Positivity::NoClaim;
  std::string rule;                               // empty for no-claim
  std::optional<std::string> equality_condition;  // "Phi = L^q psi" for semipositive
};

struct VanishingVerdict {
  Verdict kind = Verdict::NoClaim;
  std::string rule;
  // True when the clause fired at a dual bidegree (Serre duality and/or
  // conjugation); evaluated_at is that bidegree.
  bool used_serre_duality = false;
  std::pair<int, int> evaluated_at{-1, -1};

  bool operator==(const VanishingVerdict&) const = default;
  std::string to_json() const;
};

PositivityClass b_positivity_class(int n, int p, int q, int m);
VanishingVerdict vanishing_hodge(int n, int p, int q, int m);
VanishingVerdict vanishing_bundle(int n, int p, int q, int m, bool nakano_positive);
VanishingVerdict reduced_vanishing(int n, int p, int q, int m);

struct HodgeDiamond {
  int n = 0;
  std::optional<int> m;
  // cells[p][q]
  std::vector<std::vector<VanishingVerdict>> cells;

  bool is_projective_space_pattern() const;
  std::string to_text() const;
  std::string to_json() const;
};

// m = nullopt means no positivity level: every cell is no-claim.
HodgeDiamond hodge_diamond_report(int n, std::optional<int> m);
HodgeDiamond hodge_diamond_report(int n, const Spectrum& s);

}  // namespace wlab
