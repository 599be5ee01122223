#include "wlab/predictor.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace wlab {

namespace {

using Q = boost::rational<long long>;

void check_common(int n, int p, int q, int m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p < 0 || p > n || q < 0 || q > n) throw std::invalid_argument("bidegree out of range");
  if (m < 1) throw std::invalid_argument("m must be positive");
}

// m <= num / den
bool at_most(int m, long long num, long long den) { return Q(m) <= Q(num, den); }

// (n-p+1)(p+q) / (2(p+1))
bool below_c0(int n, int p, int q, int m) {
  return at_most(m, static_cast<long long>(n - p + 1) * (p + q), 2LL * (p + 1));
}

}  // namespace

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::Positive: return "positive";
    case Positivity::Semipositive: return "semipositive";
    case Positivity::NoClaim: return "no-claim";
  }
  return "no-claim";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Vanishes: return "vanishes";
    case Verdict::EqualsC: return "equals-C";
    case Verdict::NoClaim: return "no-claim";
  }
  return "no-claim";
}

PositivityClass b_positivity_class(int n, int p, int q, int m) {
  check_common(n, p, q, m);
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  PositivityClass out;
  if (q >= p + 2 && below_c0(n, p, q, m)) {
    out = {Positivity::Positive, "positive:q>=p+2", std::nullopt};
  } else if (q == p + 1 && 2 * p <= n && at_most(m, n + 1, 2)) {
    out = {Positivity::Positive, "positive:q=p+1,p<=n/2", std::nullopt};
  } else if (q == p + 1 && 2 * p > n && p < n &&
             at_most(m, static_cast<long long>(n - p + 1) * (2 * p + 1), 2LL * (p + 1))) {
    out = {Positivity::Positive, "positive:q=p+1,p>n/2", std::nullopt};
  } else if (q <= p && 2 * p <= n && at_most(m, n - p + q, 2)) {
    out = {Positivity::Semipositive, "semipositive:q<=p<=n/2", std::nullopt};
  } else if (q <= p && 2 * p > n && p < n && below_c0(n, p, q, m)) {
    out = {Positivity::Semipositive, "semipositive:q<=p,n/2<p<n", std::nullopt};
  }
  if (out.kind == Positivity::Semipositive) out.equality_condition = "Phi = L^q psi";
  return out;
}

VanishingVerdict vanishing_hodge(int n, int p, int q, int m) {
  check_common(n, p, q, m);
  VanishingVerdict v;
  v.evaluated_at = {p, q};
  if (p == q) {
    if (at_most(m, n, 2)) v = {Verdict::EqualsC, "hodge:diagonal,m<=n/2", false, {p, q}};
    return v;
  }
  // Orbit under Serre duality and conjugation; the clauses need q > p, so
  // two members qualify. The one reached without any duality is tried first.
  std::array<std::pair<int, int>, 2> members =
      q > p ? std::array<std::pair<int, int>, 2>{{{p, q}, {n - q, n - p}}}
            : std::array<std::pair<int, int>, 2>{{{n - p, n - q}, {q, p}}};
  for (auto [pp, qq] : members) {
    const char* rule = nullptr;
    if (qq >= pp + 2 && below_c0(n, pp, qq, m))
      rule = "hodge:q>=p+2";
    else if (qq == pp + 1 && 2 * pp <= n && at_most(m, n + 1, 2))  // the member with p <= n/2
      rule = "hodge:q=p+1";
    if (rule) return {Verdict::Vanishes, rule, pp != p || qq != q, {pp, qq}};
  }
  return v;
}

VanishingVerdict vanishing_bundle(int n, int p, int q, int m, bool nakano_positive) {
  check_common(n, p, q, m);
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  VanishingVerdict v;
  v.evaluated_at = {p, q};
  if (!nakano_positive) return v;
  if (p == n) return {Verdict::Vanishes, "bundle:p=n", false, {p, q}};
  const bool region2 = q <= p + 1 && 2 * p <= n;
  if (region2) {
    if (at_most(m, n - p + q, 2)) v = {Verdict::Vanishes, "bundle:q<=p+1,p<=n/2", false, {p, q}};
    return v;
  }
  if (below_c0(n, p, q, m)) v = {Verdict::Vanishes, "bundle:otherwise", false, {p, q}};
  return v;
}

VanishingVerdict reduced_vanishing(int n, int p, int q, int m) {
  check_common(n, p, q, m);
  VanishingVerdict v;
  v.evaluated_at = {p, q};
  if (p != q) {
    // m <= n + 1 - (p^2 + q^2)/(p + q)
    Q bound = Q(n + 1) - Q(static_cast<long long>(p) * p + static_cast<long long>(q) * q, p + q);
    if (Q(m) <= bound) v = {Verdict::Vanishes, "reduced:p!=q", false, {p, q}};
  } else if (m <= n + 1 - p) {
    v = {Verdict::EqualsC, "reduced:p=q", false, {p, q}};
  }
  return v;
}

bool HodgeDiamond::is_projective_space_pattern() const {
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Verdict want = p == q ? Verdict::EqualsC : Verdict::Vanishes;
      if (cells[p][q].kind != want) return false;
    }
  return true;
}

std::string HodgeDiamond::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " m=" << (m ? std::to_string(*m) : std::string("none")) << "\n";
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const VanishingVerdict& v = cells[p][q];
      os << (q ? " " : "")
         << (v.kind == Verdict::Vanishes ? "0" : v.kind == Verdict::EqualsC ? "C" : "?");
    }
    os << "\n";
  }
  return os.str();
}

std::string VanishingVerdict::to_json() const {
  return "{\"verdict\":\"" + to_string(kind) + "\",\"rule\":\"" + rule +
         "\",\"used_serre_duality\":" + (used_serre_duality ? "true" : "false") + ",\"evaluated_at\":[" +
         std::to_string(evaluated_at.first) + "," + std::to_string(evaluated_at.second) + "]}";
}

std::string HodgeDiamond::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << (m ? std::to_string(*m) : std::string("null")) << ",\"cells\":[";
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const std::string v = cells[p][q].to_json();
      os << ((p || q) ? "," : "") << "{\"p\":" << p << ",\"q\":" << q << "," << v.substr(1);
    }
  os << "]}";
  return os.str();
}

HodgeDiamond hodge_diamond_report(int n, std::optional<int> m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  HodgeDiamond d;
  d.n = n;
  d.m = m;
  d.cells.assign(n + 1, std::vector<VanishingVerdict>(n + 1));
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) d.cells[p][q].evaluated_at = {p, q};
  if (!m) return d;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) d.cells[p][q] = vanishing_hodge(n, p, q, *m);
  return d;
}

HodgeDiamond hodge_diamond_report(int n, const Spectrum& s) {
  return hodge_diamond_report(n, m_positivity_level(s));
}

}  // namespace wlab
