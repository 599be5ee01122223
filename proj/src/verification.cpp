#include "wlab/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wlab/compound.hpp"
#include "wlab/contraction_operators.hpp"
#include "wlab/curvature_models.hpp"
#include "wlab/lefschetz.hpp"
#include "wlab/predictor.hpp"
#include "wlab/riemannian.hpp"
#include "wlab/spectral_bounds.hpp"

namespace wlab {

void RunConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1e-3)) throw std::invalid_argument("tolerance must lie in (0, 1e-3)");
  if (identity_samples < 1 || inequality_samples < 1) throw std::invalid_argument("sample counts must be positive");
  if (max_n < 1 || max_n > 6) throw std::invalid_argument("n cap must lie in [1, 6]");
  if (max_d < 2 || max_d > 8) throw std::invalid_argument("d cap must lie in [2, 8]");
  if (max_r < 1 || max_r > 4) throw std::invalid_argument("r cap must lie in [1, 4]");
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t stream_id(std::initializer_list<int> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (int x : parts) h = splitmix64(h ^ static_cast<std::uint64_t>(x + 1));
  return h;
}

std::vector<int> random_signs(Rng& rng, int count) {
  std::vector<int> s(count);
  for (int& x : s) x = (rng() & 1) ? 1 : -1;
  return s;
}

// Residual of an inequality lhs <= rhs, scaled like relative_residual.
double excess(double lhs, double rhs) {
  return std::max(0.0, lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double relative_gap(double a, double b) {
  double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Identity metrics plus two random ones; each suite reuses these so the Gram
// caches stay warm.
std::vector<ContextPtr> context_pool(int n, int r, std::uint64_t seed, int tag) {
  std::vector<ContextPtr> pool{AlgebraContext::identity(n, r)};
  Rng rng = derived_rng(seed, stream_id({tag, n, r}), 0);
  for (int i = 0; i < 2; ++i) {
    MatrixXc g = random_metric(n, rng);
    MatrixXc h = r == 1 ? MatrixXc::Identity(1, 1) : random_metric(r, rng);
    pool.push_back(AlgebraContext::create(n, g, r, h));
  }
  return pool;
}

class Pools {
 public:
  Pools(std::uint64_t seed, int tag) : seed_(seed), tag_(tag) {}
  const std::vector<ContextPtr>& get(int n, int r) {
    auto& slot = pools_[{n, r}];
    if (slot.empty()) slot = context_pool(n, r, seed_, tag_);
    return slot;
  }
  // Read-only lookup, safe inside parallel sweeps once get() has run.
  const std::vector<ContextPtr>& at(int n, int r) const { return pools_.at({n, r}); }

 private:
  std::uint64_t seed_;
  int tag_;
  std::map<std::pair<int, int>, std::vector<ContextPtr>> pools_;
};

// Primitive bases, computed once per (context, bidegree) before a sweep.
class PrimitiveCache {
 public:
  const MatrixXc& get(const ContextPtr& ctx, int p, int q, int fiber) {
    auto key = std::make_tuple(ctx.get(), p, q, fiber);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, primitive_basis(ctx, p, q, fiber)).first;
    return it->second;
  }
  // Only valid after get() populated the entry.
  const MatrixXc& at(const ContextPtr& ctx, int p, int q, int fiber) const {
    return cache_.at(std::make_tuple(ctx.get(), p, q, fiber));
  }

 private:
  std::map<std::tuple<const AlgebraContext*, int, int, int>, MatrixXc> cache_;
};

PqForm random_primitive(const ContextPtr& ctx, const MatrixXc& basis, int p, int q, int fiber, Rng& rng) {
  PqForm psi(ctx, p, q, fiber);
  if (basis.cols() > 0) psi.coeffs() = basis * random_complex_vector(static_cast<int>(basis.cols()), rng);
  return psi;
}

struct Timer {
  Clock::time_point start = Clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
};

VerificationReport finish(const std::string& name, const RunConfig& cfg, double tol,
                          std::vector<std::pair<std::string, ParamValue>> params, const SweepResult& r,
                          const Timer& t) {
  VerificationReport rep;
  rep.suite = name;
  params.emplace_back("tolerance", tol);
  rep.params = std::move(params);
  rep.samples = r.samples;
  rep.seed = cfg.seed;
  rep.max_residual = r.max_residual;
  rep.violations = r.violations;
  rep.tolerance = tol;
  rep.runtime_ms = cfg.timing ? t.ms() : 0;
  return rep;
}

// A flat list of tasks, each repeated `per_task` times.
template <class Task, class F>
SweepResult task_sweep(const RunConfig& cfg, const std::vector<Task>& tasks, long long per_task, double tol, F&& f) {
  return sweep(cfg, static_cast<long long>(tasks.size()) * per_task, tol, [&](long long i) {
    return f(tasks[static_cast<std::size_t>(i / per_task)], i % per_task);
  });
}

struct NPQ {
  int n, r, p, q, k;
};

std::vector<NPQ> all_bidegrees(int max_n, int max_r) {
  std::vector<NPQ> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= max_r; ++r)
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) out.push_back({n, r, p, q, 0});
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport suite_fs_golden(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-12;
  std::vector<std::pair<int, bool>> tasks;
  for (int n = 1; n <= 6; ++n) tasks.push_back({n, false});
  for (int n = 1; n <= cfg.max_n; ++n) tasks.push_back({n, true});
  auto r = task_sweep(cfg, tasks, 1, tol, [&](const std::pair<int, bool>& task, long long) {
    auto [n, metric] = task;
    ContextPtr ctx = AlgebraContext::identity(n);
    if (metric) {
      Rng rng = derived_rng(cfg.seed, stream_id({1, n}), 0);
      ctx = AlgebraContext::create(n, random_metric(n, rng));
    }
    MatrixXc m = sym_curv_operator(model_fubini_study(ctx));
    const int big = n * (n + 1) / 2;
    return SampleResult{(m - 2.0 * MatrixXc::Identity(big, big)).cwiseAbs().maxCoeff(), false};
  });
  return finish("fs-golden", cfg, tol, {{"n", "1..6"}, {"n_metric", "1.." + std::to_string(cfg.max_n)}}, r, t);
}

VerificationReport suite_hyperquadric(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-12;
  std::vector<int> tasks;
  for (int n = 2; n <= 8; ++n) tasks.push_back(n);
  auto r = task_sweep(cfg, tasks, 1, tol, [&](int n, long long) {
    Spectrum s = model_hyperquadric(n);
    SampleResult out;
    if (s.dim() != n * (n + 1) / 2) return SampleResult{INFINITY, true};
    for (int i = 0; i < s.dim(); ++i)
      out.residual = std::max(out.residual, std::abs(s.eigenvalues[i] - (i == 0 ? 2.0 - n : 2.0)));
    auto m = m_positivity_level(s);
    out.violation = !m || *m != n / 2 + 1;
    return out;
  });
  return finish("hyperquadric", cfg, tol, {{"n", "2..8"}}, r, t);
}

VerificationReport suite_bochner_kodaira(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 3);
  auto tasks = all_bidegrees(cfg.max_n, cfg.max_r);
  for (auto& tk : tasks) pools.get(tk.n, tk.r);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({3, tk.n, tk.r, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, tk.r)[s % 3];
    KaehlerCurvature rc = random_kaehler(ctx, rng, random_signs(rng, 3));
    BundleCurvature re = random_bundle(ctx, rng, random_signs(rng, 3));
    PqForm phi = PqForm::random(ctx, tk.p, tk.q, tk.r, rng);
    cplx lhs = curvature_action(phi, rc, &re);
    cplx rhs = 0.25 * b_form(phi, phi, rc) + bundle_s_pairing(phi, re);
    return SampleResult{relative_residual(lhs, rhs), false};
  });
  return finish("bochner-kodaira", cfg, tol,
                {{"n_max", (long long)cfg.max_n}, {"r_max", (long long)cfg.max_r}, {"bidegrees", "all"}}, r, t);
}

VerificationReport suite_norm_identities(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 4);
  PrimitiveCache prim;
  auto tasks = all_bidegrees(cfg.max_n, cfg.max_r);
  // Candidate k for the primitive-power identity: primitives at (p-k, q-k) exist.
  auto ks = [](const NPQ& tk) {
    std::vector<int> out;
    for (int k = 0; k <= std::min(tk.p, tk.q); ++k)
      if (tk.p + tk.q - 2 * k <= tk.n) out.push_back(k);
    return out;
  };
  for (auto& tk : tasks)
    for (const ContextPtr& ctx : pools.get(tk.n, tk.r))
      for (int k : ks(tk)) prim.get(ctx, tk.p - k, tk.q - k, tk.r);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({4, tk.n, tk.r, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, tk.r)[s % 3];
    const int n = tk.n, p = tk.p, q = tk.q;
    PqForm phi = PqForm::random(ctx, p, q, tk.r, rng);
    const double phi2 = norm_squared(phi);
    double res = relative_residual(norm_squared(s_operator(phi)), q * phi2);
    double t2 = norm_squared(t_operator(phi));
    res = std::max(res, norm_t_identity_defect(phi) / std::max({1.0, t2, phi2}));
    std::vector<int> kk = ks(tk);
    if (!kk.empty()) {
      int k = kk[s % kk.size()];
      PqForm psi = random_primitive(ctx, prim.at(ctx, p - k, q - k, tk.r), p - k, q - k, tk.r, rng);
      PqForm lk = *lefschetz_power(psi, k);
      double lhs = norm_squared(t_operator(lk));
      double rhs = 2.0 * (q - k) * (n - p + k + 1) * norm_squared(lk);
      res = std::max(res, relative_residual(lhs, rhs));
    }
    return SampleResult{res, false};
  });
  return finish("norm-identities", cfg, tol,
                {{"n_max", (long long)cfg.max_n}, {"r_max", (long long)cfg.max_r}, {"bidegrees", "all"}}, r, t);
}

VerificationReport suite_t_inequality(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 5);
  PrimitiveCache prim;
  std::vector<NPQ> plain, improved;
  for (int n = 1; n <= cfg.max_n; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        plain.push_back({n, 1, p, q, 0});
        for (int k = 0; k <= std::min(p, q); ++k)
          if (p + q != 2 * k && p + q - 2 * k <= n) improved.push_back({n, 1, p, q, k});
      }
  for (auto& tk : improved)
    for (const ContextPtr& ctx : pools.get(tk.n, 1)) prim.get(ctx, tk.p - tk.k, tk.q - tk.k, 1);
  auto sample = [&](const NPQ& tk, long long s, bool prim_input) {
    Rng rng = derived_rng(cfg.seed, stream_id({5, tk.n, tk.p, tk.q, tk.k, prim_input}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    PqForm phi(ctx, tk.p, tk.q);
    std::optional<int> k;
    if (prim_input) {
      k = tk.k;
      PqForm psi = random_primitive(ctx, prim.at(ctx, tk.p - tk.k, tk.q - tk.k, 1), tk.p - tk.k, tk.q - tk.k, 1, rng);
      phi = *lefschetz_power(psi, tk.k);
    } else {
      phi = PqForm::random(ctx, tk.p, tk.q, 1, rng);
    }
    MatrixXc v = random_symmetric_complex(tk.n, rng);
    double lhs = norm_squared(t_apply(phi, v));
    double rhs = t_norm_bound_factor(tk.p, tk.q, k) * sym_tensor_norm_squared(*ctx, v) * norm_squared(phi);
    return SampleResult{excess(lhs, rhs), false};
  };
  auto r = task_sweep(cfg, plain, cfg.inequality_samples, tol,
                      [&](const NPQ& tk, long long s) { return sample(tk, s, false); });
  const long long per_k = std::max(1, cfg.inequality_samples / 10);
  r.merge(task_sweep(cfg, improved, per_k, tol, [&](const NPQ& tk, long long s) { return sample(tk, s, true); }));
  return finish("t-inequality", cfg, tol,
                {{"n_max", (long long)cfg.max_n}, {"samples_per_bidegree", (long long)cfg.inequality_samples},
                 {"samples_per_primitive_degree", per_k}},
                r, t);
}

VerificationReport suite_lefschetz(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 6);
  PrimitiveCache prim;
  auto tasks = all_bidegrees(cfg.max_n, 1);
  for (auto& tk : tasks)
    if (tk.p + tk.q <= tk.n)
      for (const ContextPtr& ctx : pools.get(tk.n, 1)) prim.get(ctx, tk.p, tk.q, 1);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({6, tk.n, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    const int n = tk.n, p = tk.p, q = tk.q;
    PqForm phi = PqForm::random(ctx, p, q, 1, rng);
    PrimitiveDecomposition d = primitive_decompose(phi);
    double res = norm(reconstruct(d, phi) - phi) / std::max(1.0, norm(phi));
    for (const PqForm& part : d.parts)
      if (part.p() > 0 && part.q() > 0) res = std::max(res, norm(lefschetz_dual(part)) / std::max(1.0, norm(part)));
    if (p + q <= n) {
      PqForm psi = random_primitive(ctx, prim.at(ctx, p, q, 1), p, q, 1, rng);
      for (int k = 1; p + k <= n && q + k <= n; ++k) {
        double c = c_constant(n, p, q, k);
        res = std::max(res, lambda_l_power_defect(psi, k) / std::max(1.0, std::abs(c) * norm(psi)));
        res = std::max(res, l_power_norm_defect(psi, k) / std::max(1.0, std::abs(c) * norm_squared(psi)));
      }
    }
    return SampleResult{res, false};
  });
  return finish("lefschetz", cfg, tol, {{"n_max", (long long)cfg.max_n}, {"bidegrees", "all"}}, r, t);
}

VerificationReport suite_lefschetz_bform(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-8;
  Pools pools(cfg.seed, 7);
  auto tasks = all_bidegrees(cfg.max_n, 1);
  for (auto& tk : tasks) pools.get(tk.n, 1);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({7, tk.n, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    const int n = tk.n, p = tk.p, q = tk.q;
    KaehlerCurvature rc = random_kaehler(ctx, rng, random_signs(rng, 3));
    PqForm phi = PqForm::random(ctx, p, q, 1, rng);
    PrimitiveDecomposition d = primitive_decompose(phi);
    cplx lhs = b_form(phi, phi, rc);
    cplx rhs = 0.0;
    for (int k = 0; k < static_cast<int>(d.parts.size()); ++k)
      if (p + q - 2 * k <= n) rhs += c_constant(n, p - k, q - k, k) * b_form(d.parts[k], d.parts[k], rc);
    double res = relative_residual(lhs, rhs);
    if (p >= 1 && q >= 1) {
      PqForm psi = PqForm::random(ctx, p - 1, q - 1, 1, rng);
      res = std::max(res, relative_residual(b_form(lefschetz_L(psi), phi, rc), b_form(psi, lefschetz_dual(phi), rc)));
    }
    return SampleResult{res, false};
  });
  return finish("lefschetz-bform", cfg, tol, {{"n_max", (long long)cfg.max_n}, {"bidegrees", "all"}}, r, t);
}

VerificationReport suite_norm_claim(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-8;
  const int n_max = std::min(3, cfg.max_n);
  struct Task {
    int n, p, q, p0, q0;
    const std::vector<int>* basis;
    const std::vector<int>* basis0;
  };
  std::vector<IndexPairDecomposition> decomps;
  std::map<std::tuple<int, int, int>, std::size_t> where;
  for (int n = 1; n <= n_max; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        where[{n, p, q}] = decomps.size();
        decomps.push_back(subspace_decomposition(n, p, q));
      }
  std::vector<Task> tasks;
  for (const auto& dec : decomps)
    for (const IndexPair& pr : dec.pairs) {
      if (pr.k2 == 0) continue;
      int s2 = popcount(pr.k2);
      const auto& base = decomps[where.at({dec.n, dec.p - s2, dec.q - s2})];
      for (const IndexPair& b : base.pairs)
        if (b.k2 == 0 && b.k1 == pr.k1) tasks.push_back({dec.n, dec.p, dec.q, dec.p - s2, dec.q - s2, &pr.basis, &b.basis});
    }
  std::vector<ContextPtr> ctxs;
  for (int n = 0; n <= n_max; ++n) ctxs.push_back(n ? AlgebraContext::identity(n) : nullptr);
  const long long per_task = 10;
  auto r = task_sweep(cfg, tasks, per_task, tol, [&](const Task& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({8, tk.n, tk.p, tk.q, static_cast<int>((*tk.basis)[0])}), s);
    MatrixXc v = MatrixXc::Zero(tk.n, tk.n);
    for (int i = 0; i < tk.n; ++i) v(i, i) = complex_gaussian(rng);
    double a = restricted_t_norm(ctxs[tk.n], tk.p, tk.q, *tk.basis, v);
    double b = restricted_t_norm(ctxs[tk.n], tk.p0, tk.q0, *tk.basis0, v);
    return SampleResult{relative_gap(a, b), false};
  });
  return finish("norm-claim", cfg, tol, {{"n_max", (long long)n_max}, {"v", "random diagonal"}}, r, t);
}

VerificationReport suite_riemannian_weitzenbock(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  std::vector<NPQ> tasks;
  for (int d = 2; d <= cfg.max_d; ++d)
    for (int k = 0; k <= d; ++k) tasks.push_back({d, 1, k, 0, 0});
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({9, tk.n, tk.p}), s);
    RiemCurvature rr = s == 0 ? model_sphere(tk.n) : random_riemannian(tk.n, rng);
    RealForm omega = RealForm::random(tk.n, tk.p, rng);
    return SampleResult{relative_residual(riem_curvature_pairing(omega, rr), riem_t_pairing(omega, rr)), false};
  });
  return finish("riemannian-weitzenbock", cfg, tol, {{"d_max", (long long)cfg.max_d}, {"degrees", "0..d"}}, r, t);
}

VerificationReport suite_pwe_bound(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  std::vector<NPQ> tasks;
  for (int d = 2; d <= cfg.max_d; ++d)
    for (int k = 1; k < d; ++k) tasks.push_back({d, 1, k, 0, 0});
  auto r = task_sweep(cfg, tasks, cfg.inequality_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({10, tk.n, tk.p}), s);
    const int d = tk.n, k = tk.p;
    RealForm omega = RealForm::random(d, k, rng);
    Eigen::MatrixXd v = random_antisymmetric(d, rng);
    double lhs = 4.0 * real_norm_squared(t_riem(omega, v));
    double rhs = 2.0 * std::min(k, d - k) * real_norm_squared(omega) * v.squaredNorm();
    return SampleResult{excess(lhs, rhs), false};
  });
  return finish("pwe-bound", cfg, tol, {{"d_max", (long long)cfg.max_d}, {"degrees", "1..d-1"}}, r, t);
}

VerificationReport suite_compound(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-8;
  std::vector<NPQ> tasks;
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= n; ++p) tasks.push_back({n, 1, p, 0, 0});
  const long long per = std::max(1, cfg.identity_samples / 10);
  auto r = task_sweep(cfg, tasks, per, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({11, tk.n, tk.p}), s);
    MatrixXc a = random_hermitian(tk.n, rng);
    Eigen::VectorXd ev = hermitian_eigenvalues(a);
    Eigen::VectorXd cev = hermitian_eigenvalues(compound_matrix<cplx>(a, tk.p));
    const SubsetBasis& b = subset_basis(tk.n, tk.p);
    std::vector<double> sums;
    for (int i = 0; i < b.size(); ++i) {
      double x = 0.0;
      for (int j = 0; j < tk.n; ++j)
        if (b.mask(i) >> j & 1u) x += ev(j);
      sums.push_back(x);
    }
    std::sort(sums.begin(), sums.end());
    if (static_cast<int>(sums.size()) != cev.size()) return SampleResult{INFINITY, true};
    double scale = std::max(1.0, cev.cwiseAbs().maxCoeff()), res = 0.0;
    for (std::size_t i = 0; i < sums.size(); ++i) res = std::max(res, std::abs(sums[i] - cev(i)) / scale);
    return SampleResult{res, false};
  });
  return finish("compound", cfg, tol, {{"n", "1..5"}, {"p", "1..n"}, {"matrices", "hermitian"}}, r, t);
}

VerificationReport suite_takagi(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-10;
  std::vector<int> tasks{1, 2, 3, 4, 5};
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](int n, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({12, n}), s);
    MatrixXc v;
    if (s % 4 == 3 && n > 1) {
      MatrixXc b = random_complex_matrix(n, n - 1, rng);
      v = b * b.transpose();
    } else {
      v = random_symmetric_complex(n, rng);
    }
    TakagiFactorization f = takagi(v);
    MatrixXc rec = f.U * f.Lambda.cast<cplx>().asDiagonal() * f.U.transpose();
    double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    double res = (rec - v).cwiseAbs().maxCoeff() / scale;
    res = std::max(res, (f.U.adjoint() * f.U - MatrixXc::Identity(n, n)).cwiseAbs().maxCoeff());
    bool ordered = true;
    for (int i = 0; i < n; ++i) {
      if (f.Lambda(i) < 0.0) ordered = false;
      if (i + 1 < n && f.Lambda(i) < f.Lambda(i + 1)) ordered = false;
    }
    return SampleResult{res, !ordered};
  });
  return finish("takagi", cfg, tol, {{"n", "1..5"}, {"rank_deficient_fraction", 0.25}}, r, t);
}

VerificationReport suite_kaehler_weitzenbock(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 13);
  auto tasks = all_bidegrees(cfg.max_n, 1);
  for (auto& tk : tasks) pools.get(tk.n, 1);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({13, tk.n, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    KaehlerCurvature rc = random_kaehler(ctx, rng, random_signs(rng, 3));
    PqForm phi = PqForm::random(ctx, tk.p, tk.q, 1, rng);
    return SampleResult{relative_residual(y_curvature_action(phi, rc), cplx(y_curvature_pairing(phi, rc))), false};
  });
  return finish("kaehler-weitzenbock", cfg, tol, {{"n_max", (long long)cfg.max_n}, {"bidegrees", "all"}}, r, t);
}

VerificationReport suite_y_bound(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 14);
  PrimitiveCache prim;
  std::vector<NPQ> tasks;
  for (int n = 1; n <= cfg.max_n; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (int k = 0; k <= std::min(p, q); ++k)
          if (p + q - 2 * k <= n) tasks.push_back({n, 1, p, q, k});
  for (auto& tk : tasks)
    for (const ContextPtr& ctx : pools.get(tk.n, 1)) prim.get(ctx, tk.p - tk.k, tk.q - tk.k, 1);
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({14, tk.n, tk.p, tk.q, tk.k}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    const int p0 = tk.p - tk.k, q0 = tk.q - tk.k;
    PqForm psi = random_primitive(ctx, prim.at(ctx, p0, q0, 1), p0, q0, 1, rng);
    PqForm phi = *lefschetz_power(psi, tk.k);
    double lhs = y_direction_norm_squared(phi);
    double rhs = double(tk.p + tk.q - 2 * tk.k) * norm_squared(phi);
    return SampleResult{excess(lhs, rhs), false};
  });
  return finish("y-bound", cfg, tol, {{"n_max", (long long)cfg.max_n}, {"inputs", "L^k primitive"}}, r, t);
}

VerificationReport suite_combinatorics(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-12;
  std::vector<NPQ> tasks;
  for (int n = 1; n <= 12; ++n)
    for (int p = 0; p < n; ++p)
      for (int q = 1; q <= n; ++q) tasks.push_back({n, 1, p, q, 0});
  auto r = task_sweep(cfg, tasks, 1, tol, [&](const NPQ& tk, long long) {
    CpqMin m = c_pq_min(tk.n, tk.p, tk.q);
    Rational best = c_pq_k(tk.n, tk.p, tk.q, 0);
    for (int k = 1; k <= std::min(tk.p, tk.q - 1); ++k) best = std::min(best, c_pq_k(tk.n, tk.p, tk.q, k));
    bool bad = m.value != best || c_pq_k(tk.n, tk.p, tk.q, m.k) != best;
    return SampleResult{0.0, bad};
  });
  return finish("combinatorics", cfg, tol, {{"n", "1..12"}, {"arithmetic", "exact"}}, r, t);
}

VerificationReport suite_predictor_table(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-12;
  // Task kinds: 0 = CP^n diamond for m <= floor(n/2) (and the FS spectrum),
  // 1 = duality symmetry and proof-route consistency at (n, m).
  struct Task {
    int kind, n, m;
  };
  std::vector<Task> tasks;
  for (int n = 2; n <= 8; ++n) {
    tasks.push_back({0, n, 0});
    for (int m = 1; m <= n / 2; ++m) tasks.push_back({0, n, m});
  }
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m) tasks.push_back({1, n, m});
  auto r = task_sweep(cfg, tasks, 1, tol, [&](const Task& tk, long long) {
    const int n = tk.n;
    if (tk.kind == 0) {
      HodgeDiamond d = tk.m == 0 ? hodge_diamond_report(n, Spectrum::of(sym_curv_operator(model_fubini_study(n))))
                                 : hodge_diamond_report(n, tk.m);
      return SampleResult{0.0, !d.is_projective_space_pattern()};
    }
    bool bad = false;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        VanishingVerdict a = vanishing_hodge(n, p, q, tk.m);
        VanishingVerdict b = vanishing_hodge(n, n - p, n - q, tk.m);
        if (a.kind != b.kind) bad = true;
        if (a.kind == Verdict::Vanishes) {
          auto [pp, qq] = a.evaluated_at;
          if (b_positivity_class(n, pp, qq, tk.m).kind != Positivity::Positive) bad = true;
        }
      }
    return SampleResult{0.0, bad};
  });
  return finish("predictor-table", cfg, tol, {{"diamond_n", "2..8"}, {"duality_n", "1..8"}, {"m", "1..n"}}, r, t);
}

// Ascending spectrum of length N whose level is exactly m: lambda_2..N in
// [1, 2] and lambda_1 chosen so that the first m eigenvalues sum to delta.
std::vector<double> surgery_spectrum(int big, int m, Rng& rng) {
  const double delta = 0.05;
  std::uniform_real_distribution<double> unif(1.0, 2.0);
  std::vector<double> lam(big);
  for (int i = 1; i < big; ++i) lam[i] = unif(rng);
  std::sort(lam.begin() + 1, lam.end());
  double head = 0.0;
  for (int i = 1; i < m; ++i) head += lam[i];
  lam[0] = delta - head;
  return lam;
}

VerificationReport suite_predictor_crosscheck(const RunConfig& cfg) {
  Timer t;
  const double tol = 1e-8;
  Pools pools(cfg.seed, 16);
  const int n_max = std::min(3, cfg.max_n);
  struct Task {
    int n, p, q, m;
    bool positive;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= n_max; ++n) {
    const int big = n * (n + 1) / 2;
    pools.get(n, 1);
    for (int p = 0; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        for (int m = 1; m <= big; ++m) {
          PositivityClass c = b_positivity_class(n, p, q, m);
          if (c.kind != Positivity::NoClaim) tasks.push_back({n, p, q, m, c.kind == Positivity::Positive});
        }
  }
  auto r = task_sweep(cfg, tasks, cfg.identity_samples, tol, [&](const Task& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({16, tk.n, tk.p, tk.q, tk.m}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    const int big = tk.n * (tk.n + 1) / 2;
    std::vector<double> lam = surgery_spectrum(big, tk.m, rng);
    MatrixXc u = random_unitary(big, rng);
    Eigen::VectorXd l = Eigen::Map<Eigen::VectorXd>(lam.data(), big);
    MatrixXc op = u * l.cast<cplx>().asDiagonal() * u.adjoint();
    KaehlerCurvature rc = kaehler_from_sym_operator(ctx, op);
    auto level = m_positivity_level(Spectrum::of(sym_curv_operator(rc)));
    PqForm phi = PqForm::random(ctx, tk.p, tk.q, 1, rng);
    const double b = b_form(phi, phi, rc).real(), phi2 = norm_squared(phi);
    SampleResult out{std::max(0.0, -b / phi2), false};
    out.violation = tk.positive ? !(b > 0.0) : b < -1e-8 * phi2;
    if (!level || *level != tk.m) out.violation = true;
    return out;
  });
  return finish("predictor-crosscheck", cfg, tol,
                {{"n_max", (long long)n_max}, {"delta", 0.05}, {"forms_per_clause_instance", (long long)cfg.identity_samples}},
                r, t);
}

VerificationReport suite_kaehler_identities(const RunConfig& cfg) {
  Timer t;
  const double tol = cfg.tolerance;
  Pools pools(cfg.seed, 17);
  auto tasks = all_bidegrees(cfg.max_n, 1);
  for (auto& tk : tasks) pools.get(tk.n, 1);
  const long long per = std::max(1, cfg.identity_samples / 10);
  auto r = task_sweep(cfg, tasks, per, tol, [&](const NPQ& tk, long long s) {
    Rng rng = derived_rng(cfg.seed, stream_id({17, tk.n, tk.p, tk.q}), s);
    const ContextPtr& ctx = pools.at(tk.n, 1)[s % 3];
    const int n = tk.n, p = tk.p, q = tk.q;
    PqForm eta = PqForm::random(ctx, p, q, 1, rng);
    MatrixXc v = random_symmetric_complex(n, rng);
    const double scale = std::max(1.0, norm(eta));
    double res = norm(commutator_defect(eta)) / scale;
    if (q >= 1 && p + 2 <= n && q + 1 <= n)
      res = std::max(res, norm(lefschetz_L(t_apply(eta, v)) - t_apply(lefschetz_L(eta), v)) / scale);
    if (p >= 1 && q >= 2 && p + 1 <= n)
      res = std::max(res, norm(lefschetz_dual(t_apply(eta, v)) - t_apply(lefschetz_dual(eta), v)) / scale);
    if (p + 1 <= n && q + 1 <= n) {
      PqForm beta = PqForm::random(ctx, p + 1, q + 1, 1, rng);
      res = std::max(res, relative_residual(inner_product(lefschetz_L(eta), beta), inner_product(eta, lefschetz_dual(beta))));
    }
    return SampleResult{res, false};
  });
  return finish("kaehler-identities", cfg, tol, {{"n_max", (long long)cfg.max_n}, {"bidegrees", "all"}}, r, t);
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list{
      {"fs-golden", "Fubini-Study symmetrized operator equals 2 Id", suite_fs_golden},
      {"hyperquadric", "hyperquadric spectrum and positivity level", suite_hyperquadric},
      {"bochner-kodaira", "curvature action equals B/4 plus the bundle term", suite_bochner_kodaira},
      {"norm-identities", "norms of S and T", suite_norm_identities},
      {"t-inequality", "operator-norm bounds for T", suite_t_inequality},
      {"lefschetz", "primitive decomposition and Lefschetz constants", suite_lefschetz},
      {"lefschetz-bform", "B splits along the primitive decomposition", suite_lefschetz_bform},
      {"norm-claim", "restricted T norms on index-pair subspaces", suite_norm_claim},
      {"riemannian-weitzenbock", "Weitzenboeck curvature term on real forms", suite_riemannian_weitzenbock},
      {"pwe-bound", "norm bound for the real T operator", suite_pwe_bound},
      {"compound", "compound matrix spectrum additivity", suite_compound},
      {"takagi", "Takagi factorization reconstruction", suite_takagi},
      {"kaehler-weitzenbock", "Y curvature term through both code paths", suite_kaehler_weitzenbock},
      {"y-bound", "norm bound for Y on L^k primitive forms", suite_y_bound},
      {"combinatorics", "closed-form minimum of C_pq^k", suite_combinatorics},
      {"predictor-table", "Hodge diamond, duality symmetry, proof-route consistency", suite_predictor_table},
      {"predictor-crosscheck", "B sign on spectral-surgery curvatures", suite_predictor_crosscheck},
      {"kaehler-identities", "Kaehler identities and commutation of L, Lambda with T", suite_kaehler_identities},
  };
  return list;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteInfo& s : suites()) out.push_back(s.name);
  return out;
}

bool has_suite(const std::string& name) {
  for (const SuiteInfo& s : suites())
    if (s.name == name) return true;
  return false;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  for (const SuiteInfo& s : suites())
    if (s.name == name) return s.run(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace wlab
