#pragma once

// Randomized verification suites and their JSON-lines reports.

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wlab {

struct RunConfig {
  double tolerance = 1e-9;
  int identity_samples = 1000;
  int inequality_samples = 10000;
  std::uint64_t seed = 42;
  int max_n = 4;
  int max_d = 5;
  int max_r = 2;
  bool parallel = true;
  bool timing = true;

  // Throws std::invalid_argument.
  void validate() const;
};

using ParamValue = std::variant<long long, double, std::string>;

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, ParamValue>> params;
  long long samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  long long violations = 0;
  double tolerance = 0.0;
  long long runtime_ms = 0;

  bool passed() const { return violations == 0 && max_residual < tolerance; }
  // One line of JSON, numbers at 17 significant digits.
  std::string to_json() const;
};

// ---- sweeps ---------------------------------------------------------------

struct SampleResult {
  double residual = 0.0;
  bool violation = false;
};

struct SweepResult {
  long long samples = 0;
  double max_residual = 0.0;
  long long violations = 0;

  void add(const SampleResult& s, double tol) {
    ++samples;
    bool bad = s.violation || !(s.residual < tol);
    if (bad) ++violations;
    // NaN residuals are recorded as infinite so that they cannot pass.
    double r = std::isnan(s.residual) ? INFINITY : s.residual;
    if (r > max_residual) max_residual = r;
  }
  void merge(const SweepResult& o) {
    samples += o.samples;
    violations += o.violations;
    if (o.max_residual > max_residual) max_residual = o.max_residual;
  }
  bool operator==(const SweepResult&) const = default;
};

// f(index) -> SampleResult. Each sample must derive its randomness from its
// index alone; the reduction runs in index order, so both variants agree bit
// for bit.
template <class F>
SweepResult sweep_serial(long long count, double tol, F&& f) {
  SweepResult out;
  for (long long i = 0; i < count; ++i) out.add(f(i), tol);
  return out;
}

template <class F>
SweepResult sweep_parallel(long long count, double tol, F&& f) {
  std::vector<SampleResult> results(static_cast<std::size_t>(count));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = f(i);
    } catch (...) {
#pragma omp critical(wlab_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  SweepResult out;
  for (const SampleResult& r : results) out.add(r, tol);
  return out;
}

template <class F>
SweepResult sweep(const RunConfig& cfg, long long count, double tol, F&& f) {
  return cfg.parallel ? sweep_parallel(count, tol, f) : sweep_serial(count, tol, f);
}

// ---- suites ---------------------------------------------------------------

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<VerificationReport(const RunConfig&)> run;
};

const std::vector<SuiteInfo>& suites();
std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace wlab
