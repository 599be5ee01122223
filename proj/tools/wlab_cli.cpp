// wlab: verification suites, vanishing predictions and curvature spectra.
//
//   wlab verify  [--suite NAME ...] [--seed S] [--n N] [--d D] [--r R] ...
//   wlab predict --n N (--m M | --model fs|hyperquadric) [--p P --q Q] [--bundle] [--reduced] [--json]
//   wlab spectrum (--model fs|hyperquadric|sphere --n N | --file PATH) [--operator ...] [--json]
//
// Exit codes: 0 success (all suites pass), 1 suite failure, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlab/curvature_io.hpp"
#include "wlab/curvature_models.hpp"
#include "wlab/predictor.hpp"
#include "wlab/verification.hpp"

namespace {

using namespace wlab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites{"all"};
  std::optional<std::uint64_t> seed;
  RunConfig cfg;
  bool serial = false;
  bool no_timing = false;
  bool list = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const SuiteInfo& s : wlab::suites()) std::cout << s.name << "\t" << s.description << "\n";
    return 0;
  }
  RunConfig cfg = a.cfg;
  if (const char* env = std::getenv("WLAB_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError(std::string("WLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  if (a.seed) cfg.seed = *a.seed;
  cfg.parallel = !a.serial;
  cfg.timing = !a.no_timing;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::vector<std::string> selected;
  for (const std::string& s : a.suites) {
    if (s == "all") {
      for (const std::string& name : suite_names()) selected.push_back(name);
    } else if (has_suite(s)) {
      selected.push_back(s);
    } else {
      throw UsageError("unknown suite '" + s + "' (see verify --list)");
    }
  }
  // Suites run one after another, each parallel inside; output order is the
  // selection order.
  bool ok = true;
  for (const std::string& name : selected) {
    VerificationReport rep = run_suite(name, cfg);
    std::cout << rep.to_json() << std::endl;
    ok = ok && rep.passed();
  }
  return ok ? 0 : kExitFail;
}

// ---- predict --------------------------------------------------------------

struct PredictArgs {
  int n = 0;
  std::optional<int> m;
  std::string model;
  std::optional<int> p, q;
  bool bundle = false;
  bool not_nakano = false;
  bool reduced = false;
  bool json = false;
};

int cmd_predict(const PredictArgs& a) {
  if (a.n < 1 || a.n > 16) throw UsageError("--n must lie in [1, 16]");
  if (a.m && !a.model.empty()) throw UsageError("give either --m or --model, not both");
  if (a.p.has_value() != a.q.has_value()) throw UsageError("--p and --q go together");
  std::optional<int> m = a.m;
  std::string source = "m";
  if (!a.model.empty()) {
    if (a.model == "fs") {
      m = m_positivity_level(Spectrum::of(sym_curv_operator(model_fubini_study(a.n))));
    } else if (a.model == "hyperquadric") {
      if (a.n < 2) throw UsageError("the hyperquadric model needs n >= 2");
      m = m_positivity_level(model_hyperquadric(a.n));
    } else {
      throw UsageError("unknown model '" + a.model + "'");
    }
    source = a.model;
  } else if (!m) {
    throw UsageError("one of --m or --model is required");
  }
  if (m && *m < 1) throw UsageError("--m must be positive");

  auto verdict_at = [&](int p, int q) -> VanishingVerdict {
    if (!m) return {};
    if (a.reduced) return reduced_vanishing(a.n, p, q, *m);
    if (a.bundle) return q >= 1 ? vanishing_bundle(a.n, p, q, *m, !a.not_nakano) : VanishingVerdict{};
    return vanishing_hodge(a.n, p, q, *m);
  };
  const std::string family = a.reduced ? "reduced" : a.bundle ? "bundle" : "hodge";
  const std::string m_text = m ? std::to_string(*m) : std::string("none");

  if (a.p) {
    const int p = *a.p, q = *a.q;
    if (p < 0 || p > a.n || q < 0 || q > a.n) throw UsageError("(p, q) out of range");
    if (a.bundle && q < 1) throw UsageError("bundle vanishing needs q >= 1");
    VanishingVerdict v = verdict_at(p, q);
    std::optional<PositivityClass> pc;
    if (m && q >= 1 && !a.reduced) pc = b_positivity_class(a.n, p, q, *m);
    if (a.json) {
      std::cout << "{\"n\":" << a.n << ",\"m\":" << (m ? m_text : "null") << ",\"source\":\"" << source
                << "\",\"family\":\"" << family << "\",\"p\":" << p << ",\"q\":" << q
                << ",\"vanishing\":" << v.to_json();
      if (pc) {
        std::cout << ",\"b_positivity\":{\"class\":\"" << to_string(pc->kind) << "\",\"rule\":\"" << pc->rule << "\"";
        if (pc->equality_condition) std::cout << ",\"equality_condition\":\"" << *pc->equality_condition << "\"";
        std::cout << "}";
      }
      std::cout << "}\n";
    } else {
      std::cout << family << " (p,q)=(" << p << "," << q << ") n=" << a.n << " m=" << m_text << ": "
                << to_string(v.kind);
      if (!v.rule.empty()) std::cout << " [" << v.rule << (v.used_serre_duality ? ", via Serre duality" : "") << "]";
      std::cout << "\n";
      if (pc) {
        std::cout << "B^{" << p << "," << q << "}: " << to_string(pc->kind);
        if (!pc->rule.empty()) std::cout << " [" << pc->rule << "]";
        if (pc->equality_condition) std::cout << ", equality iff " << *pc->equality_condition;
        std::cout << "\n";
      }
    }
    return 0;
  }

  HodgeDiamond d;
  if (family == "hodge") {
    d = hodge_diamond_report(a.n, m);
  } else {
    d.n = a.n;
    d.m = m;
    d.cells.assign(a.n + 1, std::vector<VanishingVerdict>(a.n + 1));
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= a.n; ++q) d.cells[p][q] = verdict_at(p, q);
  }
  if (a.json) {
    std::string body = d.to_json();
    std::cout << "{\"source\":\"" << source << "\",\"family\":\"" << family
              << "\",\"matches_projective_space\":" << (d.is_projective_space_pattern() ? "true" : "false") << ","
              << body.substr(1) << "\n";
  } else {
    std::cout << family << " table, source=" << source;
    if (source == "hyperquadric") std::cout << " (spectrum 2-n, 2, ..., 2 is " << m_text << "-positive)";
    std::cout << "\n" << d.to_text();
    std::cout << "rows p = 0..n, columns q = 0..n; 0 vanishes, C equals C, ? no claim\n";
    if (family == "hodge")
      std::cout << (d.is_projective_space_pattern() ? "matches the CP^n diamond\n" : "does not establish the CP^n diamond\n");
  }
  return 0;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  std::string model;
  std::string file;
  int n = 0;
  std::string op;
  bool json = false;
};

struct Listing {
  std::string op;
  std::vector<double> eigenvalues;
};

void print_listing(const Listing& l, bool json) {
  Spectrum s(l.eigenvalues);
  auto m = s.dim() ? m_positivity_level(s) : std::nullopt;
  if (json) {
    std::cout << "{\"operator\":\"" << l.op << "\",\"dim\":" << s.dim() << ",\"eigenvalues\":[";
    for (int i = 0; i < s.dim(); ++i) std::cout << (i ? "," : "") << num(s.eigenvalues[i]);
    std::cout << "],\"m_level\":" << (m ? std::to_string(*m) : std::string("null")) << "}\n";
    return;
  }
  std::cout << l.op << " (dim " << s.dim() << "):";
  for (double x : s.eigenvalues) std::cout << " " << num(x);
  std::cout << "\nm-level: " << (m ? std::to_string(*m) : std::string("none")) << "\n";
}

int cmd_spectrum(const SpectrumArgs& a) {
  if (a.model.empty() == a.file.empty()) throw UsageError("give exactly one of --model or --file");
  std::vector<Listing> out;
  auto want = [&](const std::string& op, bool by_default) { return a.op.empty() ? by_default : a.op == op; };
  auto kaehler = [&](const KaehlerCurvature& rc) {
    if (want("sym", true)) out.push_back({"sym", Spectrum::of(sym_curv_operator(rc)).eigenvalues});
    if (want("reduced", false)) out.push_back({"reduced", Spectrum::of(reduced_curv_operator(rc)).eigenvalues});
  };
  if (!a.model.empty()) {
    if (a.n < 1 || a.n > 16) throw UsageError("--n must lie in [1, 16]");
    if (a.model == "fs") {
      kaehler(model_fubini_study(a.n));
    } else if (a.model == "hyperquadric") {
      if (a.n < 2) throw UsageError("the hyperquadric model needs n >= 2");
      if (!a.op.empty() && a.op != "sym") throw UsageError("the hyperquadric model only has the sym spectrum");
      out.push_back({"sym", model_hyperquadric(a.n).eigenvalues});
    } else if (a.model == "sphere") {
      if (a.n < 2) throw UsageError("the sphere model needs d >= 2");
      out.push_back({"riemannian", Spectrum::of(riem_curv_operator(model_sphere(a.n)).cast<cplx>()).eigenvalues});
    } else {
      throw UsageError("unknown model '" + a.model + "'");
    }
  } else {
    CurvatureDocument doc = load_curvature_file(a.file);
    switch (doc.kind) {
      case CurvatureKind::Kaehler: kaehler(*doc.kaehler); break;
      case CurvatureKind::Bundle:
        out.push_back({"bundle", Spectrum::of(bundle_curv_operator(*doc.bundle)).eigenvalues});
        break;
      case CurvatureKind::Riemannian:
        out.push_back({"riemannian", Spectrum::of(riem_curv_operator(*doc.riemannian).cast<cplx>()).eigenvalues});
        break;
    }
  }
  if (out.empty()) throw UsageError("operator '" + a.op + "' does not apply to this input");
  for (const Listing& l : out) print_listing(l, a.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature-term calculus: verification suites, vanishing predictions, curvature spectra"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites; one JSON line per suite");
  verify->add_option("--suite", va.suites, "suite name, or all (repeatable)");
  verify->add_option("--seed", va.seed, "master seed (default 42, or WLAB_SEED)");
  verify->add_option("--n", va.cfg.max_n, "largest complex dimension")->capture_default_str();
  verify->add_option("--d", va.cfg.max_d, "largest real dimension")->capture_default_str();
  verify->add_option("--r", va.cfg.max_r, "largest bundle rank")->capture_default_str();
  verify->add_option("--samples", va.cfg.identity_samples, "samples per case for identity suites")->capture_default_str();
  verify->add_option("--inequality-samples", va.cfg.inequality_samples, "samples per case for inequality sweeps")
      ->capture_default_str();
  verify->add_option("--tolerance", va.cfg.tolerance, "tolerance of the 1e-9 identity suites")->capture_default_str();
  verify->add_flag("--serial", va.serial, "run sweeps on one thread");
  verify->add_flag("--no-timing", va.no_timing, "report runtime_ms as 0 for byte-stable output");
  verify->add_flag("--list", va.list, "list suites and exit");

  PredictArgs pa;
  auto* predict = app.add_subcommand("predict", "vanishing verdicts from a positivity level");
  predict->add_option("--n", pa.n, "complex dimension")->required();
  predict->add_option("--m", pa.m, "positivity level of the symmetrized curvature operator");
  predict->add_option("--model", pa.model, "fs or hyperquadric");
  predict->add_option("--p", pa.p, "single cell: p");
  predict->add_option("--q", pa.q, "single cell: q");
  predict->add_flag("--bundle", pa.bundle, "vector-bundle valued cohomology (Nakano positive bundle)");
  predict->add_flag("--not-nakano", pa.not_nakano, "with --bundle: the bundle is not Nakano positive");
  predict->add_flag("--reduced", pa.reduced, "level refers to the reduced curvature operator");
  predict->add_flag("--json", pa.json, "JSON output");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of curvature operators and the m-level");
  spectrum->add_option("--model", sa.model, "fs, hyperquadric or sphere");
  spectrum->add_option("--n", sa.n, "dimension of the model (real dimension for sphere)");
  spectrum->add_option("--file", sa.file, "curvature JSON document");
  spectrum->add_option("--operator", sa.op, "sym, reduced, bundle or riemannian");
  spectrum->add_flag("--json", sa.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*predict) return cmd_predict(pa);
    if (*spectrum) return cmd_spectrum(sa);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SymmetryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CurvatureParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
