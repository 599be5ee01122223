#pragma once

// JSON documents for curvature tensors:
//   {"kind": "kaehler" | "bundle" | "riemannian", "n": .., "r": .., "d": ..,
//    "g": [[[re, im], ...], ...], "h": ..., "entries": [[i, j, k, l, re, im], ...]}
// Indices are 1-based; omitted entries are zero. "g" and "h" are optional.

#include <optional>
#include <stdexcept>
#include <string>

#include "wlab/curvature_models.hpp"

namespace wlab {

class CurvatureParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CurvatureKind { Kaehler, Bundle, Riemannian };

std::string to_string(CurvatureKind k);

struct CurvatureDocument {
  CurvatureKind kind = CurvatureKind::Kaehler;
  std::optional<KaehlerCurvature> kaehler;
  std::optional<BundleCurvature> bundle;
  std::optional<RiemCurvature> riemannian;
};

// Throws CurvatureParseError on malformed input and SymmetryError when the
// tensor breaks its symmetries.
CurvatureDocument parse_curvature_json(const std::string& text);
CurvatureDocument load_curvature_file(const std::string& path);

std::string to_json(const KaehlerCurvature& rc);
std::string to_json(const BundleCurvature& re);
std::string to_json(const RiemCurvature& rr);

}  // namespace wlab
