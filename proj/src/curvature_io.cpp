#include "wlab/curvature_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wlab {

using nlohmann::json;

namespace {

constexpr double kDropBelow = 0.0;

[[noreturn]] void fail(const std::string& what) { throw CurvatureParseError(what); }

int get_dim(const json& doc, const char* key, int lo, int hi) {
  if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  int x = v.get<int>();
  if (x < lo || x > hi)
    fail(std::string("field '") + key + "' out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

cplx get_complex(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(where + ": expected a number or [re, im]");
}

MatrixXc get_matrix(const json& doc, const char* key, int size) {
  if (!doc.contains(key)) return MatrixXc::Identity(size, size);
  const json& m = doc.at(key);
  if (!m.is_array() || static_cast<int>(m.size()) != size) fail(std::string("'") + key + "' must have " + std::to_string(size) + " rows");
  MatrixXc out(size, size);
  for (int i = 0; i < size; ++i) {
    const json& row = m[i];
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      fail(std::string("'") + key + "' row " + std::to_string(i + 1) + " has the wrong length");
    for (int j = 0; j < size; ++j)
      out(i, j) = get_complex(row[j], std::string(key) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return out;
}

struct Entry {
  std::array<int, 4> idx;
  cplx value;
};

std::vector<Entry> get_entries(const json& doc, std::array<int, 4> bounds) {
  if (!doc.contains("entries")) fail("missing field 'entries'");
  const json& es = doc.at("entries");
  if (!es.is_array()) fail("'entries' must be an array");
  std::vector<Entry> out;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const json& row = es[e];
    const std::string where = "entry " + std::to_string(e + 1);
    if (!row.is_array() || (row.size() != 5 && row.size() != 6)) fail(where + ": expected [i, j, k, l, re, im]");
    Entry en{};
    for (int s = 0; s < 4; ++s) {
      if (!row[s].is_number_integer()) fail(where + ": indices must be integers");
      int x = row[s].get<int>();
      if (x < 1 || x > bounds[s]) fail(where + ": index " + std::to_string(x) + " out of range");
      en.idx[s] = x - 1;
    }
    if (!row[4].is_number() || (row.size() == 6 && !row[5].is_number())) fail(where + ": value must be numeric");
    en.value = cplx(row[4].get<double>(), row.size() == 6 ? row[5].get<double>() : 0.0);
    out.push_back(en);
  }
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_json(const MatrixXc& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << "[" << fmt(m(i, j).real()) << "," << fmt(m(i, j).imag()) << "]";
    os << "]";
  }
  os << "]";
  return os.str();
}

template <class Get>
std::string entries_json(std::array<int, 4> dims, Get get) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int i = 0; i < dims[0]; ++i)
    for (int j = 0; j < dims[1]; ++j)
      for (int k = 0; k < dims[2]; ++k)
        for (int l = 0; l < dims[3]; ++l) {
          cplx v = get(i, j, k, l);
          if (std::abs(v) <= kDropBelow) continue;
          os << (first ? "" : ",") << "[" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << ","
             << fmt(v.real()) << "," << fmt(v.imag()) << "]";
          first = false;
        }
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(CurvatureKind k) {
  switch (k) {
    case CurvatureKind::Kaehler: return "kaehler";
    case CurvatureKind::Bundle: return "bundle";
    case CurvatureKind::Riemannian: return "riemannian";
  }
  return "kaehler";
}

CurvatureDocument parse_curvature_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("curvature document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) fail("missing string field 'kind'");
  const std::string kind = doc.at("kind").get<std::string>();
  CurvatureDocument out;
  try {
    if (kind == "kaehler") {
      out.kind = CurvatureKind::Kaehler;
      int n = get_dim(doc, "n", 1, kMaxDim);
      auto ctx = AlgebraContext::create(n, get_matrix(doc, "g", n));
      KaehlerCurvature rc(ctx);
      for (const Entry& e : get_entries(doc, {n, n, n, n})) rc(e.idx[0], e.idx[1], e.idx[2], e.idx[3]) = e.value;
      rc.validate();
      out.kaehler = std::move(rc);
    } else if (kind == "bundle") {
      out.kind = CurvatureKind::Bundle;
      int n = get_dim(doc, "n", 1, kMaxDim);
      int r = get_dim(doc, "r", 1, kMaxDim);
      auto ctx = AlgebraContext::create(n, get_matrix(doc, "g", n), r, get_matrix(doc, "h", r));
      BundleCurvature re(ctx);
      for (const Entry& e : get_entries(doc, {n, n, r, r})) re(e.idx[0], e.idx[1], e.idx[2], e.idx[3]) = e.value;
      re.validate();
      out.bundle = std::move(re);
    } else if (kind == "riemannian") {
      out.kind = CurvatureKind::Riemannian;
      int d = get_dim(doc, "d", 2, kMaxDim);
      RiemCurvature rr(d);
      for (const Entry& e : get_entries(doc, {d, d, d, d})) {
        if (e.value.imag() != 0.0) fail("riemannian entries must be real");
        rr(e.idx[0], e.idx[1], e.idx[2], e.idx[3]) = e.value.real();
      }
      rr.validate();
      out.riemannian = std::move(rr);
    } else {
      fail("unknown kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    fail(std::string("malformed curvature document: ") + e.what());
  }
  return out;
}

CurvatureDocument load_curvature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curvature_json(ss.str());
}

std::string to_json(const KaehlerCurvature& rc) {
  const int n = rc.n();
  std::ostringstream os;
  os << "{\"kind\":\"kaehler\",\"n\":" << n;
  if (!rc.context().identity_metrics()) os << ",\"g\":" << matrix_json(rc.context().g());
  os << ",\"entries\":" << entries_json({n, n, n, n}, [&](int i, int j, int k, int l) { return rc(i, j, k, l); })
     << "}";
  return os.str();
}

std::string to_json(const BundleCurvature& re) {
  const int n = re.n(), r = re.r();
  std::ostringstream os;
  os << "{\"kind\":\"bundle\",\"n\":" << n << ",\"r\":" << r;
  if (!re.context().identity_metrics())
    os << ",\"g\":" << matrix_json(re.context().g()) << ",\"h\":" << matrix_json(re.context().h());
  os << ",\"entries\":" << entries_json({n, n, r, r}, [&](int i, int j, int k, int l) { return re(i, j, k, l); })
     << "}";
  return os.str();
}

std::string to_json(const RiemCurvature& rr) {
  const int d = rr.d();
  std::ostringstream os;
  os << "{\"kind\":\"riemannian\",\"d\":" << d << ",\"entries\":"
     << entries_json({d, d, d, d}, [&](int i, int j, int k, int l) { return cplx(rr(i, j, k, l)); }) << "}";
  return os.str();
}

}  // namespace wlab
