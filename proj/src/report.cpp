#include <cfloat>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wlab/verification.hpp"

namespace wlab {

namespace {

std::string number(double x) {
  // JSON has no infinities; non-finite residuals saturate.
  if (!std::isfinite(x)) x = std::isnan(x) || x > 0 ? DBL_MAX : -DBL_MAX;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

struct ParamWriter {
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(double v) const { return number(v); }
  std::string operator()(const std::string& v) const { return quoted(v); }
};

}  // namespace

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"suite\":" << quoted(suite) << ",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i)
    os << (i ? "," : "") << quoted(params[i].first) << ":" << std::visit(ParamWriter{}, params[i].second);
  os << "},\"samples\":" << samples << ",\"seed\":" << seed << ",\"max_residual\":" << number(max_residual)
     << ",\"violations\":" << violations << ",\"status\":\"" << (passed() ? "pass" : "fail")
     << "\",\"runtime_ms\":" << runtime_ms << "}";
  return os.str();
}

}  // namespace wlab
