#include "pitlab/report.hpp"

#include <sstream>

namespace pitlab {

std::string RunReport::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : lines_) os << k << "=" << v << "\n";
  return os.str();
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ZERO: return "ZERO";
    case VerdictStatus::NONZERO: return "NONZERO";
    case VerdictStatus::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

void render_verdict(RunReport& rep, const Verdict& v) {
  rep.add("verdict", status_name(v.status));
  rep.add("certificate", certificate_kind_name(v.kind));
  if (!v.condition.empty() && v.kind != CertificateKind::early_normalization)
    rep.add("condition", v.condition);
  for (const auto& [k, val] : v.info) rep.add(k, val);
  for (const auto& d : v.diagnostics) {
    const size_t eq = d.find('=');
    if (eq != std::string::npos) {
      rep.add(d.substr(0, eq), d.substr(eq + 1));
    } else {
      rep.add("diagnostic", d);
    }
  }
}

int verdict_exit_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ZERO: return 0;
    case VerdictStatus::NONZERO: return 1;
    case VerdictStatus::INDETERMINATE: return 3;
  }
  return 3;
}

}  // namespace pitlab
