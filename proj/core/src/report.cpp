#include "hodgewitt/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hodgewitt {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "skipped";
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "pass") return Verdict::pass;
  if (text == "fail") return Verdict::fail;
  if (text == "skipped") return Verdict::skipped;
  throw std::invalid_argument("unknown verdict \"" + std::string(text) + "\"");
}

const CheckResult* VerificationReport::find(std::string_view id) const {
  for (const auto& check : checks) {
    if (check.id == id) return &check;
  }
  return nullptr;
}

Verdict compute_overall(const std::vector<CheckResult>& checks) {
  bool any_skipped = false;
  for (const auto& check : checks) {
    if (check.verdict == Verdict::fail) return Verdict::fail;
    if (check.verdict == Verdict::skipped) any_skipped = true;
  }
  return any_skipped ? Verdict::skipped : Verdict::pass;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "profile: " << report.profile << "\n";
  for (const auto& check : report.checks) {
    os << "  [" << to_string(check.verdict) << "] " << check.id;
    if (!check.reason.empty()) os << ": " << check.reason;
    os << "\n";
    for (const auto& e : check.evidence) {
      os << "      - ";
      if (e.degree) os << "degree " << *e.degree << ": ";
      if (e.i && e.j) os << "(i,j)=(" << *e.i << "," << *e.j << ") ";
      os << e.note << "\n";
    }
  }
  os << "overall: " << to_string(report.overall) << "\n";
  return os.str();
}

}  // namespace hodgewitt
