#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hodgewitt {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict verdict);

/// Throws std::invalid_argument on anything but "pass", "fail", "skipped".
Verdict verdict_from_string(std::string_view text);

/// One offending location: degree and/or an (i, j) position, plus a short
/// note with the values involved.
struct Evidence {
  std::optional<int> degree;
  std::optional<int> i;
  std::optional<int> j;
  std::string note;

  bool operator==(const Evidence&) const = default;
};

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::skipped;
  std::string reason;
  std::vector<Evidence> evidence;

  bool operator==(const CheckResult&) const = default;
};

/// Structured verdicts of every check run on a profile. Overall is pass
/// only when no check failed and none was skipped; every skipped check
/// names the missing hypothesis or data in its reason.
struct VerificationReport {
  std::string profile;
  std::vector<CheckResult> checks;
  Verdict overall = Verdict::skipped;

  const CheckResult* find(std::string_view id) const;

  bool operator==(const VerificationReport&) const = default;
};

Verdict compute_overall(const std::vector<CheckResult>& checks);

/// Human-readable rendering, one line per check plus indented evidence.
std::string report_to_text(const VerificationReport& report);

}  // namespace hodgewitt
