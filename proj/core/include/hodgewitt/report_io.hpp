#pragma once

#include <stdexcept>
#include <string>

#include "hodgewitt/report.hpp"

namespace hodgewitt {

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Report document format:
//   {"profile": str, "overall": "pass"|"fail"|"skipped",
//    "checks": [{"id": str, "verdict": str, "reason": str,
//                "evidence": [{"degree": int|null, "i": int|null,
//                              "j": int|null, "note": str}]}]}
// Serialization is deterministic: stable key order, checks and evidence in
// stored order.
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

}  // namespace hodgewitt
