#include "hodgewitt/report_io.hpp"

#include <optional>

#include "json.hpp"

namespace hodgewitt {

namespace {

using json = nlohmann::ordered_json;

json optional_int(const std::optional<int>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<int> parse_optional_int(const json& value, const std::string& where) {
  if (value.is_null()) return std::nullopt;
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    throw ReportParseError(where + ": expected an integer or null");
  }
  return value.get<int>();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ReportParseError(where + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& value = field(obj, key, where);
  if (!value.is_string()) throw ReportParseError(where + "/" + key + ": expected a string");
  return value.get<std::string>();
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["profile"] = report.profile;
  doc["overall"] = to_string(report.overall);
  json checks = json::array();
  for (const CheckResult& check : report.checks) {
    json evidence = json::array();
    for (const Evidence& e : check.evidence) {
      evidence.push_back({{"degree", optional_int(e.degree)},
                          {"i", optional_int(e.i)},
                          {"j", optional_int(e.j)},
                          {"note", e.note}});
    }
    checks.push_back({{"id", check.id},
                      {"verdict", to_string(check.verdict)},
                      {"reason", check.reason},
                      {"evidence", std::move(evidence)}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ReportParseError("malformed JSON");

  VerificationReport report;
  report.profile = string_field(doc, "profile", "");
  try {
    report.overall = verdict_from_string(string_field(doc, "overall", ""));
  } catch (const std::invalid_argument& e) {
    throw ReportParseError(std::string("/overall: ") + e.what());
  }
  const json& checks = field(doc, "checks", "");
  if (!checks.is_array()) throw ReportParseError("/checks: expected an array");
  for (size_t idx = 0; idx < checks.size(); ++idx) {
    const std::string where = "/checks/" + std::to_string(idx);
    const json& entry = checks[idx];
    CheckResult check;
    check.id = string_field(entry, "id", where);
    try {
      check.verdict = verdict_from_string(string_field(entry, "verdict", where));
    } catch (const std::invalid_argument& e) {
      throw ReportParseError(where + "/verdict: " + e.what());
    }
    check.reason = string_field(entry, "reason", where);
    const json& evidence = field(entry, "evidence", where);
    if (!evidence.is_array()) throw ReportParseError(where + "/evidence: expected an array");
    for (size_t k = 0; k < evidence.size(); ++k) {
      const std::string ewhere = where + "/evidence/" + std::to_string(k);
      const json& item = evidence[k];
      Evidence e;
      e.degree = parse_optional_int(field(item, "degree", ewhere), ewhere + "/degree");
      e.i = parse_optional_int(field(item, "i", ewhere), ewhere + "/i");
      e.j = parse_optional_int(field(item, "j", ewhere), ewhere + "/j");
      e.note = string_field(item, "note", ewhere);
      check.evidence.push_back(std::move(e));
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace hodgewitt
