#include "hodgewitt/profile_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hodgewitt {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ProfileParseError(path, message);
}

void require_keys(const json& obj, const std::string& path,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(path, "missing field \"" + key + "\"");
  }
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(path + "/" + key, "unknown field");
  }
}

std::int64_t get_int64(const json& value, const std::string& path) {
  if (value.is_number_unsigned()) {
    auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(path, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<std::int64_t>();
}

int get_int(const json& value, const std::string& path) {
  std::int64_t v = get_int64(value, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(v);
}

std::string get_string(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

bool get_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected a boolean");
  return value.get<bool>();
}

const json& get_array(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  return value;
}

Rational parse_slope(const json& value, const std::string& path) {
  std::string text = get_string(value, path);
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::int64_t to_int64_checked(const Int& value) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) {
    throw std::domain_error("value " + value.str() + " does not fit the 64-bit file format");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

ProfileParseError::ProfileParseError(std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      path_(std::move(path)) {}

CohomologyProfile parse_profile(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail("", "malformed JSON");
  require_keys(doc, "", {"name", "dim", "flags", "cohomology"}, {"hodge", "dominoes"});

  CohomologyProfile profile;
  profile.name = get_string(doc["name"], "/name");
  profile.dim = get_int(doc["dim"], "/dim");

  const json& flags = doc["flags"];
  require_keys(flags, "/flags",
               {"hodge_witt", "crystalline_torsion_free", "hodge_de_rham_degenerates"});
  if (!flags["hodge_witt"].is_null()) {
    profile.flags.hodge_witt = get_bool(flags["hodge_witt"], "/flags/hodge_witt");
  }
  profile.flags.crystalline_torsion_free =
      get_bool(flags["crystalline_torsion_free"], "/flags/crystalline_torsion_free");
  profile.flags.hodge_de_rham_degenerates =
      get_bool(flags["hodge_de_rham_degenerates"], "/flags/hodge_de_rham_degenerates");

  const json& cohomology = get_array(doc["cohomology"], "/cohomology");
  for (size_t idx = 0; idx < cohomology.size(); ++idx) {
    const std::string path = "/cohomology/" + std::to_string(idx);
    const json& entry = cohomology[idx];
    require_keys(entry, path, {"degree", "slopes"});
    int degree = get_int(entry["degree"], path + "/degree");
    if (degree < 0) fail(path + "/degree", "degree must be non-negative");
    if (profile.slope_data.count(degree)) fail(path + "/degree", "duplicate degree");
    const json& slopes = get_array(entry["slopes"], path + "/slopes");
    std::vector<std::pair<Rational, Int>> entries;
    for (size_t s = 0; s < slopes.size(); ++s) {
      const std::string spath = path + "/slopes/" + std::to_string(s);
      const json& slot = slopes[s];
      require_keys(slot, spath, {"slope", "mult"});
      entries.emplace_back(parse_slope(slot["slope"], spath + "/slope"),
                           Int(get_int64(slot["mult"], spath + "/mult")));
    }
    profile.slope_data[degree] = SlopeMultiset::from_entries(degree, entries);
  }
  for (int n = 0; n <= 2 * profile.dim; ++n) {
    if (!profile.slope_data.count(n)) {
      profile.slope_data[n] = SlopeMultiset::from_entries(n, {});
    }
  }

  if (doc.contains("hodge")) {
    const json& hodge = get_array(doc["hodge"], "/hodge");
    HodgeTable table;
    std::set<int> seen;
    for (size_t idx = 0; idx < hodge.size(); ++idx) {
      const std::string path = "/hodge/" + std::to_string(idx);
      const json& entry = hodge[idx];
      require_keys(entry, path, {"degree", "numbers"});
      int degree = get_int(entry["degree"], path + "/degree");
      if (degree < 0) fail(path + "/degree", "degree must be non-negative");
      if (!seen.insert(degree).second) fail(path + "/degree", "duplicate degree");
      const json& numbers = get_array(entry["numbers"], path + "/numbers");
      if (numbers.size() != static_cast<size_t>(degree) + 1) {
        fail(path + "/numbers",
             "expected " + std::to_string(degree + 1) + " entries for degree " +
                 std::to_string(degree) + ", got " + std::to_string(numbers.size()));
      }
      std::vector<Int> row;
      for (size_t k = 0; k < numbers.size(); ++k) {
        row.emplace_back(get_int64(numbers[k], path + "/numbers/" + std::to_string(k)));
      }
      table.set_row(degree, std::move(row));
    }
    profile.hodge = std::move(table);
  }

  if (doc.contains("dominoes")) {
    const json& dominoes = get_array(doc["dominoes"], "/dominoes");
    DominoTable table;
    std::set<std::pair<int, int>> seen;
    for (size_t idx = 0; idx < dominoes.size(); ++idx) {
      const std::string path = "/dominoes/" + std::to_string(idx);
      const json& entry = dominoes[idx];
      require_keys(entry, path, {"i", "j", "T"});
      int i = get_int(entry["i"], path + "/i");
      int j = get_int(entry["j"], path + "/j");
      if (!seen.insert({i, j}).second) fail(path, "duplicate domino position");
      table.set(i, j, Int(get_int64(entry["T"], path + "/T")));
    }
    profile.dominoes = std::move(table);
  }

  return profile;
}

std::string serialize_profile(const CohomologyProfile& profile) {
  json doc;
  doc["name"] = profile.name;
  doc["dim"] = profile.dim;
  json flags;
  if (profile.flags.hodge_witt) {
    flags["hodge_witt"] = *profile.flags.hodge_witt;
  } else {
    flags["hodge_witt"] = nullptr;
  }
  flags["crystalline_torsion_free"] = profile.flags.crystalline_torsion_free;
  flags["hodge_de_rham_degenerates"] = profile.flags.hodge_de_rham_degenerates;
  doc["flags"] = std::move(flags);

  json cohomology = json::array();
  for (const auto& [degree, multiset] : profile.slope_data) {
    json slopes = json::array();
    for (const auto& [slope, mult] : multiset.entries()) {
      slopes.push_back({{"slope", slope.str()}, {"mult", to_int64_checked(mult)}});
    }
    cohomology.push_back({{"degree", degree}, {"slopes", std::move(slopes)}});
  }
  doc["cohomology"] = std::move(cohomology);

  if (profile.hodge) {
    json hodge = json::array();
    for (const auto& [degree, numbers] : profile.hodge->rows()) {
      json row = json::array();
      for (const Int& h : numbers) row.push_back(to_int64_checked(h));
      hodge.push_back({{"degree", degree}, {"numbers", std::move(row)}});
    }
    doc["hodge"] = std::move(hodge);
  }

  if (profile.dominoes) {
    json dominoes = json::array();
    for (const auto& [position, value] : profile.dominoes->entries()) {
      dominoes.push_back(
          {{"i", position.first}, {"j", position.second}, {"T", to_int64_checked(value)}});
    }
    doc["dominoes"] = std::move(dominoes);
  }

  return doc.dump(2) + "\n";
}

}  // namespace hodgewitt
