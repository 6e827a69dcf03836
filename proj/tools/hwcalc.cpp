#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hodgewitt/catalog.hpp"
#include "hodgewitt/profile.hpp"
#include "hodgewitt/profile_io.hpp"
#include "hodgewitt/report.hpp"
#include "hodgewitt/report_io.hpp"
#include "hodgewitt/slope_numbers.hpp"
#include "hodgewitt/svg.hpp"
#include "hodgewitt/verifier.hpp"

namespace {

using namespace hodgewitt;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSkip = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
  out << text;
}

int exit_for(Verdict overall, bool fail_on_skip) {
  if (overall == Verdict::fail) return kExitFail;
  if (overall == Verdict::skipped && fail_on_skip) return kExitSkip;
  return kExitPass;
}

// Exit precedence for batch runs: hard errors dominate, then failed checks,
// then skips surfaced by --fail-on-skip.
int severity_rank(int exit_code) {
  switch (exit_code) {
    case kExitError: return 3;
    case kExitFail: return 2;
    case kExitSkip: return 1;
    default: return 0;
  }
}

int run_check(const std::string& path, const std::string& format, bool fail_on_skip,
              const std::string& output) {
  CohomologyProfile profile = parse_profile(read_file(path));
  VerificationReport report = verify_main_theorem(profile);
  write_output(output, format == "json" ? report_to_json(report) : report_to_text(report));
  return exit_for(report.overall, fail_on_skip);
}

std::string relation(const Rational& upper, const Rational& lower) {
  if (upper == lower) return "equal";
  return upper > lower ? "above" : "below";
}

int run_polygons(const std::string& path, int degree, const std::string& svg_path,
                 const std::string& output) {
  CohomologyProfile profile = parse_profile(read_file(path));
  auto violations = validate_profile(profile);
  if (!violations.empty()) {
    std::cerr << "profile failed validation:\n";
    for (const Violation& v : violations) {
      std::cerr << "  " << v.code << ": " << v.message << "\n";
    }
    return kExitFail;
  }
  if (degree < 0 || degree > 2 * profile.dim) {
    throw std::runtime_error("degree " + std::to_string(degree) + " outside 0.." +
                             std::to_string(2 * profile.dim));
  }

  SlopeMultiset slopes = profile.slopes(degree);
  Polygon newton = slopes.newton_polygon();
  Polygon slope_poly = slope_number_polygon(slope_numbers(slopes));
  std::optional<Polygon> hodge;
  if (profile.hodge) hodge = hodge_polygon(*profile.hodge, degree);

  std::ostringstream out;
  out << "polygons for '" << profile.name << "', degree " << degree << "\n";
  auto print_poly = [&out](const std::string& label, const Polygon& polygon) {
    out << label;
    for (const PolygonPoint& p : polygon.break_points()) {
      out << " (" << p.x << "," << p.y << ")";
    }
    out << "\n";
  };
  print_poly("  newton:       ", newton);
  print_poly("  slope numbers:", slope_poly);
  if (hodge) {
    print_poly("  hodge:        ", *hodge);
  } else {
    out << "  hodge:         omitted, the profile has no Hodge table\n";
  }

  std::set<Rational> xs;
  for (const PolygonPoint& p : newton.break_points()) xs.insert(p.x);
  for (const PolygonPoint& p : slope_poly.break_points()) xs.insert(p.x);
  if (hodge) {
    for (const PolygonPoint& p : hodge->break_points()) xs.insert(p.x);
  }
  out << "comparison at the union of break x-coordinates:\n";
  for (const Rational& x : xs) {
    auto height = [&x](const Polygon& polygon) -> std::optional<Rational> {
      if (x > polygon.x_max()) return std::nullopt;
      return polygon.value_at(x);
    };
    std::optional<Rational> ny = height(newton);
    std::optional<Rational> sy = height(slope_poly);
    std::optional<Rational> hy;
    if (hodge) hy = height(*hodge);
    out << "  x=" << x << ":";
    out << " newton " << (ny ? ny->str() : "-");
    out << ", slope numbers " << (sy ? sy->str() : "-");
    if (hodge) out << ", hodge " << (hy ? hy->str() : "-");
    if (ny && sy) out << "; newton vs slope numbers: " << relation(*ny, *sy);
    if (sy && hy) out << "; slope numbers vs hodge: " << relation(*sy, *hy);
    out << "\n";
  }

  if (!svg_path.empty()) {
    PolygonPlot plot{profile.name + ", degree " + std::to_string(degree), newton, slope_poly,
                     hodge};
    write_output(svg_path, polygon_svg(plot));
  }
  write_output(output, out.str());
  return kExitPass;
}

int run_catalog(const std::string& entry, const std::string& output) {
  if (entry == "list") {
    std::vector<CatalogEntry> entries = catalog_list();
    size_t width = 0;
    for (const CatalogEntry& e : entries) width = std::max(width, e.id.size());
    std::ostringstream out;
    for (const CatalogEntry& e : entries) {
      out << e.id << std::string(width - e.id.size() + 2, ' ') << e.description << "\n";
    }
    write_output(output, out.str());
    return kExitPass;
  }
  write_output(output, serialize_profile(catalog_entry(entry)));
  return kExitPass;
}

struct BatchRow {
  std::string file;
  std::optional<VerificationReport> report;
  std::string error;
  int exit_code = kExitPass;
};

std::string batch_table(const std::vector<BatchRow>& rows) {
  std::vector<std::string> headers = {"file", "profile", "overall"};
  for (std::string_view id : checks::kAll) headers.emplace_back(id);

  std::vector<std::vector<std::string>> cells;
  cells.push_back(headers);
  for (const BatchRow& row : rows) {
    std::vector<std::string> line = {row.file};
    if (row.report) {
      line.push_back(row.report->profile);
      line.emplace_back(to_string(row.report->overall));
      for (std::string_view id : checks::kAll) {
        const CheckResult* check = row.report->find(id);
        line.emplace_back(check ? to_string(check->verdict) : std::string_view("-"));
      }
    } else {
      line.push_back("-");
      line.push_back("error");
      for (size_t k = 0; k < checks::kAll.size(); ++k) line.push_back("-");
    }
    cells.push_back(std::move(line));
  }

  std::vector<size_t> widths(headers.size(), 0);
  for (const auto& line : cells) {
    for (size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(widths[c] - line[c].size() + 2, ' ');
    }
    out << "\n";
  }
  bool any_error = false;
  for (const BatchRow& row : rows) {
    if (!row.error.empty()) {
      if (!any_error) out << "errors:\n";
      any_error = true;
      out << "  " << row.file << ": " << row.error << "\n";
    }
  }
  return out.str();
}

std::string batch_json(const std::vector<BatchRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const BatchRow& row : rows) {
    nlohmann::ordered_json item;
    item["file"] = row.file;
    if (row.report) {
      item["report"] = nlohmann::ordered_json::parse(report_to_json(*row.report));
    } else {
      item["error"] = row.error;
    }
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

int run_batch(const std::string& directory, const std::string& format, bool fail_on_skip,
              const std::string& output) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw std::runtime_error("not a directory: '" + directory + "'");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BatchRow> rows(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t idx; (idx = next.fetch_add(1)) < files.size();) {
      BatchRow& row = rows[idx];
      row.file = files[idx].filename().string();
      try {
        CohomologyProfile profile = parse_profile(read_file(files[idx].string()));
        VerificationReport report = verify_main_theorem(profile);
        row.exit_code = exit_for(report.overall, fail_on_skip);
        row.report = std::move(report);
      } catch (const std::exception& e) {
        row.error = e.what();
        row.exit_code = kExitError;
      }
    }
  };
  size_t thread_count =
      std::min(files.size(), static_cast<size_t>(std::max(1u, std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  write_output(output, format == "json" ? batch_json(rows) : batch_table(rows));
  int exit_code = kExitPass;
  for (const BatchRow& row : rows) {
    if (severity_rank(row.exit_code) > severity_rank(exit_code)) exit_code = row.exit_code;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact slope-number and Hodge-Witt-number calculator"};
  app.require_subcommand(1);

  std::string format = "text";
  bool fail_on_skip = false;
  std::string output;
  auto add_report_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--fail-on-skip", fail_on_skip,
                  "exit 2 when the verdict is skipped rather than pass");
    cmd->add_option("--output", output, "write to this file instead of stdout");
  };

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "run the verification chain on a profile file");
  check->add_option("file", check_file, "profile JSON file")->required();
  add_report_options(check);

  std::string polygons_file;
  int degree = 0;
  std::string svg_path;
  CLI::App* polygons =
      app.add_subcommand("polygons", "compare Newton, slope-number and Hodge polygons");
  polygons->add_option("file", polygons_file, "profile JSON file")->required();
  polygons->add_option("--degree", degree, "cohomological degree")->required();
  polygons->add_option("--svg", svg_path, "also write an SVG overlay to this path");
  polygons->add_option("--output", output, "write to this file instead of stdout");

  std::string catalog_arg;
  CLI::App* catalog =
      app.add_subcommand("catalog", "emit a built-in profile, or list them all");
  catalog->add_option("entry", catalog_arg, "catalog id, or 'list'")->required();
  catalog->add_option("--output", output, "write to this file instead of stdout");

  std::string batch_dir;
  CLI::App* batch = app.add_subcommand("batch", "check every profile file in a directory");
  batch->add_option("directory", batch_dir, "directory of profile JSON files")->required();
  add_report_options(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitError;
  }

  try {
    if (check->parsed()) return run_check(check_file, format, fail_on_skip, output);
    if (polygons->parsed()) return run_polygons(polygons_file, degree, svg_path, output);
    if (catalog->parsed()) return run_catalog(catalog_arg, output);
    if (batch->parsed()) return run_batch(batch_dir, format, fail_on_skip, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
