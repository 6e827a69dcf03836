#include "hodgewitt/catalog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace hodgewitt {

namespace {

std::vector<Int> zero_row(int degree) {
  return std::vector<Int>(static_cast<size_t>(degree) + 1, Int(0));
}

// C(n, k) for cpp_int n; zero when k exceeds n.
Int binomial(const Int& n, int k) {
  Int result = 1;
  for (int t = 1; t <= k; ++t) {
    result *= n - (t - 1);
    result /= t;
  }
  return result < 0 ? Int(0) : result;
}

// Degree-1 slope layout shared by curves and abelian varieties: p-rank many
// unit slopes at each end, the rest paired at 1/2.
SlopeMultiset h1_slopes(int genus, int p_rank) {
  std::vector<std::pair<Rational, Int>> entries;
  if (p_rank > 0) {
    entries.push_back({Rational(0), Int(p_rank)});
    entries.push_back({Rational(1), Int(p_rank)});
  }
  if (genus - p_rank > 0) {
    entries.push_back({Rational(1, 2), Int(2 * (genus - p_rank))});
  }
  return SlopeMultiset::from_entries(1, entries);
}

bool certified_ordinary(const CohomologyProfile& p) {
  return p.hodge.has_value() && is_ordinary(p);
}

int parse_int_param(const std::string& text) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UnknownEntryError("malformed integer parameter '" + text + "'");
  }
  return std::stoi(text);
}

// Expects "g=<int>,f=<int>" and returns the pair.
std::pair<int, int> parse_gf(const std::string& family, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.compare(0, 2, "g=") != 0 ||
      text.compare(comma + 1, 2, "f=") != 0) {
    throw UnknownEntryError(family + " parameters must look like g=<int>,f=<int>, got '" +
                            text + "'");
  }
  int g = parse_int_param(text.substr(2, comma - 2));
  int f = parse_int_param(text.substr(comma + 3));
  return {g, f};
}

size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string closest_known_id(const std::string& id) {
  std::string best;
  size_t best_distance = 0;
  for (const auto& entry : catalog_list()) {
    size_t d = edit_distance(id, entry.id);
    if (best.empty() || d < best_distance) {
      best = entry.id;
      best_distance = d;
    }
  }
  size_t tolerance = std::max<size_t>(3, id.size() / 3);
  return best_distance <= tolerance ? best : std::string();
}

CohomologyProfile resolve(const std::string& id);

CohomologyProfile resolve_product(const std::string& id) {
  const std::string rest = id.substr(std::string("product:").size());
  std::optional<std::string> first_error;
  for (size_t pos = rest.find('*'); pos != std::string::npos; pos = rest.find('*', pos + 1)) {
    try {
      CohomologyProfile a = resolve(rest.substr(0, pos));
      CohomologyProfile b = resolve(rest.substr(pos + 1));
      return kunneth_product(a, b);
    } catch (const UnknownEntryError& e) {
      if (!first_error) first_error = e.what();
    }
  }
  if (first_error) {
    throw UnknownEntryError("cannot resolve product '" + id + "': " + *first_error);
  }
  throw UnknownEntryError("product id needs two '*'-separated factor ids, got '" + id + "'");
}

CohomologyProfile resolve(const std::string& id) {
  if (id == "point") return point();
  if (id == "elliptic:ordinary") return elliptic_curve(EllipticKind::ordinary);
  if (id == "elliptic:supersingular") return elliptic_curve(EllipticKind::supersingular);
  if (id == "k3:supersingular") return k3_supersingular();
  try {
    if (id.rfind("k3:h=", 0) == 0) return k3(parse_int_param(id.substr(5)));
    if (id.rfind("curve:", 0) == 0) {
      auto [g, f] = parse_gf("curve", id.substr(6));
      return curve(g, f);
    }
    if (id.rfind("av:", 0) == 0) {
      auto [g, f] = parse_gf("av", id.substr(3));
      return abelian_variety(g, f);
    }
  } catch (const std::out_of_range& e) {
    throw UnknownEntryError(e.what());
  }
  if (id.rfind("product:", 0) == 0) return resolve_product(id);
  throw UnknownEntryError("unknown catalog id '" + id + "'", closest_known_id(id));
}

}  // namespace

UnknownEntryError::UnknownEntryError(const std::string& message, std::string suggestion)
    : std::runtime_error(suggestion.empty() ? message
                                            : message + "; closest match: '" + suggestion + "'"),
      suggestion_(std::move(suggestion)) {}

CohomologyProfile point() {
  CohomologyProfile p;
  p.name = "point";
  p.dim = 0;
  p.slope_data[0] = SlopeMultiset::from_entries(0, {{Rational(0), Int(1)}});
  HodgeTable hodge;
  hodge.set_row(0, {Int(1)});
  p.hodge = std::move(hodge);
  p.dominoes = DominoTable{};
  p.flags = {true, true, true};
  return p;
}

CohomologyProfile elliptic_curve(EllipticKind kind) {
  CohomologyProfile p = curve(1, kind == EllipticKind::ordinary ? 1 : 0);
  p.name = kind == EllipticKind::ordinary ? "elliptic:ordinary" : "elliptic:supersingular";
  return p;
}

CohomologyProfile curve(int genus, int p_rank) {
  if (genus < 0 || p_rank < 0 || p_rank > genus) {
    throw std::out_of_range("curve needs 0 <= f <= g, got g=" + std::to_string(genus) +
                            ", f=" + std::to_string(p_rank));
  }
  CohomologyProfile p;
  p.name = "curve:g=" + std::to_string(genus) + ",f=" + std::to_string(p_rank);
  p.dim = 1;
  p.slope_data[0] = SlopeMultiset::from_entries(0, {{Rational(0), Int(1)}});
  p.slope_data[1] = h1_slopes(genus, p_rank);
  p.slope_data[2] = SlopeMultiset::from_entries(2, {{Rational(1), Int(1)}});
  HodgeTable hodge;
  hodge.set_row(0, {Int(1)});
  hodge.set_row(1, {Int(genus), Int(genus)});
  hodge.set_row(2, {Int(0), Int(1), Int(0)});
  p.hodge = std::move(hodge);
  p.dominoes = DominoTable{};
  p.flags = {true, true, true};
  return p;
}

CohomologyProfile k3(int height) {
  if (height < 1 || height > 11) {
    throw std::out_of_range("k3 height must lie in 1..11, got " + std::to_string(height));
  }
  CohomologyProfile p;
  p.name = "k3:h=" + std::to_string(height);
  p.dim = 2;
  p.slope_data[0] = SlopeMultiset::from_entries(0, {{Rational(0), Int(1)}});
  p.slope_data[1] = SlopeMultiset::from_entries(1, {});
  std::vector<std::pair<Rational, Int>> middle = {
      {Rational(height - 1, height), Int(height)},
      {Rational(height + 1, height), Int(height)},
  };
  if (22 - 2 * height > 0) {
    middle.push_back({Rational(1), Int(22 - 2 * height)});
  }
  p.slope_data[2] = SlopeMultiset::from_entries(2, middle);
  p.slope_data[3] = SlopeMultiset::from_entries(3, {});
  p.slope_data[4] = SlopeMultiset::from_entries(4, {{Rational(2), Int(1)}});
  HodgeTable hodge;
  hodge.set_row(0, {Int(1)});
  hodge.set_row(1, {Int(0), Int(0)});
  hodge.set_row(2, {Int(1), Int(20), Int(1)});
  hodge.set_row(3, {Int(0), Int(0), Int(0), Int(0)});
  hodge.set_row(4, {Int(0), Int(0), Int(1), Int(0), Int(0)});
  p.hodge = std::move(hodge);
  p.dominoes = DominoTable{};
  p.flags = {true, true, true};
  return p;
}

CohomologyProfile k3_supersingular() {
  CohomologyProfile p = k3(1);
  p.name = "k3:supersingular";
  p.slope_data[2] = SlopeMultiset::from_entries(2, {{Rational(1), Int(22)}});
  DominoTable dominoes;
  dominoes.set(0, 2, 1);
  p.dominoes = std::move(dominoes);
  p.flags = {false, true, true};
  return p;
}

CohomologyProfile abelian_variety(int dimension, int p_rank) {
  if (dimension < 1 || p_rank < 0 || p_rank > dimension) {
    throw std::out_of_range("abelian variety needs g >= 1 and 0 <= f <= g, got g=" +
                            std::to_string(dimension) + ", f=" + std::to_string(p_rank));
  }
  CohomologyProfile p;
  p.name = "av:g=" + std::to_string(dimension) + ",f=" + std::to_string(p_rank);
  p.dim = dimension;
  SlopeMultiset h1 = h1_slopes(dimension, p_rank);
  HodgeTable hodge;
  for (int n = 0; n <= 2 * dimension; ++n) {
    p.slope_data[n] = wedge_power(h1, n);
    std::vector<Int> row = zero_row(n);
    for (int i = 0; i <= n; ++i) {
      row[static_cast<size_t>(i)] = binomial(Int(dimension), i) * binomial(Int(dimension), n - i);
    }
    hodge.set_row(n, std::move(row));
  }
  p.hodge = std::move(hodge);
  bool hodge_witt = p_rank >= dimension - 1;
  p.flags.hodge_witt = hodge_witt;
  p.flags.crystalline_torsion_free = true;
  p.flags.hodge_de_rham_degenerates = true;
  if (hodge_witt) {
    p.dominoes = DominoTable{};
  }
  return p;
}

SlopeMultiset wedge_power(const SlopeMultiset& s, int n) {
  if (n < 0 || Int(n) > s.total_multiplicity()) {
    throw std::out_of_range("wedge power order must lie in 0..total multiplicity, got " +
                            std::to_string(n));
  }
  // dp[k] maps a slope sum to the number of k-element sub-multisets reaching
  // it; each distinct slope contributes C(mult, t) ways to take t copies.
  std::vector<std::map<Rational, Int>> dp(static_cast<size_t>(n) + 1);
  dp[0][Rational(0)] = 1;
  for (const auto& [slope, mult] : s.entries()) {
    for (int k = n; k >= 0; --k) {
      for (const auto& [sum, count] : dp[static_cast<size_t>(k)]) {
        for (int t = 1; t + k <= n; ++t) {
          Int ways = binomial(mult, t);
          if (ways == 0) break;
          dp[static_cast<size_t>(k + t)][sum + Rational(t) * slope] += count * ways;
        }
      }
    }
  }
  std::vector<std::pair<Rational, Int>> entries(dp[static_cast<size_t>(n)].begin(),
                                                dp[static_cast<size_t>(n)].end());
  return SlopeMultiset::from_entries(n * s.degree(), entries);
}

CohomologyProfile kunneth_product(const CohomologyProfile& a, const CohomologyProfile& b) {
  CohomologyProfile p;
  p.name = "product:" + a.name + "*" + b.name;
  p.dim = a.dim + b.dim;
  const int top = 2 * p.dim;

  std::map<int, std::map<Rational, Int>> slope_acc;
  for (int n = 0; n <= top; ++n) slope_acc[n];
  for (const auto& [na, sa] : a.slope_data) {
    for (const auto& [nb, sb] : b.slope_data) {
      for (const auto& [la, ma] : sa.entries()) {
        for (const auto& [lb, mb] : sb.entries()) {
          slope_acc[na + nb][la + lb] += ma * mb;
        }
      }
    }
  }
  for (const auto& [n, merged] : slope_acc) {
    p.slope_data[n] = SlopeMultiset::from_entries(
        n, std::vector<std::pair<Rational, Int>>(merged.begin(), merged.end()));
  }

  if (a.hodge && b.hodge) {
    std::map<int, std::vector<Int>> rows;
    for (int n = 0; n <= top; ++n) rows[n] = zero_row(n);
    for (const auto& [na, ra] : a.hodge->rows()) {
      for (const auto& [nb, rb] : b.hodge->rows()) {
        auto& row = rows[na + nb];
        if (row.size() < static_cast<size_t>(na + nb) + 1) {
          row.resize(static_cast<size_t>(na + nb) + 1, Int(0));
        }
        for (size_t ia = 0; ia < ra.size(); ++ia) {
          for (size_t ib = 0; ib < rb.size(); ++ib) {
            row[ia + ib] += ra[ia] * rb[ib];
          }
        }
      }
    }
    HodgeTable hodge;
    for (auto& [n, row] : rows) hodge.set_row(n, std::move(row));
    p.hodge = std::move(hodge);
  }

  p.flags.crystalline_torsion_free =
      a.flags.crystalline_torsion_free && b.flags.crystalline_torsion_free;
  p.flags.hodge_de_rham_degenerates =
      a.flags.hodge_de_rham_degenerates && b.flags.hodge_de_rham_degenerates;
  // An ordinary factor transfers the other factor's Hodge-Witt status, in
  // both directions; without one the product's status stays unknown. The
  // true-transfers are tried before the false-transfers so the rule is
  // symmetric in a and b.
  bool ord_a = certified_ordinary(a);
  bool ord_b = certified_ordinary(b);
  if ((ord_a && b.flags.hodge_witt == true) || (ord_b && a.flags.hodge_witt == true)) {
    p.flags.hodge_witt = true;
  } else if ((ord_a && b.flags.hodge_witt == false) ||
             (ord_b && a.flags.hodge_witt == false)) {
    p.flags.hodge_witt = false;
  }
  if (p.flags.hodge_witt == true) {
    p.dominoes = DominoTable{};
  }
  return p;
}

std::vector<CatalogEntry> catalog_list() {
  return {
      {"point", "a single point: one class of slope 0 in degree 0"},
      {"elliptic:ordinary", "ordinary elliptic curve, degree-1 slopes {0:1, 1:1}"},
      {"elliptic:supersingular", "supersingular elliptic curve, degree-1 slopes {1/2:2}"},
      {"curve:g=2,f=2", "ordinary genus-2 curve; any curve:g=<g>,f=<f> with 0 <= f <= g resolves"},
      {"curve:g=2,f=0", "genus-2 curve of p-rank 0, degree-1 slopes {1/2:4}"},
      {"curve:g=3,f=1", "genus-3 curve of p-rank 1"},
      {"k3:h=1", "ordinary K3 surface (height 1)"},
      {"k3:h=2", "K3 surface of height 2; any k3:h=<h> with 1 <= h <= 11 resolves"},
      {"k3:h=3", "K3 surface of height 3"},
      {"k3:supersingular",
       "supersingular K3 surface, all 22 degree-2 slopes equal 1; carries T^{0,2}=1, the value "
       "forced by rank and Hodge agreement (h_W^{0,2} = h^{0,2} = 1 while m^{0,2} = 0), and "
       "hodge_witt=false"},
      {"av:g=2,f=2", "ordinary abelian surface; any av:g=<g>,f=<f> with 0 <= f <= g resolves"},
      {"av:g=2,f=1", "abelian surface of p-rank 1, still Hodge-Witt (f >= g-1)"},
      {"av:g=3,f=3", "ordinary abelian threefold"},
      {"product:elliptic:ordinary*elliptic:ordinary",
       "self-product of an ordinary elliptic curve; any product:<id>*<id> resolves"},
      {"product:elliptic:ordinary*k3:supersingular",
       "ordinary elliptic curve times a supersingular K3 surface"},
  };
}

CohomologyProfile catalog_entry(const std::string& id) { return resolve(id); }

}  // namespace hodgewitt
