#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgewitt/polygon.hpp"
#include "hodgewitt/rational.hpp"
#include "hodgewitt/slope_multiset.hpp"

namespace hodgewitt {

/// Hodge numbers h^{i,j} = dim H^j(X, Omega^i), stored per degree as the
/// row (h^{0,n}, h^{1,n-1}, ..., h^{n,0}). Rows that were never set read
/// as zero.
class HodgeTable {
 public:
  void set_row(int degree, std::vector<Int> numbers);

  bool has_row(int degree) const { return rows_.count(degree) != 0; }
  const std::vector<Int>& row(int degree) const;
  Int value(int i, int j) const;
  const std::map<int, std::vector<Int>>& rows() const { return rows_; }

  bool operator==(const HodgeTable&) const = default;

 private:
  std::map<int, std::vector<Int>> rows_;
};

/// Domino numbers T^{i,j}: dimensions of the dominos attached to the
/// differentials of the slope spectral sequence. Entries not listed read
/// as zero. Only the numbers are modeled, not the dominos themselves.
class DominoTable {
 public:
  void set(int i, int j, Int value);
  Int value(int i, int j) const;
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  bool all_zero() const;

  bool operator==(const DominoTable&) const = default;

 private:
  std::map<std::pair<int, int>, Int> entries_;
};

/// The three hypotheses of the Hodge-symmetry criterion, carried as data.
/// hodge_witt is tri-state: a variety can be known Hodge-Witt, known not,
/// or undetermined.
struct HypothesisFlags {
  std::optional<bool> hodge_witt;
  bool crystalline_torsion_free = false;
  bool hodge_de_rham_degenerates = false;

  bool operator==(const HypothesisFlags&) const = default;
};

/// Everything this library knows about one variety: per-degree Frobenius
/// slope data, optional Hodge numbers, optional domino numbers (absent
/// means unknown, present-but-empty means known zero), and the hypothesis
/// flags.
struct CohomologyProfile {
  std::string name;
  int dim = 0;
  std::map<int, SlopeMultiset> slope_data;  // degree -> multiset, degrees 0..2*dim
  std::optional<HodgeTable> hodge;
  std::optional<DominoTable> dominoes;
  HypothesisFlags flags;

  /// Slope data for a degree; an empty multiset of that degree when the
  /// profile stores none.
  SlopeMultiset slopes(int degree) const;

  bool operator==(const CohomologyProfile&) const = default;
};

struct Violation {
  std::string code;  // stable identifier, e.g. "non-positive-multiplicity"
  std::string message;
  std::optional<int> degree;
  std::optional<int> i;
  std::optional<int> j;

  bool operator==(const Violation&) const = default;
};

/// Collects every invariant violation; an empty result means the profile
/// is valid. Never throws and never mutates.
///
/// Checked: dimension >= 0; slope degrees inside 0..2*dim with every
/// degree present; multiplicities >= 1; slopes within [0, n]; integral
/// break points per degree; Hodge entries >= 0 and zero outside the
/// dimension box; domino entries >= 0 and zero outside the box; the
/// hodge_witt flag conflicting with a nonzero domino table.
std::vector<Violation> validate_profile(const CohomologyProfile& profile);

struct DualityViolation {
  int degree;
  Rational slope;
  Int mult;
  Int dual_mult;  // multiplicity of (degree - slope)
};

/// Slope duality: whenever lambda is a slope of degree n with multiplicity
/// m, so is n - lambda with the same multiplicity.
std::vector<DualityViolation> duality_violations(const CohomologyProfile& profile);
bool check_slope_duality(const CohomologyProfile& profile);

/// b_n = total slope multiplicity in degree n (the rank of degree-n
/// crystalline cohomology). Throws std::out_of_range outside 0..2*dim.
Int betti_number(const CohomologyProfile& profile, int degree);

/// Hodge polygon of one degree: slope i with multiplicity h^{i,n-i}.
Polygon hodge_polygon(const HodgeTable& hodge, int degree);

/// Ordinary = Newton polygon equals Hodge polygon in every degree.
/// Throws std::invalid_argument when the profile has no Hodge table.
bool is_ordinary(const CohomologyProfile& profile);

}  // namespace hodgewitt
