#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hodgewitt/number_table.hpp"
#include "hodgewitt/profile.hpp"

namespace hodgewitt {

/// Thrown when an operation's hypotheses are not met, e.g. the Ekedahl
/// equality applied to a profile that is not Mazur-Ogus.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hodge-Witt numbers from slope numbers and domino numbers:
///
///   h_W^{i,j} = m^{i,j} + T^{i,j} - 2*T^{i-1,j+1} + T^{i-2,j+2}
///
/// Out-of-range T indices read as zero. The result has the same rows as m
/// and, unlike Hodge numbers, can contain negative entries.
NumberTable hodge_witt_numbers(const NumberTable& slope_numbers, const DominoTable& dominoes);

/// h_W^{i,j} = h_W^{j,i} for all i, j.
bool check_hodge_witt_symmetry(const NumberTable& hodge_witt);

/// Hodge symmetry: h^{q,p} = h^{p,q} for all p, q.
bool check_hodge_symmetry(const HodgeTable& hodge);

/// Where the profile's domino numbers come from, if anywhere. A profile
/// flagged Hodge-Witt without an explicit table gets T = 0: degeneration of
/// the slope spectral sequence kills every domino.
enum class DominoSource { explicit_table, hodge_witt_zero, unknown };

struct EffectiveDominoes {
  DominoSource source = DominoSource::unknown;
  DominoTable table;  // meaningful unless source == unknown
};

EffectiveDominoes effective_dominoes(const CohomologyProfile& profile);

struct MazurOgusVerdict {
  int degree;
  Int betti;
  Int hodge_sum;
  bool pass;  // betti == hodge_sum
};

struct MazurOgusResult {
  bool applicable = false;
  std::string skip_reason;  // set when not applicable
  std::vector<MazurOgusVerdict> degrees;

  bool all_pass() const;
};

/// Per-degree check of b_n = sum_{i+j=n} h^{i,j}, the shape torsion-free
/// crystalline cohomology plus Hodge-de Rham degeneration forces. Skips
/// (applicable = false) when the Hodge table or either flag is missing.
MazurOgusResult check_mazur_ogus(const CohomologyProfile& profile);

struct EkedahlDisagreement {
  int degree;
  int i;
  int j;
  Rational predicted;  // h_W^{i,j}
  Int actual;          // h^{i,j}
};

struct EkedahlResult {
  NumberTable predicted_hodge;  // = Hodge-Witt numbers, read as Hodge numbers
  bool compared_explicit = false;
  std::vector<EkedahlDisagreement> disagreements;

  bool agrees() const { return disagreements.empty(); }
};

/// For a Mazur-Ogus profile the Hodge-Witt numbers equal the Hodge
/// numbers, so the h_W table doubles as a prediction of the Hodge table.
/// When an explicit Hodge table is present the two are compared entry by
/// entry. Throws HypothesisError when the Mazur-Ogus check does not pass
/// or the domino numbers are unknown.
EkedahlResult apply_ekedahl_equality(const CohomologyProfile& profile);

struct ParityVerdict {
  int degree;  // odd
  Int betti;
  bool pass;  // betti is even
};

/// Hodge symmetry makes Betti numbers even in odd cohomological dimension;
/// one verdict per odd degree.
std::vector<ParityVerdict> check_betti_parity(const CohomologyProfile& profile);

}  // namespace hodgewitt
