#include "hodgewitt/hodge_witt.hpp"

#include "hodgewitt/slope_numbers.hpp"

namespace hodgewitt {

NumberTable hodge_witt_numbers(const NumberTable& slope_numbers, const DominoTable& dominoes) {
  NumberTable out;
  for (const auto& [n, row] : slope_numbers.rows()) {
    std::vector<Rational> hw(row.size());
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      Rational correction = Rational(dominoes.value(i, j)) -
                            Rational(2) * Rational(dominoes.value(i - 1, j + 1)) +
                            Rational(dominoes.value(i - 2, j + 2));
      hw[static_cast<size_t>(i)] = row[static_cast<size_t>(i)] + correction;
    }
    out.set_row(n, std::move(hw));
  }
  return out;
}

bool check_hodge_witt_symmetry(const NumberTable& hodge_witt) {
  return table_symmetric(hodge_witt);
}

bool check_hodge_symmetry(const HodgeTable& hodge) {
  for (const auto& [n, row] : hodge.rows()) {
    for (int i = 0; 2 * i < n; ++i) {
      if (row[static_cast<size_t>(i)] != row[static_cast<size_t>(n - i)]) return false;
    }
  }
  return true;
}

EffectiveDominoes effective_dominoes(const CohomologyProfile& profile) {
  if (profile.dominoes) {
    return {DominoSource::explicit_table, *profile.dominoes};
  }
  if (profile.flags.hodge_witt == true) {
    return {DominoSource::hodge_witt_zero, DominoTable{}};
  }
  return {DominoSource::unknown, DominoTable{}};
}

bool MazurOgusResult::all_pass() const {
  if (!applicable) return false;
  for (const auto& v : degrees) {
    if (!v.pass) return false;
  }
  return true;
}

MazurOgusResult check_mazur_ogus(const CohomologyProfile& profile) {
  MazurOgusResult result;
  if (!profile.hodge) {
    result.skip_reason = "no Hodge table";
    return result;
  }
  if (!profile.flags.crystalline_torsion_free || !profile.flags.hodge_de_rham_degenerates) {
    std::string missing;
    if (!profile.flags.crystalline_torsion_free) missing += "crystalline_torsion_free";
    if (!profile.flags.hodge_de_rham_degenerates) {
      if (!missing.empty()) missing += ", ";
      missing += "hodge_de_rham_degenerates";
    }
    result.skip_reason = "hypothesis not asserted: " + missing;
    return result;
  }
  result.applicable = true;
  for (int n = 0; n <= 2 * profile.dim; ++n) {
    Int betti = betti_number(profile, n);
    Int hodge_sum = 0;
    for (int i = 0; i <= n; ++i) {
      hodge_sum += profile.hodge->value(i, n - i);
    }
    result.degrees.push_back({n, betti, hodge_sum, betti == hodge_sum});
  }
  return result;
}

EkedahlResult apply_ekedahl_equality(const CohomologyProfile& profile) {
  MazurOgusResult mazur_ogus = check_mazur_ogus(profile);
  if (!mazur_ogus.applicable) {
    throw HypothesisError("Ekedahl equality needs the Mazur-Ogus hypotheses: " +
                          mazur_ogus.skip_reason);
  }
  if (!mazur_ogus.all_pass()) {
    throw HypothesisError(
        "Ekedahl equality needs b_n = sum of Hodge numbers in every degree, which fails here");
  }
  EffectiveDominoes dominoes = effective_dominoes(profile);
  if (dominoes.source == DominoSource::unknown) {
    throw HypothesisError(
        "Ekedahl equality needs domino numbers; none are given and the profile is not flagged "
        "Hodge-Witt");
  }

  EkedahlResult result;
  result.predicted_hodge = hodge_witt_numbers(slope_number_table(profile), dominoes.table);
  if (profile.hodge) {
    result.compared_explicit = true;
    for (const auto& [n, row] : result.predicted_hodge.rows()) {
      for (int i = 0; i <= n; ++i) {
        int j = n - i;
        Int actual = profile.hodge->value(i, j);
        if (!(row[static_cast<size_t>(i)] == Rational(actual))) {
          result.disagreements.push_back({n, i, j, row[static_cast<size_t>(i)], actual});
        }
      }
    }
  }
  return result;
}

std::vector<ParityVerdict> check_betti_parity(const CohomologyProfile& profile) {
  std::vector<ParityVerdict> out;
  for (int n = 1; n <= 2 * profile.dim; n += 2) {
    Int betti = betti_number(profile, n);
    out.push_back({n, betti, betti % 2 == 0});
  }
  return out;
}

}  // namespace hodgewitt
