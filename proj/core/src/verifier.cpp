#include "hodgewitt/verifier.hpp"

#include <optional>

#include "hodgewitt/hodge_witt.hpp"
#include "hodgewitt/slope_numbers.hpp"

namespace hodgewitt {

namespace {

std::string hw_label(int i, int j) {
  return "h_W^{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::vector<Evidence> symmetry_evidence(const NumberTable& table, const std::string& symbol) {
  std::vector<Evidence> out;
  for (const auto& entry : asymmetric_entries(table)) {
    out.push_back({entry.degree, entry.i, entry.j,
                   symbol + "^{" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                       "} = " + entry.value_ij.str() + " but " + symbol + "^{" +
                       std::to_string(entry.j) + "," + std::to_string(entry.i) + "} = " +
                       entry.value_ji.str()});
  }
  return out;
}

}  // namespace

VerificationReport verify_main_theorem(const CohomologyProfile& profile) {
  VerificationReport report;
  report.profile = profile.name;

  auto add = [&report](std::string_view id, Verdict verdict, std::string reason,
                       std::vector<Evidence> evidence = {}) {
    report.checks.push_back(
        {std::string(id), verdict, std::move(reason), std::move(evidence)});
  };

  // validate
  const std::vector<Violation> violations = validate_profile(profile);
  const bool valid = violations.empty();
  if (valid) {
    add(checks::kValidate, Verdict::pass, "all profile invariants hold");
  } else {
    std::vector<Evidence> evidence;
    for (const auto& v : violations) {
      evidence.push_back({v.degree, v.i, v.j, v.code + ": " + v.message});
    }
    add(checks::kValidate, Verdict::fail,
        std::to_string(violations.size()) + " invariant violation(s)", std::move(evidence));
  }
  const std::string invalid_reason = "profile failed validation";

  // duality
  bool duality_ok = false;
  if (!valid) {
    add(checks::kDuality, Verdict::skipped, invalid_reason);
  } else {
    auto violations_d = duality_violations(profile);
    duality_ok = violations_d.empty();
    if (duality_ok) {
      add(checks::kDuality, Verdict::pass,
          "every slope lambda in degree n is matched by n - lambda with equal multiplicity");
    } else {
      std::vector<Evidence> evidence;
      for (const auto& v : violations_d) {
        evidence.push_back({v.degree, std::nullopt, std::nullopt,
                            "slope " + v.slope.str() + " has multiplicity " + v.mult.str() +
                                " but dual slope " + (Rational(v.degree) - v.slope).str() +
                                " has multiplicity " + v.dual_mult.str()});
      }
      add(checks::kDuality, Verdict::fail, "slope duality violated", std::move(evidence));
    }
  }

  // slope-symmetry
  std::optional<NumberTable> m_table;
  if (!valid) {
    add(checks::kSlopeSymmetry, Verdict::skipped, invalid_reason);
  } else {
    m_table = slope_number_table(profile);
    auto evidence = symmetry_evidence(*m_table, "m");
    if (evidence.empty()) {
      add(checks::kSlopeSymmetry, Verdict::pass, "m^{i,j} = m^{j,i} for all i, j");
    } else {
      add(checks::kSlopeSymmetry, Verdict::fail, "slope numbers are not symmetric",
          std::move(evidence));
    }
  }

  // hypotheses
  bool hypotheses_ok = false;
  if (!valid) {
    add(checks::kHypotheses, Verdict::skipped, invalid_reason);
  } else {
    std::vector<std::string> missing;
    if (profile.flags.hodge_witt != true) {
      missing.push_back(profile.flags.hodge_witt.has_value() ? "hodge_witt is false"
                                                             : "hodge_witt is unknown");
    }
    if (!profile.flags.crystalline_torsion_free) {
      missing.push_back("crystalline_torsion_free is false");
    }
    if (!profile.flags.hodge_de_rham_degenerates) {
      missing.push_back("hodge_de_rham_degenerates is false");
    }
    hypotheses_ok = missing.empty();
    if (hypotheses_ok) {
      add(checks::kHypotheses, Verdict::pass,
          "Hodge-Witt, torsion-free crystalline cohomology and Hodge-de Rham degeneration all "
          "asserted");
    } else {
      std::string reason = "hypothesis missing: ";
      for (size_t k = 0; k < missing.size(); ++k) {
        if (k) reason += "; ";
        reason += missing[k];
      }
      add(checks::kHypotheses, Verdict::skipped, reason);
    }
  }

  // hodge-witt-numbers
  std::optional<NumberTable> hw_table;
  if (!valid) {
    add(checks::kHodgeWittNumbers, Verdict::skipped, invalid_reason);
  } else {
    EffectiveDominoes dominoes = effective_dominoes(profile);
    if (dominoes.source == DominoSource::unknown) {
      add(checks::kHodgeWittNumbers, Verdict::skipped,
          "domino numbers unknown: no table given and the Hodge-Witt hypothesis is not asserted");
    } else {
      hw_table = hodge_witt_numbers(*m_table, dominoes.table);
      std::string source_note =
          dominoes.source == DominoSource::explicit_table
              ? "domino numbers from the explicit table"
              : "domino numbers taken as zero (Hodge-Witt: the slope spectral sequence "
                "degenerates)";
      auto evidence = symmetry_evidence(*hw_table, "h_W");
      bool symmetric = evidence.empty();
      for (const auto& [n, row] : hw_table->rows()) {
        for (int i = 0; i <= n; ++i) {
          if (row[static_cast<size_t>(i)].is_negative()) {
            evidence.push_back({n, i, n - i,
                                "negative value (informational): " + hw_label(i, n - i) + " = " +
                                    row[static_cast<size_t>(i)].str()});
          }
        }
      }
      if (symmetric) {
        add(checks::kHodgeWittNumbers, Verdict::pass,
            source_note + "; h_W^{i,j} = h_W^{j,i} for all i, j", std::move(evidence));
      } else {
        add(checks::kHodgeWittNumbers, Verdict::fail,
            source_note + "; Hodge-Witt numbers are not symmetric", std::move(evidence));
      }
    }
  }

  // mazur-ogus
  if (!valid) {
    add(checks::kMazurOgus, Verdict::skipped, invalid_reason);
  } else {
    MazurOgusResult mazur_ogus = check_mazur_ogus(profile);
    if (!mazur_ogus.applicable) {
      add(checks::kMazurOgus, Verdict::skipped, mazur_ogus.skip_reason);
    } else {
      std::vector<Evidence> evidence;
      for (const auto& v : mazur_ogus.degrees) {
        if (!v.pass) {
          evidence.push_back({v.degree, std::nullopt, std::nullopt,
                              "b_" + std::to_string(v.degree) + " = " + v.betti.str() +
                                  " but the Hodge row sums to " + v.hodge_sum.str()});
        }
      }
      if (evidence.empty()) {
        add(checks::kMazurOgus, Verdict::pass,
            "rank of crystalline cohomology matches the Hodge numbers in every degree");
      } else {
        add(checks::kMazurOgus, Verdict::fail, "b_n != sum of Hodge numbers",
            std::move(evidence));
      }
    }
  }

  // ekedahl-equality
  if (!valid) {
    add(checks::kEkedahlEquality, Verdict::skipped, invalid_reason);
  } else {
    try {
      EkedahlResult ekedahl = apply_ekedahl_equality(profile);
      if (!ekedahl.compared_explicit) {
        add(checks::kEkedahlEquality, Verdict::pass,
            "Hodge numbers predicted from Hodge-Witt numbers; no explicit table to compare");
      } else if (ekedahl.agrees()) {
        add(checks::kEkedahlEquality, Verdict::pass,
            "h_W^{i,j} = h^{i,j} for all i, j");
      } else {
        std::vector<Evidence> evidence;
        for (const auto& d : ekedahl.disagreements) {
          evidence.push_back({d.degree, d.i, d.j,
                              "predicted " + hw_label(d.i, d.j) + " = " + d.predicted.str() +
                                  " but explicit h^{" + std::to_string(d.i) + "," +
                                  std::to_string(d.j) + "} = " + d.actual.str()});
        }
        add(checks::kEkedahlEquality, Verdict::fail,
            "Hodge-Witt numbers disagree with the explicit Hodge table", std::move(evidence));
      }
    } catch (const HypothesisError& e) {
      add(checks::kEkedahlEquality, Verdict::skipped, e.what());
    }
  }

  // hodge-symmetry (the conclusion)
  if (!valid) {
    add(checks::kHodgeSymmetry, Verdict::skipped, invalid_reason);
  } else if (!hypotheses_ok) {
    const CheckResult* hypotheses = report.find(checks::kHypotheses);
    add(checks::kHodgeSymmetry, Verdict::skipped,
        "conclusion not evaluated: " + (hypotheses ? hypotheses->reason : "hypotheses missing"));
  } else {
    std::vector<Evidence> evidence;
    if (hw_table) {
      for (auto& e : symmetry_evidence(*hw_table, "h")) {
        e.note = "predicted table: " + e.note;
        evidence.push_back(std::move(e));
      }
    }
    if (profile.hodge) {
      NumberTable explicit_table;
      for (const auto& [n, row] : profile.hodge->rows()) {
        std::vector<Rational> as_rationals;
        as_rationals.reserve(row.size());
        for (const Int& h : row) as_rationals.emplace_back(h);
        explicit_table.set_row(n, std::move(as_rationals));
      }
      for (auto& e : symmetry_evidence(explicit_table, "h")) {
        e.note = "explicit table: " + e.note;
        evidence.push_back(std::move(e));
      }
    }
    if (!hw_table && !profile.hodge) {
      add(checks::kHodgeSymmetry, Verdict::skipped, "no Hodge table and no prediction available");
    } else if (evidence.empty()) {
      add(checks::kHodgeSymmetry, Verdict::pass, "h^{p,q} = h^{q,p} for all p, q");
    } else {
      add(checks::kHodgeSymmetry, Verdict::fail, "Hodge symmetry fails", std::move(evidence));
    }
  }

  // betti-parity
  if (!valid) {
    add(checks::kBettiParity, Verdict::skipped, invalid_reason);
  } else if (!duality_ok) {
    add(checks::kBettiParity, Verdict::skipped,
        "slope duality violated, parity is not meaningful");
  } else {
    std::vector<Evidence> evidence;
    for (const auto& v : check_betti_parity(profile)) {
      if (!v.pass) {
        evidence.push_back({v.degree, std::nullopt, std::nullopt,
                            "b_" + std::to_string(v.degree) + " = " + v.betti.str() + " is odd"});
      }
    }
    if (evidence.empty()) {
      add(checks::kBettiParity, Verdict::pass, "all odd-degree Betti numbers are even");
    } else {
      add(checks::kBettiParity, Verdict::fail, "odd Betti number in odd degree",
          std::move(evidence));
    }
  }

  report.overall = compute_overall(report.checks);
  return report;
}

}  // namespace hodgewitt
