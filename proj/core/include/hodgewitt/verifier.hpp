#pragma once

#include <array>
#include <string_view>

#include "hodgewitt/profile.hpp"
#include "hodgewitt/report.hpp"

namespace hodgewitt {

namespace checks {
inline constexpr std::string_view kValidate = "validate";
inline constexpr std::string_view kDuality = "duality";
inline constexpr std::string_view kSlopeSymmetry = "slope-symmetry";
inline constexpr std::string_view kHypotheses = "hypotheses";
inline constexpr std::string_view kHodgeWittNumbers = "hodge-witt-numbers";
inline constexpr std::string_view kMazurOgus = "mazur-ogus";
inline constexpr std::string_view kEkedahlEquality = "ekedahl-equality";
inline constexpr std::string_view kHodgeSymmetry = "hodge-symmetry";
inline constexpr std::string_view kBettiParity = "betti-parity";

inline constexpr std::array<std::string_view, 9> kAll = {
    kValidate,        kDuality,   kSlopeSymmetry,   kHypotheses,  kHodgeWittNumbers,
    kMazurOgus,       kEkedahlEquality, kHodgeSymmetry, kBettiParity};
}  // namespace checks

/// Runs the whole verification chain on one profile:
///
///   slope-number symmetry + Hodge-Witt  =>  Hodge-Witt symmetry
///   + torsion-free crystalline cohomology + Hodge-de Rham degeneration
///   (Mazur-Ogus, then the Ekedahl equality h_W = h)  =>  Hodge symmetry
///
/// Every check appears in the report, in the fixed order of checks::kAll.
/// Checks whose prerequisites are missing are skipped with a reason, never
/// errors; the conclusion (hodge-symmetry) is only evaluated when all
/// three hypotheses hold.
VerificationReport verify_main_theorem(const CohomologyProfile& profile);

}  // namespace hodgewitt
