#pragma once

#include <stdexcept>
#include <string>

#include "hodgewitt/profile.hpp"

namespace hodgewitt {

// Raised for structural problems in a profile document: malformed JSON,
// wrong types, unknown fields, duplicate degrees, bad rational syntax,
// numbers outside the file format's 64-bit range. Value-level problems
// (negative multiplicities, out-of-range slopes, ...) parse fine and are
// reported by validate_profile instead.
class ProfileParseError : public std::runtime_error {
 public:
  ProfileParseError(std::string path, const std::string& message);

  // JSON-pointer-style location of the offending element, "" for the root.
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Parses the profile document format:
//   {"name": str, "dim": int,
//    "flags": {"hodge_witt": bool|null, "crystalline_torsion_free": bool,
//              "hodge_de_rham_degenerates": bool},
//    "cohomology": [{"degree": int, "slopes": [{"slope": "a/b", "mult": int}]}],
//    "hodge": [{"degree": int, "numbers": [int, ...]}]          (optional)
//    "dominoes": [{"i": int, "j": int, "T": int}]}              (optional)
// Unknown fields are rejected; degrees may appear in any order but not
// repeat. Degrees 0..2*dim absent from "cohomology" become empty multisets.
// An absent "dominoes" key means unknown; "dominoes": [] means known zero.
CohomologyProfile parse_profile(const std::string& text);

// Inverse of parse_profile, with stable key order and ascending degrees, so
// equal profiles serialize to identical text. Throws std::domain_error when
// a value does not fit the file format's 64-bit integers.
std::string serialize_profile(const CohomologyProfile& profile);

}  // namespace hodgewitt
