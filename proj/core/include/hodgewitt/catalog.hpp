#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hodgewitt/profile.hpp"

namespace hodgewitt {

// Thrown when an id does not resolve to a catalog entry. suggestion() holds
// the closest known id when one is reasonably near, otherwise it is empty.
class UnknownEntryError : public std::runtime_error {
 public:
  explicit UnknownEntryError(const std::string& message, std::string suggestion = {});

  const std::string& suggestion() const { return suggestion_; }

 private:
  std::string suggestion_;
};

enum class EllipticKind { ordinary, supersingular };

// A single point: one class of slope 0 in degree 0. Acts as the identity for
// kunneth_product.
CohomologyProfile point();

CohomologyProfile elliptic_curve(EllipticKind kind);

// Smooth curve of genus g with p-rank f, 0 <= f <= g. Degree-1 slopes are
// {0: f, 1/2: 2(g-f), 1: f}, the unique layout compatible with slope duality
// and integral break points. Throws std::out_of_range on bad parameters.
CohomologyProfile curve(int genus, int p_rank);

// K3 surface of finite height h, 1 <= h <= 11. Degree-2 slopes are
// {1-1/h: h, 1: 22-2h, 1+1/h: h}. Throws std::out_of_range on bad height.
CohomologyProfile k3(int height);

// Supersingular K3 surface: all 22 degree-2 slopes equal 1, with domino
// number T^{0,2} = 1 and the Hodge-Witt flag set to false. The domino value
// is forced: rank and Hodge agreement give h_W^{0,2} = h^{0,2} = 1 while the
// slope number m^{0,2} is 0.
CohomologyProfile k3_supersingular();

// Abelian variety of dimension g >= 1 with p-rank f, 0 <= f <= g. Degree-n
// slope data is the n-th wedge power of the degree-1 data; Hodge numbers are
// h^{i,j} = C(g,i) C(g,j). Hodge-Witt exactly when f >= g-1. Throws
// std::out_of_range on bad parameters.
CohomologyProfile abelian_variety(int dimension, int p_rank);

// Multiset of sums over all n-element sub-multisets of s, multiplicity
// treated as distinct copies. The result carries degree n * s.degree().
// Throws std::out_of_range unless 0 <= n <= total multiplicity of s.
SlopeMultiset wedge_power(const SlopeMultiset& s, int n);

// Profile of a product: slopes add with multiplicities multiplying across
// bidegrees, Hodge tables convolve when both factors carry one. The
// Hodge-Witt flag resolves only when one factor is certified ordinary (its
// Hodge table is present and Newton equals Hodge); it then copies the other
// factor's flag. Dominoes are known-zero when the flag resolves true,
// otherwise unknown.
CohomologyProfile kunneth_product(const CohomologyProfile& a, const CohomologyProfile& b);

struct CatalogEntry {
  std::string id;
  std::string description;
};

// Concrete entries covering every generator family. Each id resolves through
// catalog_entry; parameterized families also accept other parameters in the
// same id syntax.
std::vector<CatalogEntry> catalog_list();

// Resolves ids of the forms "point", "elliptic:ordinary",
// "elliptic:supersingular", "curve:g=<g>,f=<f>", "k3:h=<h>",
// "k3:supersingular", "av:g=<g>,f=<f>" and, recursively,
// "product:<id>*<id>". Throws UnknownEntryError for anything else, including
// out-of-range parameters.
CohomologyProfile catalog_entry(const std::string& id);

}  // namespace hodgewitt
