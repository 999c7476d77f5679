#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mfree/arrangement.hpp"
#include "mfree/flat.hpp"
#include "mfree/poly.hpp"

namespace mfree {

// The base arrangement A enlarged to m + 2 hyperplanes.
struct ExtendedArrangement {
  Arrangement base{3};
  std::vector<Hyperplane> added;
  Arrangement full{3};  // base followed by added, in order
  int m = 0;
  // Every added hyperplane meets each 1-flat of the arrangement built before
  // it only at the origin.
  bool condition_a = false;
};

struct FlatProfile {
  Flat1 flat;                            // flat of the extended arrangement
  std::vector<std::size_t> base_local;   // indices of the base hyperplanes containing the flat
  int i_x = 0;                           // |full_X| - 2
  Poly p_tilde;                          // product of forms of full \ full_X
  Poly p;                                // product of forms of base \ base_X
};

// First t = 0, 1, 2, ... such that x1 + t x2 + t^2 x3 (x1 + t x2 when l = 2)
// avoids every 1-flat direction of `current` and is not already present.
Hyperplane generic_hyperplane(const Arrangement& current);

bool satisfies_condition_a(const Arrangement& base, std::span<const Hyperplane> added);

// Builds the extension for order m >= n - 2. With `given` unset, hyperplanes are
// added by generic_hyperplane (condition (A) holds by construction); otherwise
// exactly m + 2 - n supplied hyperplanes are used and condition (A) is recorded.
ExtendedArrangement extend(const Arrangement& a, int m,
                           const std::optional<std::vector<Hyperplane>>& given = std::nullopt);

// Flats of the base arrangement first (in dim1_flats order), then the new ones.
std::vector<FlatProfile> flat_profiles(const ExtendedArrangement& e);

}  // namespace mfree
