#pragma once

#include <string>
#include <vector>

#include "mfree/arrangement.hpp"

namespace mfree {

struct ExponentMultiset {
  enum class Source { ClosedForm, FromBasis };

  std::vector<int> entries;  // ascending
  int m = 0;
  Source source = Source::ClosedForm;

  int sum() const;
  std::string to_string() const;  // "[1,2,2,2,2,3]"
};

ExponentMultiset make_multiset(std::vector<int> entries, int m, ExponentMultiset::Source source);

// Exponents of a 2-arrangement with k lines:
// {m, (k-1)^m} for m <= k - 1, {(k-1)^k, k^(m-k+1)} for m >= k.
ExponentMultiset exp_2arr(int k, int m);

// Product of two arrangements: union over i of {d + e : d in first[i], e in second[m - i]}.
// Both inputs list exp_0, ..., exp_m.
ExponentMultiset exp_product(const std::vector<ExponentMultiset>& first,
                             const std::vector<ExponentMultiset>& second, int m);

// Closed-form m-exponents of an essential 3-arrangement for m >= n - 2, computed
// from the localization sizes of its 1-flats. Validates count and sum.
ExponentMultiset exp_3arr_closed(const Arrangement& a, int m);

// Exponents of a rank <= 2 arrangement in l = 3: union over j <= m of exp_j of
// the associated 2-arrangement.
ExponentMultiset exp_nonessential(const Arrangement& a, int m);

}  // namespace mfree
