#include "mfree/exponents.hpp"

#include <algorithm>
#include <numeric>

#include "mfree/errors.hpp"
#include "mfree/flat.hpp"

namespace mfree {

int ExponentMultiset::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string ExponentMultiset::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s + "]";
}

ExponentMultiset make_multiset(std::vector<int> entries, int m, ExponentMultiset::Source source) {
  std::sort(entries.begin(), entries.end());
  return ExponentMultiset{std::move(entries), m, source};
}

ExponentMultiset exp_2arr(int k, int m) {
  if (k < 0 || m < 0) throw UserError("exp_2arr needs k >= 0 and m >= 0");
  std::vector<int> e;
  if (m <= k - 1) {
    e.push_back(m);
    e.insert(e.end(), static_cast<std::size_t>(m), k - 1);
  } else {
    e.insert(e.end(), static_cast<std::size_t>(k), k - 1);
    e.insert(e.end(), static_cast<std::size_t>(m - k + 1), k);
  }
  return make_multiset(std::move(e), m, ExponentMultiset::Source::ClosedForm);
}

ExponentMultiset exp_product(const std::vector<ExponentMultiset>& first,
                             const std::vector<ExponentMultiset>& second, int m) {
  if (static_cast<int>(first.size()) <= m || static_cast<int>(second.size()) <= m)
    throw UserError("exp_product needs exp_0 .. exp_m for both factors");
  std::vector<int> e;
  for (int i = 0; i <= m; ++i)
    for (int d : first[static_cast<std::size_t>(i)].entries)
      for (int f : second[static_cast<std::size_t>(m - i)].entries) e.push_back(d + f);
  return make_multiset(std::move(e), m, ExponentMultiset::Source::ClosedForm);
}

ExponentMultiset exp_3arr_closed(const Arrangement& a, int m) {
  if (a.dim() != 3 || !is_essential(a)) throw NotEssential("closed-form exponents need an essential 3-arrangement");
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  if (m < n - 2)
    throw BadM("m >= n - 2 is required (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  std::vector<int> e;
  std::int64_t excess = 0;  // sum over flats of (|A_X| - 1)
  for (const auto& x : dim1_flats(a)) {
    const std::int64_t size = static_cast<std::int64_t>(x.local_indices.size());
    for (std::int64_t j = 0; j <= size - 2; ++j) e.push_back(static_cast<int>(j + n - size));
    excess += size - 1;
  }
  const std::int64_t count_n_minus_1 = (m + 2) * n - n * n + binomial(n, 2) - excess;
  const std::int64_t count_n = binomial(m + 2 - n, 2);
  if (count_n_minus_1 < 0) throw IdentityViolated("negative multiplicity in the closed-form exponents");
  e.insert(e.end(), static_cast<std::size_t>(count_n_minus_1), static_cast<int>(n - 1));
  e.insert(e.end(), static_cast<std::size_t>(count_n), static_cast<int>(n));
  auto result = make_multiset(std::move(e), m, ExponentMultiset::Source::ClosedForm);
  if (static_cast<std::int64_t>(result.entries.size()) != sym_dim(m, 3))
    throw IdentityViolated("closed-form exponent count " + std::to_string(result.entries.size()) +
                           " differs from s_m(3) = " + std::to_string(sym_dim(m, 3)));
  if (result.sum() != n * binomial(m + 1, 2))
    throw IdentityViolated("closed-form exponent sum " + std::to_string(result.sum()) + " differs from n*C(m+1,2)");
  return result;
}

ExponentMultiset exp_nonessential(const Arrangement& a, int m) {
  if (a.dim() != 3) throw UserError("exp_nonessential expects a 3-arrangement");
  if (is_essential(a)) throw UserError("arrangement is essential");
  // Product of a k-line 2-arrangement with the empty 1-arrangement (exp_j = {0}).
  const int k = static_cast<int>(a.size());
  std::vector<ExponentMultiset> lines;
  std::vector<ExponentMultiset> empty_line;
  for (int j = 0; j <= m; ++j) {
    lines.push_back(exp_2arr(k, j));
    empty_line.push_back(make_multiset({0}, j, ExponentMultiset::Source::ClosedForm));
  }
  return exp_product(lines, empty_line, m);
}

}  // namespace mfree
