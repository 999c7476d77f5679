#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mfree/arrangement.hpp"
#include "mfree/diff_op.hpp"
#include "mfree/poly.hpp"

namespace mfree::testing {

inline Arrangement running_example() { return parse_arrangement("x1; x2; x3; x1-x2"); }

inline Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> den_dist(1, 3);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(-bound * den, bound * den);
  return make_rational(num_dist(rng), den);
}

// Essential 3-arrangement with n distinct hyperplanes, coefficients p/q in [-3, 3].
inline Arrangement random_essential_3arr(std::mt19937_64& rng, int n) {
  for (;;) {
    std::vector<Hyperplane> hs;
    while (static_cast<int>(hs.size()) < n) {
      RationalVector c{random_rational(rng, 3), random_rational(rng, 3), random_rational(rng, 3)};
      if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) continue;
      Hyperplane h = Hyperplane::from_rational(c);
      if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(h);
    }
    Arrangement a(3, hs);
    if (is_essential(a)) return a;
  }
}

inline Poly random_homogeneous(std::mt19937_64& rng, std::size_t dim, int degree, int max_terms) {
  const auto monos = monomials_of_degree(dim, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<Poly::Term> terms;
  for (int t = count(rng); t > 0; --t) terms.emplace_back(monos[pick(rng)], random_rational(rng, 3));
  return Poly::from_terms(dim, std::move(terms));
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t dim, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  Poly p(dim);
  for (int t = count(rng); t > 0; --t) p += random_homogeneous(rng, dim, deg(rng), 1);
  return p;
}

inline DiffOp random_op(std::mt19937_64& rng, std::size_t dim, int order, int degree, int max_terms) {
  DiffOp op(dim, order);
  for (const auto& a : monomials_of_degree(dim, order))
    if (rng() % 2 == 0) op.add_term(a, random_homogeneous(rng, dim, degree, max_terms));
  return op;
}

// Leibniz expansion over all permutations; independent of the library determinants.
inline Poly det_leibniz(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total = n ? Poly(m[0][0].dim()) : Poly::constant(1, 1);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(m[0][0].dim(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sorted copy.
inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace mfree::testing
