#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mfree {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise. Always lowest terms.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" and decimals like "1.25".
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_ratio(const Integer& num, const Integer& den);

Integer factorial(unsigned n);

// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Number of degree-m monomials in l variables, C(m + l - 1, m); zero for m < 0.
std::int64_t sym_dim(std::int64_t m, std::int64_t l);

}  // namespace mfree
