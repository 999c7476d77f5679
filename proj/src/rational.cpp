#include "mfree/rational.hpp"

#include <cctype>

#include "mfree/errors.hpp"

namespace mfree {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// GMP treats a leading 0 as an octal prefix unless the base is given.
Integer decimal(std::string_view digits) { return Integer(std::string(digits), 10); }

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw SyntaxError("malformed rational '" + std::string(text) + "'");
    Integer d = decimal(den);
    if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    value = make_ratio(decimal(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw SyntaxError("malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits = decimal(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = make_ratio(digits, scale);
  } else {
    if (!all_digits(text)) throw SyntaxError("malformed number '" + std::string(text) + "'");
    value = Rational(decimal(text));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

Rational make_ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t sym_dim(std::int64_t m, std::int64_t l) {
  if (m < 0 || l <= 0) return m == 0 ? 1 : 0;
  return binomial(m + l - 1, m);
}

}  // namespace mfree
