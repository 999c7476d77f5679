#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfree/multi_index.hpp"
#include "mfree/rational.hpp"

namespace mfree {

// Sparse polynomial in K[x_1, ..., x_l] over the rationals.
//
// Terms are kept sorted grlex-descending (leading term first) with no zero
// coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  using Term = std::pair<MultiIndex, Rational>;

  Poly() = default;
  explicit Poly(std::size_t dim) : dim_(dim) {}

  static Poly constant(std::size_t dim, const Rational& c);
  static Poly variable(std::size_t dim, std::size_t i);
  static Poly monomial(const MultiIndex& a, const Rational& c = 1);
  static Poly linear(std::span<const Rational> coeffs);
  // Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static Poly from_terms(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(int degree) const;

  const Term& leading_term() const { return terms_.front(); }
  Rational coeff(const MultiIndex& a) const;
  Rational constant_value() const;  // requires is_constant()

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly pow(unsigned k) const;

  // f * x^a.
  Poly shifted(const MultiIndex& a) const;
  // d^a f with the rule d^a x^b = b!/(b-a)! x^(b-a).
  Poly derivative(const MultiIndex& a) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Replaces x_i by images[i]; all images share one (possibly different) dimension.
  Poly substitute(std::span<const Poly> images) const;

  // Rational content: positive c with (*this / c) having coprime integer coefficients.
  Rational content() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // "c * x1^a1*x2^a2*x3^a3" terms joined by " + ", grlex-descending; "0" for zero.
  std::string to_canonical_string() const;
  // Human-readable form, e.g. "x1^2*x2 - 1/2*x3".
  std::string to_pretty_string() const;

 private:
  void check_dim(const Poly& other) const;

  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// q with f = q * g; throws NotDivisible when g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);
std::optional<Poly> try_exact_div(const Poly& f, const Poly& g);

}  // namespace mfree
