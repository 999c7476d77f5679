#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfree/multi_index.hpp"
#include "mfree/poly.hpp"

namespace mfree {

// Homogeneous order-m operator sum_{|a| = m} f_a d^a with polynomial coefficients.
class DiffOp {
 public:
  using CoeffMap = std::map<MultiIndex, Poly, GrlexGreater>;

  DiffOp(std::size_t dim, int order);

  static DiffOp identity(std::size_t dim);
  static DiffOp monomial(const MultiIndex& a, const Poly& coeff);
  static DiffOp monomial(const MultiIndex& a);

  std::size_t dim() const { return dim_; }
  int order() const { return order_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Poly coeff(const MultiIndex& a) const;

  void add_term(const MultiIndex& a, const Poly& f);

  // Common degree i of all coefficients (so the operator lies in S_i D^(m)(S)).
  // nullopt for the zero operator or mixed degrees.
  std::optional<int> degree() const;
  bool is_constant_coefficient() const;

  DiffOp operator+(const DiffOp& other) const;
  DiffOp operator-(const DiffOp& other) const;
  DiffOp operator*(const Rational& c) const;
  // Left multiplication by a polynomial.
  friend DiffOp operator*(const Poly& f, const DiffOp& op);

  // Coefficient-wise substitution (see Poly::substitute); keeps the d^a keys.
  DiffOp map_coeffs(std::span<const Poly> images) const;

  // Scales to coprime integer coefficients with a positive leading coefficient
  // (leading = grlex-first d^a, then its leading monomial).
  DiffOp normalized() const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  // "[a] (poly)" pieces joined by " + "; "0" for the zero operator.
  std::string to_pretty_string() const;

 private:
  void check_compatible(const DiffOp& other) const;

  std::size_t dim_;
  int order_;
  CoeffMap coeffs_;
};

// sum_a f_a * d^a(f).
Poly apply_op(const DiffOp& theta, const Poly& f);

// (sum_i c_i d_i)^k expanded with multinomial coefficients k!/a! c^a.
DiffOp power_of_derivation(std::span<const Rational> c, int k);

// theta * eta where eta has constant coefficients.
DiffOp compose_constant(const DiffOp& theta, const DiffOp& eta);

// E_m = sum_{|a| = m} (m!/a!) x^a d^a; acts on degree-d forms as d(d-1)...(d-m+1).
DiffOp euler_op(int m, std::size_t dim);

}  // namespace mfree
