#pragma once

#include <span>
#include <string>

#include "mfree/linear_algebra.hpp"
#include "mfree/poly.hpp"

namespace mfree {

// Homogeneous degree-1 polynomial sum_i c_i x_i.
struct LinearForm {
  RationalVector coeffs;

  std::size_t dim() const { return coeffs.size(); }
  Poly poly() const { return Poly::linear(coeffs); }
  // Value at a vector, i.e. the derivation sum_i v_i d_i applied to the form.
  Rational at(std::span<const Rational> v) const;
  Rational at(std::span<const std::int64_t> v) const;
  std::string to_string() const { return poly().to_pretty_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

}  // namespace mfree
