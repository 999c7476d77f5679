#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mfree/rational.hpp"

namespace mfree {

// Exponent vector a = (a_1, ..., a_l). Doubles as the key of x^a and of d^a.
class MultiIndex {
 public:
  static constexpr std::size_t kMaxDim = 4;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim);
  MultiIndex(std::initializer_list<int> exps);
  static MultiIndex from_span(std::span<const int> exps);
  static MultiIndex unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value);

  int total() const;
  bool divides(const MultiIndex& other) const;  // componentwise <=
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;  // requires divides

  // a! = a_1! ... a_l!
  Integer factorial() const;

  // Appends a zero exponent (embeds into one more variable).
  MultiIndex extended(std::size_t new_dim) const;

  std::vector<int> to_vector() const;
  std::string to_string() const;  // "[a1,a2,a3]"

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  // Graded lexicographic order with x1 > x2 > ... > xl.
  friend std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<std::uint16_t, kMaxDim> exps_{};
  std::uint8_t dim_ = 0;
};

// Strict weak order putting grlex-larger indices first.
struct GrlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

// All exponent vectors of total degree `degree` in `dim` variables, grlex-descending.
std::vector<MultiIndex> monomials_of_degree(std::size_t dim, int degree);

}  // namespace mfree
