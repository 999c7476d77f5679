#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfree/linear_algebra.hpp"
#include "mfree/linear_form.hpp"
#include "mfree/poly.hpp"

namespace mfree {

struct Flat1;

// Linear hyperplane {alpha_H = 0} stored by its primitive integer normal
// (gcd 1, first nonzero entry positive), so equality is structural.
class Hyperplane {
 public:
  explicit Hyperplane(std::span<const std::int64_t> normal);
  static Hyperplane from_rational(std::span<const Rational> coeffs);

  std::size_t dim() const { return normal_.size(); }
  std::span<const std::int64_t> normal() const { return normal_; }
  LinearForm form() const;
  Poly poly() const { return form().poly(); }
  // alpha_H(v).
  Integer eval(std::span<const std::int64_t> v) const;
  std::string to_string() const { return poly().to_pretty_string(); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<std::int64_t> normal_;
};

// Central arrangement in dimension l in {2, 3}; input order is preserved and
// drives every downstream iteration order.
class Arrangement {
 public:
  explicit Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  bool contains(const Hyperplane& h) const;
  // Throws Duplicate when h is already present.
  Arrangement with(const Hyperplane& h) const;
  Arrangement subset(std::span<const std::size_t> indices) const;

  std::vector<std::vector<std::int64_t>> normals() const;
  // "x1; x2; x3; x1 - x2"
  std::string to_forms_string() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Parses one linear form "c1*x1 + x2 - 3/2*x3" over x1..x_dim.
// Throws SyntaxError, NotCentral (nonzero constant term) or ZeroForm.
Hyperplane parse_linear_form(std::string_view text, std::size_t dim);

// Accepts forms separated by ';' or newlines, a JSON coefficient matrix, or a
// JSON object {"l": 3, "hyperplanes": [[...]]} / {"l": 3, "forms": [...]}.
// `dim` is used when the input does not state l; defaults to 3.
Arrangement parse_arrangement(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

Poly defining_polynomial(const Arrangement& a);

RankKernel rank_and_kernel(const Arrangement& a);
bool is_essential(const Arrangement& a);

// Hyperplanes containing the flat, in arrangement order.
Arrangement localization(const Arrangement& a, const Flat1& x);
std::vector<std::size_t> localization_indices(const Arrangement& a, std::span<const std::int64_t> direction);

// One-dimensional flats: for l = 3 one per distinct pairwise intersection line,
// for l = 2 one per hyperplane. Ordered by first occurrence over pairs (i < j).
std::vector<Flat1> dim1_flats(const Arrangement& a);

}  // namespace mfree
