#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfree/arrangement.hpp"
#include "mfree/diff_op.hpp"
#include "mfree/linear_algebra.hpp"
#include "mfree/linear_form.hpp"
#include "mfree/poly.hpp"

namespace mfree {

// A one-dimensional flat X = K v_X together with the coordinate system
// {y_1, ..., y_{l-1}, y_X} adapted to the derivation delta_X = sum_i x_i(v_X) d_i.
struct Flat1 {
  std::vector<std::int64_t> direction;
  std::vector<std::size_t> local_indices;  // into the arrangement the flat was built from
  RationalVector delta;
  LinearForm y_section;
  std::vector<LinearForm> kernel_coords;

  std::size_t dim() const { return direction.size(); }
  // Rows: kernel coordinates followed by y_X. Maps x-coordinates to y-coordinates.
  RationalMatrix coordinate_matrix() const;
};

// Flat spanned by H_i cap H_j (l = 3).
Flat1 make_flat(const Arrangement& a, std::size_t i, std::size_t j);
// Flat with the given direction; the direction is normalized to primitive form.
Flat1 make_flat_from_direction(const Arrangement& a, std::span<const std::int64_t> direction);

// y_X = x_p / x_p(v_X) for the first p with x_p(v_X) != 0.
LinearForm choose_section(std::span<const std::int64_t> direction);
// y_i = x_i - (x_i(v_X)/x_p(v_X)) x_p for i != p, ascending.
std::vector<LinearForm> kernel_basis(std::span<const std::int64_t> direction);

// f(x) rewritten in the variables (y_1, ..., y_{l-1}, y_X), and back.
Poly to_y_coords(const Poly& f, const Flat1& x);
Poly from_y_coords(const Poly& g, const Flat1& x);

// Operator written in y-coordinates (derivations dual to y_1, ..., y_X)
// converted to the x-coordinate d^a basis.
DiffOp from_y_coords(const DiffOp& op, const Flat1& x);

}  // namespace mfree
