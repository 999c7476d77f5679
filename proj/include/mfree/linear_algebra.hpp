#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mfree/poly.hpp"
#include "mfree/rational.hpp"

namespace mfree {

using RationalVector = std::vector<Rational>;

// Dense row-major rational matrix used for the small exact solves.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::vector<RationalVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& row);

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix transposed() const;
  bool is_identity() const;
  bool is_unit_lower_triangular() const;

  // Reduced row echelon form in place. Columns are scanned left to right and
  // the pivot is the first nonzero entry at or below the current row.
  // Returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {v : M v = 0}, one vector per free column in ascending order.
  std::vector<RationalVector> nullspace() const;
  // Throws VerificationError when singular.
  RationalMatrix inverse() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Integer matrix rank and a basis of the rational kernel, scaled to primitive
// integer vectors with first nonzero entry positive.
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<std::int64_t>> kernel;
};
RankKernel integer_rank_kernel(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

// Scales a nonzero rational vector to coprime integers with first nonzero entry positive.
std::vector<std::int64_t> primitive_integer_vector(const RationalVector& v);

// Incremental row echelon form over the integers for large sparse systems.
//
// Rows are sparse (column, value) lists sorted by column. Each inserted row is
// reduced against existing pivots in ascending column order (so lower column
// indices are preferred as pivots), then made primitive. Fully deterministic.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::uint32_t, Integer>>;

  // Returns true when the row was independent of the rows seen so far.
  bool insert(Row row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::uint32_t, Row> pivots_;
};

// Determinant of a square polynomial matrix. Fraction-free elimination with
// row content stripping, or cofactor expansion for size <= 4.
Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m);
Poly det_bareiss(std::vector<std::vector<Poly>> m);
Poly det_cofactor(const std::vector<std::vector<Poly>>& m);

}  // namespace mfree
