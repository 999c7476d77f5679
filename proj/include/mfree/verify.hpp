#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mfree/arrangement.hpp"
#include "mfree/diff_op.hpp"
#include "mfree/extension.hpp"
#include "mfree/poly.hpp"

namespace mfree {

// theta(alpha_H x^b) in alpha_H S for every H and every |b| = order - 1.
bool is_member(const DiffOp& theta, const Arrangement& a);

struct SaitoCertificate {
  Poly det;
  Rational c;
  int t = 0;
};

// Rows = operators, columns = d^a for |a| = m in grlex-descending order.
std::vector<std::vector<Poly>> saito_matrix(std::span<const DiffOp> ops);

// det M_m = c Q^t with c != 0; throws ZeroDet or NotPurePower otherwise.
// Homogeneous bases in l <= 3 are certified exactly by evaluation on a grid,
// anything else through the symbolic determinant.
SaitoCertificate saito_check(std::span<const DiffOp> ops, const Arrangement& a);
// Always expands the determinant symbolically.
SaitoCertificate saito_check_symbolic(std::span<const DiffOp> ops, const Arrangement& a);

// dim of {theta of order m with coefficients in S_d : theta in D^(m)(A)}.
std::int64_t oracle_dim(const Arrangement& a, int m, int d);

// Same quantity by the direct linear system, without the coordinate change.
// Slow; used to cross-check oracle_dim on small inputs.
std::int64_t oracle_dim_naive(const Arrangement& a, int m, int d);

struct OracleRow {
  int d = 0;
  std::int64_t actual = 0;
  std::int64_t predicted = 0;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  bool consistent = false;
};

// Free-module prediction sum_i s_{d - e_i}(l).
std::int64_t free_prediction(std::span<const int> exponents, int d, std::size_t dim);

OracleReport hilbert_check(const Arrangement& a, int m, std::span<const int> exponents, int d_max);
// Compares precomputed oracle dimensions (index d) against a candidate multiset.
OracleReport hilbert_compare(std::span<const std::int64_t> dims, std::span<const int> exponents, std::size_t dim);

struct IdentityReport {
  std::int64_t s_m = 0;          // s_m(3)
  std::int64_t sum_s_ix = 0;     // sum over flats of s_{i_X}(3)
  std::int64_t double_lhs = 0;   // (n~ - 1) n
  std::int64_t double_rhs = 0;   // sum (|A~_X| - 1)|A_X|
  bool flat_count_checked = false;  // only under condition (A)
  std::int64_t flat_count = 0;      // |L(A~)_1|
  std::int64_t flat_count_formula = 0;
  bool degrees_ok = false;          // deg P~_X = m - i_X and P_X | P~_X
};

// Evaluates the counting, double-count and (under condition (A)) flat-count
// identities; throws IdentityViolated on the first failure.
IdentityReport check_identities(const ExtendedArrangement& e);

// delta_X^(m - i_X)(P~_Y f) = 0 for distinct flats X, Y and every monomial f of degree i_Y.
bool annihilation_check(const ExtendedArrangement& e);

}  // namespace mfree
