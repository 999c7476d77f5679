#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mfree/arrangement.hpp"
#include "mfree/diff_op.hpp"
#include "mfree/exponents.hpp"
#include "mfree/extension.hpp"
#include "mfree/linear_algebra.hpp"
#include "mfree/verify.hpp"

namespace mfree {

struct Provenance {
  std::vector<std::int64_t> flat_direction;  // empty when not attached to a flat
  int j = 0;
  int gen_index = 0;
};

struct FreeBasis {
  std::vector<DiffOp> operators;
  std::vector<int> degrees;  // degrees[i] = deg operators[i]
  std::vector<Provenance> provenance;
  std::optional<SaitoCertificate> saito;

  ExponentMultiset exponents(int m) const;
};

struct BuildOptions {
  bool check_membership = true;
  bool check_saito = true;
};

// Generators of D^(j) of a 2-arrangement with k lines in the regime j <= k - 1:
// the Euler operator E_j followed by j operators of degree k - 1.
std::vector<DiffOp> basis_2arr(const Arrangement& a2, int j);

// Generators of D^(j) of a 2-arrangement for every j >= 0. Uses basis_2arr when
// j <= k - 1; otherwise extends the lines generically to j + 1 lines and takes
// P_L delta_L^j per line. The empty arrangement gives all d^a.
std::vector<DiffOp> basis_2arr_any(const Arrangement& a2, int j);

// The pencil A_X written in the kernel coordinates of X, as a 2-arrangement.
Arrangement pencil_arrangement(const Arrangement& a, const Flat1& x);

// Generators of D^(j)(A_X, V_X) as order-j operators in the x-coordinates.
std::vector<DiffOp> pencil_basis(const Arrangement& a, const Flat1& x, int j);

FreeBasis basis_3arr(const ExtendedArrangement& e, const BuildOptions& options = {});

// Rank <= 2 arrangements in l = 3 (including the empty one).
FreeBasis basis_nonessential(const Arrangement& a, int m, const BuildOptions& options = {});

// Any arrangement with l = 2.
FreeBasis basis_plane(const Arrangement& a, int m, const BuildOptions& options = {});

struct DualEntry {
  std::vector<std::int64_t> flat_direction;
  int j = 0;
  MultiIndex u;  // exponents of the kernel coordinates (y_1, y_2)
};

struct DualPair {
  std::vector<Poly> b;
  std::vector<DiffOp> b_star;
  std::vector<DualEntry> provenance;
};

DualPair dual_pair(const ExtendedArrangement& e);
// Entry (r, c) = b_star[r](b[c]).
RationalMatrix pairing_matrix(const DualPair& pair);

}  // namespace mfree
