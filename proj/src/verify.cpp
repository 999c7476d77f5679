#include "mfree/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mfree/errors.hpp"
#include "mfree/linear_algebra.hpp"

namespace mfree {

bool is_member(const DiffOp& theta, const Arrangement& a) {
  if (theta.dim() != a.dim()) throw DimensionMismatch("operator and arrangement dimensions differ");
  if (theta.order() == 0) return true;
  const auto monomials = monomials_of_degree(a.dim(), theta.order() - 1);
  for (const auto& h : a.hyperplanes()) {
    const Poly alpha = h.poly();
    for (const auto& b : monomials) {
      const Poly g = apply_op(theta, alpha.shifted(b));
      if (!try_exact_div(g, alpha)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Poly>> saito_matrix(std::span<const DiffOp> ops) {
  if (ops.empty()) return {};
  const auto columns = monomials_of_degree(ops.front().dim(), ops.front().order());
  std::vector<std::vector<Poly>> m;
  for (const auto& op : ops) {
    if (op.order() != ops.front().order() || op.dim() != ops.front().dim())
      throw DimensionMismatch("operators of one basis must share order and dimension");
    std::vector<Poly> row;
    for (const auto& a : columns) row.push_back(op.coeff(a));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

// Fraction-free Gaussian elimination; the input is consumed.
Integer det_integer(std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  Integer prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return negate ? Integer(-prev) : prev;
}

// Entry of the dehomogenized (x1 = 1) matrix with integer coefficients,
// stored as a table over the exponents of x2 and x3.
struct IntegerEntry {
  std::vector<std::pair<std::pair<int, int>, Integer>> terms;
};

// Certifies det M = c Q^t by evaluation when every row is homogeneous and l <= 3.
// Both sides are homogeneous of degree D, so they agree iff their x1 = 1
// restrictions agree, and two polynomials of degree <= D in each remaining
// variable agree iff they agree on a (D+1)^(l-1) grid. Returns nullopt when the
// shortcut does not apply or the identity fails; the caller then falls back to
// the symbolic determinant, which classifies the failure.
std::optional<SaitoCertificate> saito_by_evaluation(std::span<const DiffOp> ops, const Poly& q) {
  const std::size_t l = q.dim();
  if (l < 2 || l > 3) return std::nullopt;
  const auto matrix = saito_matrix(ops);
  const std::size_t n = matrix.size();
  int total = 0;
  Integer scale = 1;  // product of the row scalings
  std::vector<std::vector<IntegerEntry>> entries(n, std::vector<IntegerEntry>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto deg = ops[r].degree();
    if (!deg) return std::nullopt;
    total += *deg;
    Integer lcm = 1;
    for (const auto& f : matrix[r])
      for (const auto& [a, c] : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    scale *= lcm;
    for (std::size_t col = 0; col < n; ++col)
      for (const auto& [a, c] : matrix[r][col].terms())
        entries[r][col].terms.push_back({{a[1], l == 3 ? a[2] : 0}, Integer(c * lcm)});
  }
  const int degree = q.degree();
  if (degree == 0 || total % degree != 0) return std::nullopt;
  const int t = total / degree;
  const int side = total + 1;

  std::vector<Rational> point(l, Rational(0));
  point[0] = 1;
  auto det_at = [&](int u, int v) {
    std::vector<Integer> pu(side + 1, 1), pv(side + 1, 1);
    for (int k = 1; k <= side; ++k) {
      pu[k] = pu[k - 1] * u;
      pv[k] = pv[k - 1] * v;
    }
    std::vector<std::vector<Integer>> values(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col)
        for (const auto& [e, c] : entries[r][col].terms) values[r][col] += c * pu[e.first] * pv[e.second];
    return det_integer(values);
  };
  auto q_at = [&](int u, int v) {
    point[1] = u;
    if (l == 3) point[2] = v;
    return q.evaluate(point);
  };

  const int v_count = l == 3 ? side : 1;
  std::optional<Rational> c;  // det / (scale Q^t), fixed at the first point with Q^t != 0
  for (int u = 0; u < side; ++u) {
    for (int v = 0; v < v_count; ++v) {
      const Rational qv = q_at(u, v);
      Rational qt = 1;
      for (int k = 0; k < t; ++k) qt *= qv;
      const Rational dv(det_at(u, v));
      if (!c && qt != 0) c = dv / qt;
      if (dv != (c ? *c * qt : Rational(0))) return std::nullopt;
    }
  }
  if (!c || *c == 0) return std::nullopt;
  SaitoCertificate cert;
  cert.t = t;
  cert.c = *c / Rational(scale);
  cert.det = q.pow(static_cast<unsigned>(t)) * cert.c;
  return cert;
}

}  // namespace

SaitoCertificate saito_check(std::span<const DiffOp> ops, const Arrangement& a) {
  if (ops.empty()) throw SaitoFailed("empty operator list");
  const auto expected = sym_dim(ops.front().order(), static_cast<std::int64_t>(a.dim()));
  if (static_cast<std::int64_t>(ops.size()) != expected)
    throw SaitoFailed("expected " + std::to_string(expected) + " operators, got " + std::to_string(ops.size()));
  const Poly q = defining_polynomial(a);
  if (auto fast = saito_by_evaluation(ops, q)) return *fast;
  return saito_check_symbolic(ops, a);
}

SaitoCertificate saito_check_symbolic(std::span<const DiffOp> ops, const Arrangement& a) {
  if (ops.empty()) throw SaitoFailed("empty operator list");
  SaitoCertificate cert;
  cert.det = det_poly_matrix(saito_matrix(ops));
  if (cert.det.is_zero()) throw ZeroDet("Saito determinant vanishes");
  const Poly q = defining_polynomial(a);
  Poly rest = cert.det;
  while (!rest.is_constant()) {
    auto next = try_exact_div(rest, q);
    if (!next) throw NotPurePower("Saito determinant is not a scalar multiple of a power of Q");
    rest = std::move(*next);
    ++cert.t;
  }
  cert.c = rest.constant_value();
  return cert;
}

namespace {

// Monomial index lookup for a fixed (dim, degree).
class MonomialIndex {
 public:
  MonomialIndex(std::size_t dim, int degree) : list_(monomials_of_degree(dim, degree)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
  }
  const std::vector<MultiIndex>& list() const { return list_; }
  std::size_t size() const { return list_.size(); }
  std::size_t at(const MultiIndex& a) const { return index_.at(a); }

 private:
  std::vector<MultiIndex> list_;
  std::map<MultiIndex, std::size_t, GrlexGreater> index_;
};

// Integer linear map sending a degree-d monomial y^e to h_p^d * (y^e mod alpha_H),
// written in the remaining l - 1 variables by eliminating y_p.
using Reduced = std::vector<std::pair<std::size_t, Integer>>;

std::vector<Reduced> reduction_table(std::span<const std::int64_t> h, const MonomialIndex& source,
                                     const MonomialIndex& target, int d) {
  const std::size_t dim = h.size();
  std::size_t p = 0;
  while (h[p] == 0) ++p;
  // y_p -> -(sum_{q != p} h_q y_q) / h_p, cleared by h_p^d.
  std::vector<Poly> images;
  for (std::size_t i = 0, k = 0; i < dim; ++i) {
    if (i == p) {
      images.emplace_back(dim - 1);
      continue;
    }
    images.push_back(Poly::variable(dim - 1, k++));
  }
  Poly sub(dim - 1);
  for (std::size_t i = 0, k = 0; i < dim; ++i) {
    if (i == p) continue;
    sub -= Poly::variable(dim - 1, k++) * Rational(h[i]);
  }
  images[p] = sub;
  std::vector<Reduced> table;
  for (const auto& e : source.list()) {
    Poly mono = Poly::monomial(e).substitute(images);
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), Integer(h[p]).get_mpz_t(), static_cast<unsigned long>(d - e[p]));
    Reduced row;
    for (const auto& [r, c] : mono.terms()) {
      const Rational v = c * scale;
      row.emplace_back(target.at(r), v.get_num());  // integral by construction
    }
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

std::int64_t oracle_dim(const Arrangement& a, int m, int d) {
  if (m < 0 || d < 0) throw UserError("oracle_dim needs m >= 0 and d >= 0");
  const std::size_t dim = a.dim();
  const std::int64_t ldim = static_cast<std::int64_t>(dim);
  if (m == 0) return sym_dim(d, ldim);
  if (a.empty()) return sym_dim(m, ldim) * sym_dim(d, ldim);

  // Coordinates y = T x whose first rows are independent hyperplanes of A, so
  // those hyperplanes become coordinate hyperplanes y_i.
  std::vector<std::vector<std::int64_t>> chosen;
  std::vector<bool> coordinate(dim, false);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto trial = chosen;
    trial.emplace_back(a[i].normal().begin(), a[i].normal().end());
    if (chosen.size() < dim && integer_rank_kernel(trial, dim).rank == trial.size()) {
      coordinate[chosen.size()] = true;
      chosen = std::move(trial);
    } else {
      rest.push_back(i);
    }
  }
  for (std::size_t i = 0; i < dim && chosen.size() < dim; ++i) {
    auto trial = chosen;
    std::vector<std::int64_t> unit(dim, 0);
    unit[i] = 1;
    trial.push_back(unit);
    if (integer_rank_kernel(trial, dim).rank == trial.size()) chosen = std::move(trial);
  }
  RationalMatrix t(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) t(r, c) = chosen[r][c];
  const RationalMatrix t_inv = t.inverse();
  // alpha_H(x) = h . x = (h T^{-1}) . y
  std::vector<std::vector<std::int64_t>> others;
  for (std::size_t i : rest) {
    RationalVector w(dim, Rational(0));
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r) w[c] += Rational(a[i].normal()[r]) * t_inv(r, c);
    others.push_back(primitive_integer_vector(w));
  }

  // Unknowns: g_a = (prod_{i coordinate, a_i >= 1} y_i) * g'_a, g'_a of degree d - w_a.
  const MonomialIndex ops(dim, m);
  const MonomialIndex target_full(dim, d);
  std::vector<MultiIndex> factor(ops.size(), MultiIndex(dim));
  std::vector<std::vector<MultiIndex>> cols_of(ops.size());  // full monomial of each unknown
  std::vector<std::uint32_t> first_col(ops.size(), 0);
  std::uint32_t next_col = 0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const MultiIndex& alpha = ops.list()[k];
    for (std::size_t i = 0; i < dim; ++i)
      if (coordinate[i] && alpha[i] >= 1) factor[k].set(i, 1);
    const int free_degree = d - factor[k].total();
    first_col[k] = next_col;
    if (free_degree < 0) continue;
    for (const auto& s : monomials_of_degree(dim, free_degree)) cols_of[k].push_back(s + factor[k]);
    next_col += static_cast<std::uint32_t>(cols_of[k].size());
  }
  const std::int64_t unknowns = next_col;

  SparseEchelon echelon;
  const MonomialIndex reduced_space(dim - 1, d);
  for (const auto& h : others) {
    const auto table = reduction_table(h, target_full, reduced_space, d);
    for (const auto& b : monomials_of_degree(dim, m - 1)) {
      // sum_i h_i (b + e_i)! g_{b + e_i} reduced mod alpha_H, one row per reduced monomial.
      std::vector<std::map<std::uint32_t, Integer>> rows(reduced_space.size());
      for (std::size_t i = 0; i < dim; ++i) {
        if (h[i] == 0) continue;
        const MultiIndex alpha = b + MultiIndex::unit(dim, i);
        const std::size_t k = ops.at(alpha);
        const Integer weight = Integer(h[i]) * alpha.factorial();
        for (std::size_t s = 0; s < cols_of[k].size(); ++s) {
          const std::uint32_t col = first_col[k] + static_cast<std::uint32_t>(s);
          for (const auto& [r, c] : table[target_full.at(cols_of[k][s])]) rows[r][col] += weight * c;
        }
      }
      for (auto& row : rows) {
        SparseEchelon::Row sparse;
        for (auto& [col, v] : row)
          if (v != 0) sparse.emplace_back(col, std::move(v));
        if (!sparse.empty()) echelon.insert(std::move(sparse));
      }
    }
  }
  return unknowns - static_cast<std::int64_t>(echelon.rank());
}

std::int64_t oracle_dim_naive(const Arrangement& a, int m, int d) {
  const std::size_t dim = a.dim();
  const auto op_keys = monomials_of_degree(dim, m);
  const auto coeff_monos = monomials_of_degree(dim, d);
  const std::size_t unknowns = op_keys.size() * coeff_monos.size();
  if (m == 0 || a.empty()) return static_cast<std::int64_t>(unknowns);
  RationalMatrix system(0, unknowns);
  for (const auto& h : a.hyperplanes()) {
    // Parametrize H by a kernel basis; g in alpha_H S iff g restricted to H vanishes.
    const auto kernel = integer_rank_kernel({std::vector<std::int64_t>(h.normal().begin(), h.normal().end())}, dim).kernel;
    std::vector<Poly> images;
    for (std::size_t i = 0; i < dim; ++i) {
      Poly v(kernel.size());
      for (std::size_t k = 0; k < kernel.size(); ++k) v += Poly::variable(kernel.size(), k) * Rational(kernel[k][i]);
      images.push_back(v);
    }
    const Poly alpha = h.poly();
    for (const auto& b : monomials_of_degree(dim, m - 1)) {
      std::map<MultiIndex, RationalVector, GrlexGreater> rows;
      for (std::size_t k = 0; k < op_keys.size(); ++k) {
        const Poly image = alpha.shifted(b).derivative(op_keys[k]);
        for (std::size_t s = 0; s < coeff_monos.size(); ++s) {
          const Poly restricted = image.shifted(coeff_monos[s]).substitute(images);
          for (const auto& [r, c] : restricted.terms()) {
            auto [it, fresh] = rows.try_emplace(r, RationalVector(unknowns, Rational(0)));
            it->second[k * coeff_monos.size() + s] += c;
          }
        }
      }
      for (const auto& [r, row] : rows) system.append_row(row);
    }
  }
  return static_cast<std::int64_t>(unknowns - system.rank());
}

std::int64_t free_prediction(std::span<const int> exponents, int d, std::size_t dim) {
  std::int64_t total = 0;
  for (int e : exponents) total += sym_dim(d - e, static_cast<std::int64_t>(dim));
  return total;
}

OracleReport hilbert_compare(std::span<const std::int64_t> dims, std::span<const int> exponents, std::size_t dim) {
  OracleReport report;
  report.consistent = true;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    OracleRow row{static_cast<int>(d), dims[d], free_prediction(exponents, static_cast<int>(d), dim)};
    report.consistent = report.consistent && row.actual == row.predicted;
    report.rows.push_back(row);
  }
  return report;
}

OracleReport hilbert_check(const Arrangement& a, int m, std::span<const int> exponents, int d_max) {
  if (!exponents.empty() && d_max < *std::max_element(exponents.begin(), exponents.end()))
    throw UserError("max degree must be at least the largest exponent");
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= d_max; ++d) dims.push_back(oracle_dim(a, m, d));
  return hilbert_compare(dims, exponents, a.dim());
}

IdentityReport check_identities(const ExtendedArrangement& e) {
  if (e.base.dim() != 3 || !is_essential(e.base)) throw NotEssential("identities need an essential 3-arrangement");
  const auto profiles = flat_profiles(e);
  const std::int64_t n = static_cast<std::int64_t>(e.base.size());
  const std::int64_t n_tilde = static_cast<std::int64_t>(e.full.size());
  IdentityReport r;
  r.s_m = sym_dim(e.m, 3);
  r.double_lhs = (n_tilde - 1) * n;
  r.degrees_ok = true;
  for (const auto& p : profiles) {
    r.sum_s_ix += sym_dim(p.i_x, 3);
    r.double_rhs += (p.i_x + 1) * static_cast<std::int64_t>(p.base_local.size());
    r.degrees_ok = r.degrees_ok && p.p_tilde.degree() == e.m - p.i_x && try_exact_div(p.p_tilde, p.p).has_value();
  }
  if (r.s_m != r.sum_s_ix)
    throw IdentityViolated("s_m(3) = " + std::to_string(r.s_m) + " but the flat sum gives " + std::to_string(r.sum_s_ix));
  if (r.double_lhs != r.double_rhs)
    throw IdentityViolated("(n~ - 1) n = " + std::to_string(r.double_lhs) + " but the flat sum gives " +
                           std::to_string(r.double_rhs));
  if (!r.degrees_ok) throw IdentityViolated("deg P~_X != m - i_X or P_X does not divide P~_X");
  r.flat_count = static_cast<std::int64_t>(profiles.size());
  if (e.condition_a) {
    r.flat_count_checked = true;
    const std::int64_t added = n_tilde - n;
    r.flat_count_formula = static_cast<std::int64_t>(dim1_flats(e.base).size()) + binomial(added, 2) + n * added;
    if (r.flat_count != r.flat_count_formula)
      throw IdentityViolated("flat count " + std::to_string(r.flat_count) + " differs from " +
                             std::to_string(r.flat_count_formula));
    for (const auto& p : profiles) {
      const bool old_flat = p.base_local.size() >= 2;
      if (!old_flat && p.i_x != 0) throw IdentityViolated("a new flat has i_X != 0");
    }
  }
  return r;
}

bool annihilation_check(const ExtendedArrangement& e) {
  const auto profiles = flat_profiles(e);
  for (const auto& x : profiles) {
    const DiffOp power = power_of_derivation(x.flat.delta, e.m - x.i_x);
    for (const auto& y : profiles) {
      if (&x == &y) continue;
      for (const auto& f : monomials_of_degree(e.full.dim(), y.i_x))
        if (!apply_op(power, y.p_tilde.shifted(f)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace mfree
