#include "mfree/linear_algebra.hpp"

#include <limits>

#include "mfree/errors.hpp"

namespace mfree {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<RationalVector> rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RationalMatrix::append_row(const RationalVector& row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  RationalVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  return r;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_unit_lower_triangular() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    Rational inv = 1 / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c) == 0) continue;
      Rational f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  RationalMatrix reduced = *this;
  auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw VerificationError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::int64_t> primitive_integer_vector(const RationalVector& v) {
  Integer den_lcm = 1;
  for (const auto& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    Integer x = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(x);
  }
  if (g == 0) throw ZeroForm("zero vector has no primitive representative");
  int sign = 0;
  for (const auto& x : ints)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  std::vector<std::int64_t> out;
  for (auto& x : ints) {
    Integer y = x / g * sign;
    if (!y.fits_slong_p()) throw UserError("coefficient too large: " + y.get_str());
    out.push_back(y.get_si());
  }
  return out;
}

RankKernel integer_rank_kernel(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    RationalVector v;
    for (auto x : r) v.emplace_back(static_cast<long>(x));
    m.append_row(v);
  }
  RankKernel rk;
  rk.rank = m.rank();
  for (const auto& v : m.nullspace()) rk.kernel.push_back(primitive_integer_vector(v));
  return rk;
}

namespace {

void make_primitive(SparseEchelon::Row& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool SparseEchelon::insert(Row row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  make_primitive(row);
  Row next;
  Integer a, b, g, t;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    const Row& p = it->second;
    // row <- (p0/g) * row - (r0/g) * p eliminates the shared leading column.
    mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p.front().second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
    next.clear();
    next.reserve(row.size() + p.size());
    auto i = row.begin() + 1;
    auto j = p.begin() + 1;
    while (i != row.end() || j != p.end()) {
      if (j == p.end() || (i != row.end() && i->first < j->first)) {
        next.emplace_back(i->first, a * i->second);
        ++i;
      } else if (i == row.end() || j->first < i->first) {
        next.emplace_back(j->first, -b * j->second);
        ++j;
      } else {
        mpz_mul(t.get_mpz_t(), a.get_mpz_t(), i->second.get_mpz_t());
        mpz_submul(t.get_mpz_t(), b.get_mpz_t(), j->second.get_mpz_t());
        if (t != 0) next.emplace_back(i->first, t);
        ++i;
        ++j;
      }
    }
    row.swap(next);
    make_primitive(row);
  }
  return false;
}

namespace {

Rational row_content(const std::vector<Poly>& row, std::size_t from) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  bool any = false;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    any = true;
    Rational c = row[j].content();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!any) return 0;
  return make_ratio(num_gcd, den_lcm);
}

void check_square(const std::vector<std::vector<Poly>>& m) {
  if (m.empty()) throw DimensionMismatch("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionMismatch("determinant of a non-square matrix");
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.dim() != m[0][0].dim()) throw DimensionMismatch("matrix entries disagree on dimension");
}

}  // namespace

Poly det_bareiss(std::vector<std::vector<Poly>> m) {
  check_square(m);
  const std::size_t n = m.size();
  const std::size_t dim = m[0][0].dim();
  // det(original) = det(current) * scale.
  Rational scale = 1;
  for (auto& row : m) {
    Rational c = row_content(row, 0);
    if (c == 0) return Poly(dim);
    for (auto& e : row) e = e * (1 / c);
    scale *= c;
  }
  Poly prev = Poly::constant(dim, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Poly(dim);
    if (p != k) {
      std::swap(m[p], m[k]);
      scale = -scale;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(num) : exact_div(num, prev);
      }
      m[i][k] = Poly(dim);
      Rational c = row_content(m[i], k + 1);
      if (c == 0) return Poly(dim);
      if (c != 1) {
        for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] * (1 / c);
        scale *= c;
      }
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * scale;
}

Poly det_cofactor(const std::vector<std::vector<Poly>>& m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly sum(m[0][0].dim());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * det_cofactor(minor);
    sum = c % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m) {
  if (m.size() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace mfree
