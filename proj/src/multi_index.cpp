#include "mfree/multi_index.hpp"

#include <cassert>
#include <limits>

#include "mfree/errors.hpp"

namespace mfree {

MultiIndex::MultiIndex(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) {
  if (dim > kMaxDim) throw DimensionMismatch("at most " + std::to_string(kMaxDim) + " variables supported");
}

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(exps.size()) {
  std::size_t i = 0;
  for (int e : exps) set(i++, e);
}

MultiIndex MultiIndex::from_span(std::span<const int> exps) {
  MultiIndex a(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) a.set(i, exps[i]);
  return a;
}

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t i) {
  MultiIndex a(dim);
  a.set(i, 1);
  return a;
}

void MultiIndex::set(std::size_t i, int value) {
  assert(i < dim_);
  if (value < 0 || value > std::numeric_limits<std::uint16_t>::max())
    throw Error("exponent out of range: " + std::to_string(value));
  exps_[i] = static_cast<std::uint16_t>(value);
}

int MultiIndex::total() const {
  int t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += exps_[i];
  return t;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("multi-index dimension mismatch");
  MultiIndex r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.set(i, exps_[i] + other.exps_[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("multi-index dimension mismatch");
  MultiIndex r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.set(i, exps_[i] - other.exps_[i]);
  return r;
}

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (std::size_t i = 0; i < dim_; ++i) r *= mfree::factorial(exps_[i]);
  return r;
}

MultiIndex MultiIndex::extended(std::size_t new_dim) const {
  MultiIndex r(new_dim);
  for (std::size_t i = 0; i < dim_ && i < new_dim; ++i) r.exps_[i] = exps_[i];
  return r;
}

std::vector<int> MultiIndex::to_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + dim_);
}

std::string MultiIndex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + "]";
}

std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  for (std::size_t i = 0; i < std::min(a.dim_, b.dim_); ++i)
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  return a.dim_ <=> b.dim_;
}

namespace {

void fill(std::size_t dim, std::size_t pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == dim) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(pos, e);
    fill(dim, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t dim, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0) return out;
  if (dim == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(dim);
  fill(dim, 0, degree, cur, out);
  return out;
}

}  // namespace mfree
