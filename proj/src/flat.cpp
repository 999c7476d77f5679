#include "mfree/flat.hpp"

#include <map>

#include "mfree/errors.hpp"

namespace mfree {

namespace {

std::size_t first_nonzero(std::span<const std::int64_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  throw ZeroForm("flat direction must be nonzero");
}

}  // namespace

LinearForm choose_section(std::span<const std::int64_t> direction) {
  std::size_t p = first_nonzero(direction);
  LinearForm y{RationalVector(direction.size())};
  y.coeffs[p] = make_rational(1, direction[p]);
  return y;
}

std::vector<LinearForm> kernel_basis(std::span<const std::int64_t> direction) {
  std::size_t p = first_nonzero(direction);
  std::vector<LinearForm> basis;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (i == p) continue;
    LinearForm y{RationalVector(direction.size())};
    y.coeffs[i] = 1;
    y.coeffs[p] = -make_rational(direction[i], direction[p]);
    basis.push_back(std::move(y));
  }
  return basis;
}

RationalMatrix Flat1::coordinate_matrix() const {
  RationalMatrix m(0, dim());
  for (const auto& y : kernel_coords) m.append_row(y.coeffs);
  m.append_row(y_section.coeffs);
  return m;
}

Flat1 make_flat_from_direction(const Arrangement& a, std::span<const std::int64_t> direction) {
  if (direction.size() != a.dim()) throw DimensionMismatch("flat direction has the wrong dimension");
  Flat1 x;
  RationalVector q;
  for (auto v : direction) q.emplace_back(static_cast<long>(v));
  x.direction = primitive_integer_vector(q);
  x.local_indices = localization_indices(a, x.direction);
  for (auto v : x.direction) x.delta.emplace_back(static_cast<long>(v));
  x.y_section = choose_section(x.direction);
  x.kernel_coords = kernel_basis(x.direction);
  return x;
}

Flat1 make_flat(const Arrangement& a, std::size_t i, std::size_t j) {
  if (i == j) throw Error("a flat needs two distinct hyperplanes");
  auto rk = integer_rank_kernel({std::vector<std::int64_t>(a[i].normal().begin(), a[i].normal().end()),
                                 std::vector<std::int64_t>(a[j].normal().begin(), a[j].normal().end())},
                                a.dim());
  if (rk.kernel.size() != 1)
    throw Error("hyperplanes " + a[i].to_string() + " and " + a[j].to_string() +
                " do not meet in a line");
  return make_flat_from_direction(a, rk.kernel.front());
}

namespace {

std::vector<Poly> linear_images(const RationalMatrix& m, bool use_columns) {
  // use_columns: image of variable i is sum_k m(i, k) z_k; otherwise sum_k m(k, i) z_k.
  const std::size_t n = m.rows();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = use_columns ? m(i, k) : m(k, i);
    images.push_back(Poly::linear(c));
  }
  return images;
}

}  // namespace

Poly to_y_coords(const Poly& f, const Flat1& x) {
  // x = M^{-1} y
  return f.substitute(linear_images(x.coordinate_matrix().inverse(), true));
}

Poly from_y_coords(const Poly& g, const Flat1& x) {
  // y = M x
  return g.substitute(linear_images(x.coordinate_matrix(), true));
}

DiffOp from_y_coords(const DiffOp& op, const Flat1& x) {
  const std::size_t l = x.dim();
  if (op.dim() != l) throw DimensionMismatch("operator dimension does not match the flat");
  const RationalMatrix m = x.coordinate_matrix();
  const RationalMatrix inv = m.inverse();
  // The derivation dual to y_k is sum_i inv(i, k) d_i.
  std::vector<RationalVector> dual(l, RationalVector(l));
  for (std::size_t k = 0; k < l; ++k)
    for (std::size_t i = 0; i < l; ++i) dual[k][i] = inv(i, k);
  auto y_images = linear_images(m, true);

  DiffOp out(l, op.order());
  for (const auto& [a, g] : op.coeffs()) {
    DiffOp symbol = DiffOp::identity(l);
    for (std::size_t k = 0; k < l; ++k)
      if (a[k]) symbol = compose_constant(symbol, power_of_derivation(dual[k], a[k]));
    Poly coeff = g.substitute(y_images);
    for (const auto& [b, c] : symbol.coeffs()) out.add_term(b, coeff * c.constant_value());
  }
  return out;
}

}  // namespace mfree
