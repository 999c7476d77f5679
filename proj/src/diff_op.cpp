#include "mfree/diff_op.hpp"

#include "mfree/errors.hpp"

namespace mfree {

DiffOp::DiffOp(std::size_t dim, int order) : dim_(dim), order_(order) {
  if (order < 0) throw Error("operator order must be nonnegative");
}

DiffOp DiffOp::identity(std::size_t dim) { return monomial(MultiIndex(dim)); }

DiffOp DiffOp::monomial(const MultiIndex& a, const Poly& coeff) {
  DiffOp op(a.dim(), a.total());
  op.add_term(a, coeff);
  return op;
}

DiffOp DiffOp::monomial(const MultiIndex& a) { return monomial(a, Poly::constant(a.dim(), 1)); }

Poly DiffOp::coeff(const MultiIndex& a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? Poly(dim_) : it->second;
}

void DiffOp::add_term(const MultiIndex& a, const Poly& f) {
  if (a.dim() != dim_ || f.dim() != dim_) throw DimensionMismatch("operator term dimension mismatch");
  if (a.total() != order_)
    throw Error("multi-index " + a.to_string() + " does not have order " + std::to_string(order_));
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(a, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

std::optional<int> DiffOp::degree() const {
  std::optional<int> deg;
  for (const auto& [a, f] : coeffs_) {
    if (!f.is_homogeneous()) return std::nullopt;
    if (deg && *deg != f.degree()) return std::nullopt;
    deg = f.degree();
  }
  return deg;
}

bool DiffOp::is_constant_coefficient() const {
  for (const auto& [a, f] : coeffs_)
    if (!f.is_constant()) return false;
  return true;
}

void DiffOp::check_compatible(const DiffOp& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("operator dimension mismatch");
  if (order_ != other.order_) throw Error("cannot add operators of different order");
}

DiffOp DiffOp::operator+(const DiffOp& other) const {
  check_compatible(other);
  DiffOp r = *this;
  for (const auto& [a, f] : other.coeffs_) r.add_term(a, f);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& other) const { return *this + other * Rational(-1); }

DiffOp DiffOp::operator*(const Rational& c) const {
  DiffOp r(dim_, order_);
  if (c == 0) return r;
  for (const auto& [a, f] : coeffs_) r.coeffs_.emplace(a, f * c);
  return r;
}

DiffOp operator*(const Poly& f, const DiffOp& op) {
  if (f.dim() != op.dim_) throw DimensionMismatch("operator dimension mismatch");
  DiffOp r(op.dim_, op.order_);
  for (const auto& [a, g] : op.coeffs_) r.add_term(a, f * g);
  return r;
}

DiffOp DiffOp::map_coeffs(std::span<const Poly> images) const {
  DiffOp r(dim_, order_);
  for (const auto& [a, f] : coeffs_) r.add_term(a, f.substitute(images));
  return r;
}

DiffOp DiffOp::normalized() const {
  if (coeffs_.empty()) return *this;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [a, f] : coeffs_) {
    Rational c = f.content();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (coeffs_.begin()->second.leading_term().second < 0) scale = -scale;
  return *this * scale;
}

std::string DiffOp::to_pretty_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [a, f] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + f.to_pretty_string() + ")";
    std::string d;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!a[i]) continue;
      if (!d.empty()) d += '*';
      d += "d" + std::to_string(i + 1);
      if (a[i] > 1) d += '^' + std::to_string(a[i]);
    }
    if (!d.empty()) s += "*" + d;
  }
  return s;
}

Poly apply_op(const DiffOp& theta, const Poly& f) {
  if (theta.dim() != f.dim())
    throw DimensionMismatch("cannot apply a " + std::to_string(theta.dim()) + "-variable operator to a " +
                            std::to_string(f.dim()) + "-variable polynomial");
  Poly sum(f.dim());
  for (const auto& [a, g] : theta.coeffs()) {
    Poly d = f.derivative(a);
    if (!d.is_zero()) sum += g * d;
  }
  return sum;
}

DiffOp power_of_derivation(std::span<const Rational> c, int k) {
  const std::size_t dim = c.size();
  DiffOp op(dim, k);
  Integer k_fact = factorial(static_cast<unsigned>(k));
  for (const auto& a : monomials_of_degree(dim, k)) {
    Rational coeff = make_ratio(k_fact, a.factorial());
    for (std::size_t i = 0; i < dim; ++i)
      for (int e = 0; e < a[i]; ++e) coeff *= c[i];
    op.add_term(a, Poly::constant(dim, coeff));
  }
  return op;
}

DiffOp compose_constant(const DiffOp& theta, const DiffOp& eta) {
  if (theta.dim() != eta.dim()) throw DimensionMismatch("operator dimension mismatch");
  if (!eta.is_constant_coefficient()) throw Error("right factor must have constant coefficients");
  DiffOp r(theta.dim(), theta.order() + eta.order());
  for (const auto& [a, f] : theta.coeffs())
    for (const auto& [b, g] : eta.coeffs()) r.add_term(a + b, f * g.constant_value());
  return r;
}

DiffOp euler_op(int m, std::size_t dim) {
  DiffOp op(dim, m);
  Integer m_fact = factorial(static_cast<unsigned>(m));
  for (const auto& a : monomials_of_degree(dim, m))
    op.add_term(a, Poly::monomial(a, make_ratio(m_fact, a.factorial())));
  return op;
}

}  // namespace mfree
