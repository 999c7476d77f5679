#include "mfree/poly.hpp"

#include <algorithm>
#include <map>

#include "mfree/errors.hpp"

namespace mfree {

namespace {

using TermMap = std::map<MultiIndex, Rational, GrlexGreater>;

std::vector<Poly::Term> drain(TermMap& acc) {
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [a, c] : acc)
    if (c != 0) out.emplace_back(a, std::move(c));
  return out;
}

// Merge of two sorted term lists, b scaled by `sign`.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && grlex_compare(i->first, j->first) > 0)) {
      out.push_back(*i++);
    } else if (i == a.end() || grlex_compare(j->first, i->first) > 0) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::constant(std::size_t dim, const Rational& c) {
  Poly p(dim);
  if (c != 0) p.terms_.emplace_back(MultiIndex(dim), c);
  return p;
}

Poly Poly::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw DimensionMismatch("variable index out of range");
  return monomial(MultiIndex::unit(dim, i));
}

Poly Poly::monomial(const MultiIndex& a, const Rational& c) {
  Poly p(a.dim());
  if (c != 0) p.terms_.emplace_back(a, c);
  return p;
}

Poly Poly::linear(std::span<const Rational> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    terms.emplace_back(MultiIndex::unit(coeffs.size(), i), coeffs[i]);
  return from_terms(coeffs.size(), std::move(terms));
}

Poly Poly::from_terms(std::size_t dim, std::vector<Term> terms) {
  TermMap acc;
  for (auto& [a, c] : terms) {
    if (a.dim() != dim) throw DimensionMismatch("term dimension mismatch");
    acc[a] += c;
  }
  Poly p(dim);
  p.terms_ = drain(acc);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.total() == 0);
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().first.total(); }

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.back().first.total() == terms_.front().first.total();
}

Poly Poly::homogeneous_part(int degree) const {
  Poly p(dim_);
  for (const auto& t : terms_)
    if (t.first.total() == degree) p.terms_.push_back(t);
  return p;
}

Rational Poly::coeff(const MultiIndex& a) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                             [](const Term& t, const MultiIndex& key) { return grlex_compare(t.first, key) > 0; });
  if (it != terms_.end() && it->first == a) return it->second;
  return 0;
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + to_pretty_string());
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

void Poly::check_dim(const Poly& other) const {
  if (dim_ != other.dim_)
    throw DimensionMismatch("polynomial dimension mismatch: " + std::to_string(dim_) + " vs " +
                            std::to_string(other.dim_));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::operator+(const Poly& other) const {
  check_dim(other);
  Poly p(dim_);
  p.terms_ = merge(terms_, other.terms_, +1);
  return p;
}

Poly Poly::operator-(const Poly& other) const {
  check_dim(other);
  Poly p(dim_);
  p.terms_ = merge(terms_, other.terms_, -1);
  return p;
}

Poly Poly::operator*(const Poly& other) const {
  check_dim(other);
  if (is_zero() || other.is_zero()) return Poly(dim_);
  if (other.size() == 1) {
    Poly p = shifted(other.terms_.front().first);
    return p * other.terms_.front().second;
  }
  if (size() == 1) return other * *this;
  TermMap acc;
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : other.terms_) acc[a + b] += c * d;
  Poly p(dim_);
  p.terms_ = drain(acc);
  return p;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(dim_);
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly& Poly::operator+=(const Poly& other) { return *this = *this + other; }
Poly& Poly::operator-=(const Poly& other) { return *this = *this - other; }
Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::pow(unsigned k) const {
  Poly result = constant(dim_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::shifted(const MultiIndex& a) const {
  Poly p(dim_);
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grlex order.
  for (const auto& [b, c] : terms_) p.terms_.emplace_back(a + b, c);
  return p;
}

Poly Poly::derivative(const MultiIndex& a) const {
  if (a.dim() != dim_) throw DimensionMismatch("derivative multi-index dimension mismatch");
  std::vector<Term> out;
  for (const auto& [b, c] : terms_) {
    if (!a.divides(b)) continue;
    Integer falling = 1;
    for (std::size_t i = 0; i < dim_; ++i)
      for (int k = 0; k < a[i]; ++k) falling *= b[i] - k;
    out.emplace_back(b - a, c * falling);
  }
  // b -> b - a is injective and order-preserving.
  Poly p(dim_);
  p.terms_ = std::move(out);
  return p;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimensionMismatch("evaluation point dimension mismatch");
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i)
      for (int k = 0; k < a[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != dim_) throw DimensionMismatch("substitution needs one image per variable");
  std::size_t out_dim = images.empty() ? 0 : images.front().dim();
  for (const auto& im : images)
    if (im.dim() != out_dim) throw DimensionMismatch("substitution images disagree on dimension");
  std::vector<std::vector<Poly>> powers(dim_);
  for (std::size_t i = 0; i < dim_; ++i) powers[i].push_back(constant(out_dim, 1));
  auto power = [&](std::size_t i, int k) -> const Poly& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  TermMap acc;
  for (const auto& [a, c] : terms_) {
    Poly t = constant(out_dim, c);
    for (std::size_t i = 0; i < dim_; ++i)
      if (a[i]) t *= power(i, a[i]);
    for (auto& [b, d] : t.terms_) acc[b] += d;
  }
  Poly p(out_dim);
  p.terms_ = drain(acc);
  return p;
}

Rational Poly::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [a, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

std::string Poly::to_canonical_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) s += " + ";
    s += mfree::to_string(terms_[t].second);
    s += " * ";
    const auto& a = terms_[t].first;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) s += '*';
      s += 'x' + std::to_string(i + 1) + '^' + std::to_string(a[i]);
    }
  }
  return s;
}

std::string Poly::to_pretty_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& [a, c] = terms_[t];
    Rational mag = abs(c);
    if (t == 0) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!a[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (a[i] > 1) mono += '^' + std::to_string(a[i]);
    }
    if (mono.empty()) {
      s += mfree::to_string(mag);
    } else {
      if (mag != 1) s += mfree::to_string(mag) + '*';
      s += mono;
    }
  }
  return s;
}

std::optional<Poly> try_exact_div(const Poly& f, const Poly& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("division dimension mismatch");
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const auto& [g_lead, g_lc] = g.leading_term();
  std::vector<Poly::Term> quotient;
  Poly r = f;
  while (!r.is_zero()) {
    const auto& [r_lead, r_lc] = r.leading_term();
    if (!g_lead.divides(r_lead)) return std::nullopt;
    MultiIndex shift = r_lead - g_lead;
    Rational c = r_lc / g_lc;
    quotient.emplace_back(shift, c);
    r -= g.shifted(shift) * c;
  }
  // Quotient terms come out in strictly decreasing grlex order.
  return Poly::from_terms(f.dim(), std::move(quotient));
}

Poly exact_div(const Poly& f, const Poly& g) {
  if (auto q = try_exact_div(f, g)) return *std::move(q);
  throw NotDivisible("(" + g.to_pretty_string() + ") does not divide (" + f.to_pretty_string() + ")");
}

}  // namespace mfree
