#include "mfree/freebasis.hpp"

#include <algorithm>
#include <numeric>

#include "mfree/errors.hpp"
#include "mfree/flat.hpp"

namespace mfree {

namespace {

using Coordinates = std::vector<MultiIndex>;

RationalVector to_vector(const DiffOp& op, const Coordinates& keys, const Coordinates& monos) {
  RationalVector v(keys.size() * monos.size(), Rational(0));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const Poly f = op.coeff(keys[k]);
    for (std::size_t s = 0; s < monos.size(); ++s) v[k * monos.size() + s] = f.coeff(monos[s]);
  }
  return v;
}

DiffOp from_vector(const RationalVector& v, const Coordinates& keys, const Coordinates& monos, int order,
                   std::size_t dim) {
  DiffOp op(dim, order);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    std::vector<Poly::Term> terms;
    for (std::size_t s = 0; s < monos.size(); ++s)
      if (v[k * monos.size() + s] != 0) terms.emplace_back(monos[s], v[k * monos.size() + s]);
    op.add_term(keys[k], Poly::from_terms(dim, std::move(terms)));
  }
  return op;
}

// Operator in (y_1, y_2) viewed in (y_1, y_2, y_3).
DiffOp embed(const DiffOp& op, std::size_t dim) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < op.dim(); ++i) images.push_back(Poly::variable(dim, i));
  DiffOp out(dim, op.order());
  for (const auto& [a, f] : op.coeffs()) out.add_term(a.extended(dim), f.substitute(images));
  return out;
}

void expect_saito(std::span<const DiffOp> ops, const Arrangement& a, int m, std::span<const int> degrees,
                  std::optional<SaitoCertificate>* out) {
  SaitoCertificate cert = saito_check(ops, a);
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t degree_sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  if (n > 0) {
    if (cert.t != sym_dim(m - 1, static_cast<std::int64_t>(a.dim())))
      throw SaitoFailed("Saito exponent t = " + std::to_string(cert.t) + " differs from s_{m-1}");
    if (cert.t * n != degree_sum) throw SaitoFailed("t * n differs from the degree sum");
  }
  if (out) *out = std::move(cert);
}

void finalize(FreeBasis& basis, const Arrangement& a, int m, const BuildOptions& options) {
  const auto expected = sym_dim(m, static_cast<std::int64_t>(a.dim()));
  if (static_cast<std::int64_t>(basis.operators.size()) != expected)
    throw VerificationError("basis has " + std::to_string(basis.operators.size()) + " operators, expected " +
                            std::to_string(expected));
  if (options.check_membership)
    for (std::size_t i = 0; i < basis.operators.size(); ++i)
      if (!is_member(basis.operators[i], a))
        throw VerificationError("operator " + std::to_string(i) + " fails the membership test");
  if (options.check_saito) expect_saito(basis.operators, a, m, basis.degrees, &basis.saito);
}

void push(FreeBasis& basis, DiffOp op, Provenance prov) {
  const auto degree = op.degree();
  if (!degree) throw VerificationError("constructed operator is not homogeneous");
  basis.degrees.push_back(*degree);
  basis.operators.push_back(std::move(op));
  basis.provenance.push_back(std::move(prov));
}

}  // namespace

ExponentMultiset FreeBasis::exponents(int m) const {
  return make_multiset(degrees, m, ExponentMultiset::Source::FromBasis);
}

std::vector<DiffOp> basis_2arr(const Arrangement& a2, int j) {
  if (a2.dim() != 2) throw DimensionMismatch("basis_2arr expects l = 2");
  const int k = static_cast<int>(a2.size());
  if (j < 0 || j > k - 1) throw UserError("basis_2arr needs 0 <= j <= k - 1");
  if (j == 0) return {DiffOp::identity(2)};

  const Coordinates keys = monomials_of_degree(2, j);
  const Coordinates monos = monomials_of_degree(2, k - 1);
  const std::size_t unknowns = keys.size() * monos.size();

  // alpha_H divides a binary form g iff g vanishes on the direction of H.
  RationalMatrix system(0, unknowns);
  for (const auto& h : a2.hyperplanes()) {
    const RationalVector v{Rational(-h.normal()[1]), Rational(h.normal()[0])};
    for (const auto& b : monomials_of_degree(2, j - 1)) {
      const Poly image = h.poly().shifted(b);
      RationalVector row(unknowns, Rational(0));
      for (std::size_t a = 0; a < keys.size(); ++a) {
        const Rational c = image.derivative(keys[a]).constant_value();
        if (c == 0) continue;
        for (std::size_t s = 0; s < monos.size(); ++s)
          row[a * monos.size() + s] = c * Poly::monomial(monos[s]).evaluate(v);
      }
      system.append_row(row);
    }
  }
  const auto null = system.nullspace();

  const DiffOp euler = euler_op(j, 2);
  RationalMatrix span(0, unknowns);
  for (const auto& c : monomials_of_degree(2, k - 1 - j))
    span.append_row(to_vector(Poly::monomial(c) * euler, keys, monos));
  std::vector<DiffOp> out{euler.normalized()};
  std::size_t rank = span.rank();
  for (const auto& v : null) {
    if (static_cast<int>(out.size()) == j + 1) break;
    span.append_row(v);
    const std::size_t next = span.rank();
    if (next == rank) continue;
    rank = next;
    out.push_back(from_vector(v, keys, monos, j, 2).normalized());
  }
  if (static_cast<int>(out.size()) != j + 1)
    throw SolveFailed("membership system gave too few degree-" + std::to_string(k - 1) + " generators");
  std::vector<int> degrees;
  for (const auto& op : out) degrees.push_back(*op.degree());
  expect_saito(out, a2, j, degrees, nullptr);
  return out;
}

std::vector<DiffOp> basis_2arr_any(const Arrangement& a2, int j) {
  if (a2.dim() != 2) throw DimensionMismatch("basis_2arr_any expects l = 2");
  if (j < 0) throw BadM("order must be nonnegative");
  const int k = static_cast<int>(a2.size());
  std::vector<DiffOp> out;
  if (k == 0) {
    for (const auto& a : monomials_of_degree(2, j)) out.push_back(DiffOp::monomial(a));
    return out;
  }
  if (j <= k - 1) return basis_2arr(a2, j);

  Arrangement lines = a2;
  while (static_cast<int>(lines.size()) < j + 1) lines = lines.with(generic_hyperplane(lines));
  const Poly q = defining_polynomial(a2);
  const auto flats = dim1_flats(lines);
  std::vector<int> degrees;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Poly p = static_cast<int>(i) < k ? exact_div(q, lines[i].poly()) : q;
    out.push_back((p * power_of_derivation(flats[i].delta, j)).normalized());
    degrees.push_back(*out.back().degree());
  }
  expect_saito(out, a2, j, degrees, nullptr);
  return out;
}

Arrangement pencil_arrangement(const Arrangement& a, const Flat1& x) {
  std::vector<Hyperplane> lines;
  for (std::size_t i : localization_indices(a, x.direction)) {
    const Poly y_form = to_y_coords(a[i].poly(), x);
    RationalVector coeffs(x.dim() - 1, Rational(0));
    for (const auto& [e, c] : y_form.terms()) {
      if (e[x.dim() - 1] != 0) throw VerificationError("pencil form depends on y_X");
      for (std::size_t t = 0; t + 1 < x.dim(); ++t)
        if (e[t] == 1) coeffs[t] = c;
    }
    lines.push_back(Hyperplane::from_rational(coeffs));
  }
  return Arrangement(x.dim() - 1, std::move(lines));
}

std::vector<DiffOp> pencil_basis(const Arrangement& a, const Flat1& x, int j) {
  std::vector<DiffOp> out;
  for (const auto& op : basis_2arr_any(pencil_arrangement(a, x), j))
    out.push_back(from_y_coords(embed(op, x.dim()), x).normalized());
  return out;
}

FreeBasis basis_3arr(const ExtendedArrangement& e, const BuildOptions& options) {
  if (e.base.dim() != 3 || !is_essential(e.base)) throw NotEssential("basis_3arr needs an essential 3-arrangement");
  const int n = static_cast<int>(e.base.size());
  if (e.m < n - 2) throw BadM("m >= n - 2 is required");
  FreeBasis basis;
  for (const auto& profile : flat_profiles(e)) {
    for (int j = 0; j <= profile.i_x; ++j) {
      const DiffOp power = power_of_derivation(profile.flat.delta, e.m - j);
      const auto gens = pencil_basis(e.base, profile.flat, j);
      for (std::size_t g = 0; g < gens.size(); ++g)
        push(basis, (profile.p * compose_constant(gens[g], power)).normalized(),
             Provenance{profile.flat.direction, j, static_cast<int>(g)});
    }
  }
  finalize(basis, e.base, e.m, options);
  return basis;
}

FreeBasis basis_nonessential(const Arrangement& a, int m, const BuildOptions& options) {
  if (a.dim() != 3) throw DimensionMismatch("basis_nonessential expects l = 3");
  if (is_essential(a)) throw UserError("arrangement is essential");
  if (m < 0) throw BadM("order must be nonnegative");
  FreeBasis basis;
  if (a.empty()) {
    int g = 0;
    for (const auto& key : monomials_of_degree(3, m)) push(basis, DiffOp::monomial(key), Provenance{{}, m, g++});
    finalize(basis, a, m, options);
    return basis;
  }
  const auto kernel = rank_and_kernel(a).kernel;
  const Flat1 x = make_flat_from_direction(a, kernel.front());
  for (int j = 0; j <= m; ++j) {
    const DiffOp power = power_of_derivation(x.delta, m - j);
    const auto gens = pencil_basis(a, x, j);
    for (std::size_t g = 0; g < gens.size(); ++g)
      push(basis, compose_constant(gens[g], power).normalized(), Provenance{x.direction, j, static_cast<int>(g)});
  }
  finalize(basis, a, m, options);
  return basis;
}

FreeBasis basis_plane(const Arrangement& a, int m, const BuildOptions& options) {
  if (a.dim() != 2) throw DimensionMismatch("basis_plane expects l = 2");
  FreeBasis basis;
  const auto ops = basis_2arr_any(a, m);
  for (std::size_t g = 0; g < ops.size(); ++g) push(basis, ops[g], Provenance{{}, m, static_cast<int>(g)});
  finalize(basis, a, m, options);
  return basis;
}

DualPair dual_pair(const ExtendedArrangement& e) {
  if (e.base.dim() != 3 || !is_essential(e.base)) throw NotEssential("dual_pair needs an essential 3-arrangement");
  DualPair pair;
  for (const auto& profile : flat_profiles(e)) {
    const Flat1& x = profile.flat;
    const Poly y1 = x.kernel_coords[0].poly();
    const Poly y2 = x.kernel_coords[1].poly();
    const Poly yx = x.y_section.poly();
    for (int j = 0; j <= profile.i_x; ++j) {
      const DiffOp power = power_of_derivation(x.delta, e.m - j);
      const Poly base = profile.p_tilde * yx.pow(static_cast<unsigned>(profile.i_x - j));
      const Poly normalizer = apply_op(power, base);
      if (normalizer.is_zero() || !normalizer.is_constant())
        throw ZeroNormalizer("delta_X^(m-j)(P~_X y_X^(i_X-j)) is not a nonzero constant");
      const Rational scale = 1 / normalizer.constant_value();
      for (const auto& u : monomials_of_degree(2, j)) {
        pair.b.push_back(base * y1.pow(static_cast<unsigned>(u[0])) * y2.pow(static_cast<unsigned>(u[1])));
        const MultiIndex key = u.extended(3);
        const DiffOp d_u = from_y_coords(DiffOp::monomial(key, Poly::constant(3, make_ratio(1, key.factorial()))), x);
        pair.b_star.push_back(compose_constant(d_u, power) * scale);
        pair.provenance.push_back(DualEntry{x.direction, j, u});
      }
    }
  }
  return pair;
}

RationalMatrix pairing_matrix(const DualPair& pair) {
  RationalMatrix m(pair.b_star.size(), pair.b.size());
  for (std::size_t r = 0; r < pair.b_star.size(); ++r)
    for (std::size_t c = 0; c < pair.b.size(); ++c) {
      const Poly v = apply_op(pair.b_star[r], pair.b[c]);
      if (!v.is_constant()) throw VerificationError("pairing value is not a constant");
      m(r, c) = v.is_zero() ? Rational(0) : v.constant_value();
    }
  return m;
}

}  // namespace mfree
