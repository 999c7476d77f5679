#include <doctest.h>

#include "mfree/diff_op.hpp"
#include "mfree/errors.hpp"
#include "mfree/linear_algebra.hpp"
#include "mfree/poly.hpp"
#include "../support/test_support.hpp"

using namespace mfree;
using mfree::testing::random_homogeneous;
using mfree::testing::random_op;
using mfree::testing::random_poly;

namespace {

Poly x(int i) { return Poly::variable(3, static_cast<std::size_t>(i - 1)); }
Poly c3(std::int64_t v) { return Poly::constant(3, v); }
DiffOp d(std::initializer_list<int> a) { return DiffOp::monomial(MultiIndex(a)); }

// Falling factorial d (d-1) ... (d-m+1).
Integer falling(int deg, int m) {
  Integer r = 1;
  for (int i = 0; i < m; ++i) r *= deg - i;
  return r;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0.25")) == "-1/4");
  CHECK(to_string(parse_rational("0/7")) == "0");
  // Leading zeros are decimal, not an octal prefix.
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("09/012") == make_rational(3, 4));
  CHECK(parse_rational("1.08") == make_rational(27, 25));
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("1/x"), SyntaxError);
  CHECK(make_ratio(4, -6) == make_rational(-2, 3));
  CHECK(make_ratio(4, -6).get_den() == 3);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(sym_dim(2, 3) == 6);
  CHECK(sym_dim(-1, 3) == 0);
}

TEST_CASE("multi-indices enumerate in graded lexicographic order") {
  const auto monos = monomials_of_degree(3, 2);
  REQUIRE(monos.size() == 6);
  CHECK(monos[0] == MultiIndex{2, 0, 0});
  CHECK(monos[1] == MultiIndex{1, 1, 0});
  CHECK(monos[2] == MultiIndex{1, 0, 1});
  CHECK(monos[3] == MultiIndex{0, 2, 0});
  CHECK(monos[5] == MultiIndex{0, 0, 2});
  CHECK(MultiIndex({1, 2, 0}).factorial() == 2);
  CHECK(MultiIndex({1, 0, 0}).divides(MultiIndex{2, 1, 0}));
  CHECK_FALSE(MultiIndex({0, 0, 1}).divides(MultiIndex{2, 1, 0}));
}

TEST_CASE("polynomial canonical text") {
  const Poly p = x(1) * x(1) * x(2) - c3(1) * make_rational(1, 2) * x(3);
  CHECK(p.to_canonical_string() == "1 * x1^2*x2^1*x3^0 + -1/2 * x1^0*x2^0*x3^1");
  CHECK(p.to_pretty_string() == "x1^2*x2 - 1/2*x3");
  CHECK(Poly(3).to_canonical_string() == "0");
  CHECK(p.degree() == 3);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.homogeneous_part(1) == x(3) * make_rational(-1, 2));
}

TEST_CASE("apply_op examples") {
  CHECK(apply_op(d({1, 1, 0}), x(1) * x(1) * x(2)) == x(1) * 2);
  CHECK(apply_op(d({0, 0, 2}), x(1) * x(2)).is_zero());
  const Poly q = x(1) * x(2) * (x(1) - x(2));
  const DiffOp euler = x(1) * d({1, 0, 0}) + x(2) * d({0, 1, 0});
  CHECK(apply_op(euler, q) == q * 3);
  CHECK_THROWS_AS(apply_op(DiffOp::monomial(MultiIndex{1, 0}), x(1)), DimensionMismatch);
}

TEST_CASE("exact_div examples") {
  CHECK(exact_div(x(1) * x(1) - x(2) * x(2), x(1) - x(2)) == x(1) + x(2));
  const Poly q = x(1) * x(2) * x(3) * (x(1) - x(2));
  CHECK(exact_div(q, x(1) * x(2) * (x(1) - x(2))) == x(3));
  CHECK_THROWS_AS(exact_div(x(1) * x(2) + c3(1), x(1)), NotDivisible);
  CHECK_FALSE(try_exact_div(x(1) * x(2) + c3(1), x(1)).has_value());
}

TEST_CASE("power_of_derivation examples") {
  const RationalVector c{1, 1, 0};
  CHECK(power_of_derivation(c, 2) == d({2, 0, 0}) + d({1, 1, 0}) * 2 + d({0, 2, 0}));
  CHECK(power_of_derivation(RationalVector{0, 0, 1}, 3) == d({0, 0, 3}));
  CHECK(power_of_derivation(RationalVector{5, -2, 7}, 0) == DiffOp::identity(3));
}

TEST_CASE("compose_constant examples") {
  const Poly f = x(2) * (x(1) - x(2));
  CHECK(compose_constant(f * d({0, 1, 0}), d({0, 0, 1})) == f * d({0, 1, 1}));
  CHECK(compose_constant(DiffOp::identity(3), d({2, 0, 0})) == d({2, 0, 0}));
  const DiffOp euler = x(1) * d({1, 0, 0}) + x(2) * d({0, 1, 0});
  CHECK(compose_constant(euler, d({0, 0, 2})) == x(1) * d({1, 0, 2}) + x(2) * d({0, 1, 2}));
  CHECK_THROWS(compose_constant(euler, euler));
}

TEST_CASE("euler_op examples") {
  const Poly x1 = Poly::variable(2, 0);
  const Poly x2 = Poly::variable(2, 1);
  CHECK(euler_op(1, 2) == x1 * DiffOp::monomial(MultiIndex{1, 0}) + x2 * DiffOp::monomial(MultiIndex{0, 1}));
  CHECK(apply_op(euler_op(2, 2), x1 * x2) == x1 * x2 * 2);
  CHECK(euler_op(0, 3) == DiffOp::identity(3));
}

TEST_CASE("det_poly_matrix examples") {
  CHECK(det_poly_matrix({{x(1)}}) == x(1));
  CHECK(det_poly_matrix({{x(1), x(2)}, {x(2), x(1)}}) == x(1) * x(1) - x(2) * x(2));
  CHECK(det_bareiss({{x(1), x(2)}, {x(2), x(1)}}) == x(1) * x(1) - x(2) * x(2));
  CHECK(det_poly_matrix({{x(1), x(2)}, {x(1) * 2, x(2) * 2}}).is_zero());
}

TEST_CASE("property: apply_op is linear") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const DiffOp theta = random_op(rng, 3, 2, 1, 3);
    const Poly f = random_poly(rng, 3, 4, 5);
    const Poly g = random_poly(rng, 3, 4, 5);
    CHECK(apply_op(theta, f + g) == apply_op(theta, f) + apply_op(theta, g));
  }
}

TEST_CASE("property: exact_div inverts multiplication") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly f = random_poly(rng, 3, 4, 6);
    Poly g = random_poly(rng, 3, 4, 6);
    if (g.is_zero()) continue;
    CHECK(exact_div(f * g, g) == f);
  }
}

TEST_CASE("property: power_of_derivation equals repeated derivation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    RationalVector c{mfree::testing::random_rational(rng, 3), mfree::testing::random_rational(rng, 3),
                     mfree::testing::random_rational(rng, 3)};
    const int k = static_cast<int>(rng() % 4);
    const Poly f = random_poly(rng, 3, 5, 6);
    DiffOp once(3, 1);
    for (std::size_t i = 0; i < 3; ++i) once.add_term(MultiIndex::unit(3, i), Poly::constant(3, c[i]));
    Poly repeated = f;
    for (int i = 0; i < k; ++i) repeated = apply_op(once, repeated);
    CHECK(apply_op(power_of_derivation(c, k), f) == repeated);
  }
}

TEST_CASE("property: euler_op acts by the falling factorial") {
  for (int m = 0; m <= 4; ++m)
    for (int deg = 0; deg <= 6; ++deg)
      for (const auto& b : monomials_of_degree(3, deg)) {
        const Poly f = Poly::monomial(b);
        CHECK(apply_op(euler_op(m, 3), f) == f * Rational(falling(deg, m)));
      }
}

TEST_CASE("property: elimination determinant agrees with permutation expansion") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 3, 2, 3);
    const Poly expected = mfree::testing::det_leibniz(m);
    CHECK(det_poly_matrix(m) == expected);
    CHECK(det_bareiss(m) == expected);
    CHECK(det_cofactor(m) == expected);
  }
  // Sizes above the cofactor cut-off go through elimination; zero pivots force row swaps.
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::vector<Poly>> m(6, std::vector<Poly>(6, Poly(3)));
    for (auto& row : m)
      for (auto& e : row)
        if (rng() % 3 != 0) e = random_homogeneous(rng, 3, 1, 2);
    CHECK(det_poly_matrix(m) == mfree::testing::det_leibniz(m));
  }
}

TEST_CASE("property: compose_constant matches sequential application") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const DiffOp theta = random_op(rng, 3, 1 + static_cast<int>(rng() % 2), 1, 2);
    const DiffOp eta = random_op(rng, 3, 1 + static_cast<int>(rng() % 2), 0, 1);
    const Poly f = random_poly(rng, 3, 5, 6);
    CHECK(apply_op(compose_constant(theta, eta), f) == apply_op(theta, apply_op(eta, f)));
  }
}

TEST_CASE("normalized operators have coprime integer coefficients and positive lead") {
  const DiffOp op = (x(1) * make_rational(-2, 3)) * d({1, 0, 0}) + (x(2) * make_rational(4, 3)) * d({0, 1, 0});
  const DiffOp n = op.normalized();
  CHECK(n == x(1) * d({1, 0, 0}) - (x(2) * 2) * d({0, 1, 0}));
  CHECK(n.normalized() == n);
}

TEST_CASE("sparse integer echelon rank") {
  SparseEchelon e;
  CHECK(e.insert({{0, 2}, {1, 4}}));
  CHECK(e.insert({{1, 1}, {2, 3}}));
  CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 3}}));  // row0/2 + row1
  CHECK(e.rank() == 2);
  RationalMatrix m = RationalMatrix::from_rows({{2, 4, 0}, {0, 1, 3}, {1, 3, 3}}, 3);
  CHECK(m.rank() == 2);
  CHECK(m.nullspace().size() == 1);
}
