#include <doctest.h>

#include "qcoh/algebra/determinant.hpp"
#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/algebra/rational_function.hpp"
#include "qcoh/algebra/sampling.hpp"

using namespace qcoh;
using R = Rational;
using P = Polynomial<R>;

TEST_CASE("rational canonical form") {
  CHECK(R(6, -4).to_string() == "-3/2");
  CHECK(R(0, 5).to_string() == "0/1");
  CHECK(R(5).to_string() == "5/1");
  CHECK(R::parse(" -12/8 ") == R(-3, 2));
  CHECK(R::parse("7") == R(7));
  CHECK_THROWS_AS(R::parse("1/0"), Error);
  CHECK_THROWS_AS(R::parse("x"), Error);
  CHECK_THROWS_AS(R(1) / R(0), Error);
  CHECK_THROWS_AS(R(0).inverse(), Error);
  // parse(to_string(r)) is the identity on canonical values
  RationalSampler s(3);
  for (int i = 0; i < 50; ++i) {
    const R r = s.any();
    CHECK(R::parse(r.to_string()) == r);
  }
}

TEST_CASE("rational powers and square roots") {
  CHECK(R(2, 3).pow(-2) == R(9, 4));
  CHECK(R(-2).pow(3) == R(-8));
  CHECK(R(9, 4).sqrt_exact() == R(3, 2));
  CHECK_FALSE(R(2).sqrt_exact().has_value());
  CHECK_FALSE(R(-4).sqrt_exact().has_value());
}

TEST_CASE("rational field axioms on random samples") {
  RationalSampler s(11, 50, 40);
  for (int i = 0; i < 200; ++i) {
    const R a = s.any(), b = s.any(), c = s.any();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == R(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == R(1));
  }
}

TEST_CASE("polynomial arithmetic") {
  const P x = P::x();
  CHECK(poly_arith(x + P::constant(R(1)), x - P::constant(R(1)), PolyOp::Mul) == P({R(-1), R(0), R(1)}));
  const P p({R(1), R(2), R(3)});
  CHECK(poly_arith(p, P(), PolyOp::Add) == p);
  CHECK(poly_arith(P::monomial(R(2), 1), P::monomial(R(3), 2), PolyOp::Mul) == P::monomial(R(6), 3));
  CHECK(P().degree() == -1);
  CHECK(P({R(1), R(0), R(0)}).degree() == 0);  // trailing zeros trimmed
  CHECK((p - p).is_zero());

  RationalSampler s(5);
  for (int i = 0; i < 30; ++i) {
    const P f = s.polynomial(s.integer(0, 5)), g = s.polynomial(s.integer(0, 5));
    CHECK((f * g).degree() == f.degree() + g.degree());
    const auto dm = divmod(f, g);
    CHECK(dm.quotient * g + dm.remainder == f);
    CHECK(dm.remainder.degree() < g.degree());
    const R at = s.any();
    CHECK((f * g)(at) == f(at) * g(at));
  }
}

TEST_CASE("polynomial gcd is monic and divides both") {
  const P a = P::linear_factor(R(2)) * P::linear_factor(R(-1, 3));
  const P b = P::linear_factor(R(2)) * P::linear_factor(R(5)) * R(7);
  CHECK(gcd(a, b) == P::linear_factor(R(2)));
  CHECK_THROWS_AS(exact_quotient(a, P::linear_factor(R(5))), Error);
}

TEST_CASE("affine substitution") {
  CHECK(affine_substitute(P::monomial(R(1), 2), R(2), R(1)) == P({R(1), R(4), R(4)}));
  const P p({R(3), R(-1), R(0), R(5)});
  CHECK(affine_substitute(p, R(1), R(0)) == p);
  // c^n L_n(x/c) for L_n = x recovers x
  const R c(7, 3);
  CHECK(affine_substitute(P::x(), c.inverse(), R(0)) * c == P::x());
  RationalSampler s(8);
  for (int i = 0; i < 30; ++i) {
    const P f = s.polynomial(s.integer(0, 6));
    const R sc = s.nonzero(), t = s.any();
    CHECK(affine_substitute(affine_substitute(f, sc, t), sc.inverse(), -t / sc) == f);
    CHECK(affine_substitute(f, sc, t).degree() == f.degree());
  }
  CHECK(affine_substitute(p, R(0), R(2)) == P::constant(p(R(2))));
}

TEST_CASE("rational functions") {
  const P t = P::x();
  const RationalFunction f(t * t + t, t);
  CHECK(f.num() == t + P::constant(R(1)));
  CHECK(f.den() == P::constant(R(1)));
  CHECK(rf_limit_at_zero(f) == R(1));
  CHECK(rf_limit_at_zero(RationalFunction(P::constant(R(3)), t + P::constant(R(2)))) == R(3, 2));
  CHECK_THROWS_AS(rf_limit_at_zero(RationalFunction(P::constant(R(1)), t)), Error);
  CHECK_THROWS_AS(RationalFunction(t, P()), Error);
  // den is monic after normalization
  const RationalFunction g(t * R(2), t * R(4) + P::constant(R(6)));
  CHECK(g.den().is_monic());
  CHECK(RationalFunction(g.num(), g.den()) == g);
}

TEST_CASE("rational function field axioms on random samples") {
  RationalSampler s(21);
  auto draw = [&] {
    return RationalFunction(s.polynomial(s.integer(0, 2)), s.monic(s.integer(0, 2)));
  };
  for (int i = 0; i < 40; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFunction(R(0)));
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(R(1)));
    const R at = s.any();
    if (!b.den()(at).is_zero() && !a.den()(at).is_zero()) CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
  }
}

TEST_CASE("polynomial determinants agree") {
  RationalSampler s(13);
  for (int size = 1; size <= 4; ++size) {
    for (int trial = 0; trial < 5; ++trial) {
      PolyMatrix<R> m(static_cast<std::size_t>(size));
      for (auto& row : m) {
        for (int j = 0; j < size; ++j) row.push_back(trial == 0 && j == 0 ? P() : s.polynomial(s.integer(0, 2)));
      }
      const P det = det_cofactor(m);
      CHECK(det == det_bareiss(m));
      // evaluation commutes with the determinant
      const R at = s.any();
      PolyMatrix<R> ev = m;
      for (auto& row : ev) for (auto& e : row) e = P::constant(e(at));
      CHECK(det_cofactor(ev) == P::constant(det(at)));
    }
  }
  PolyMatrix<R> two{{P::x(), P::constant(R(1))}, {P::constant(R(2)), P::x()}};
  CHECK(det_bareiss(two) == P({R(-2), R(0), R(1)}));
  PolyMatrix<R> singular{{P::x(), P::x()}, {P::x(), P::x()}};
  CHECK(det_bareiss(singular).is_zero());
  CHECK(det_cofactor(replace_column(two, 0, {P::constant(R(1)), P::constant(R(1))})) == P::x() - P::constant(R(1)));
}
