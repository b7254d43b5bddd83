#include <doctest.h>

#include <climits>

#include "generators.hpp"
#include "twistrep/errors.hpp"
#include "twistrep/knot_system.hpp"
#include "twistrep/laurent_poly.hpp"

using namespace twistrep;
using twistrep::testing::Gen;

namespace {

const LaurentPoly l1 = LaurentPoly::variable(0);
const LaurentPoly l2 = LaurentPoly::variable(1);
const LaurentPoly l3 = LaurentPoly::variable(2);

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("addition cancels and merges") {
  CHECK((l1 + 1) + (-l1) == LaurentPoly(1));
  CHECK(l2 + LaurentPoly() == l2);
  const LaurentPoly inv = LaurentPoly::variable(0, -1);
  CHECK((inv + l2) + inv == 2 * inv + l2);
  CHECK((l1 - l1).is_zero());
  CHECK(poly_add(l1, l2) == l1 + l2);
}

TEST_CASE("multiplication adds exponents") {
  CHECK(l1 * LaurentPoly::variable(0, -1) == LaurentPoly(1));
  CHECK((l1 - 1) * (l1 + 1) == l1 * l1 - 1);
  CHECK(poly_mul(l1, l2) == LaurentPoly::monomial({1, 1, 0}));
  CHECK((l1 + 1).pow(0) == LaurentPoly(1));
  CHECK((l1 + 1).pow(3) == l1 * l1 * l1 + 3 * l1 * l1 + 3 * l1 + 1);
}

TEST_CASE("no stored coefficient is zero and terms are canonical") {
  Gen g(11);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly p = g.poly() * g.poly() - g.poly();
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
      CHECK(p.terms()[i].coeff != 0);
      if (i > 0) CHECK(canonical_before(p.terms()[i - 1].exp, p.terms()[i].exp));
    }
  }
}

TEST_CASE("from_terms sorts, merges and prunes") {
  const LaurentPoly p = LaurentPoly::from_terms({{{0, 1, 0}, 2}, {{1, 0, 0}, 3}, {{0, 1, 0}, -2}, {{0, 0, 0}, 0}});
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].exp == Exponent{1, 0, 0});
  CHECK(p.terms()[0].coeff == 3);
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g(12);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly a = g.poly(), b = g.poly(), c = g.poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("exact arithmetic never rounds") {
  // 2^200 + 1 - 2^200 survives exactly.
  const LaurentPoly big(mpz_class(1) << 200);
  CHECK((big + 1) - big == LaurentPoly(1));
  const LaurentPoly sq = (big * l1 + 1) * (big * l1 - 1);
  CHECK(sq == LaurentPoly(mpz_class(1) << 400) * l1 * l1 - 1);
}

TEST_CASE("evaluation") {
  CHECK(std::abs(poly_eval(l1 * l2 * l3, {2.0, 3.0, 1.0 / 6.0}) - 1.0) < 1e-15);
  CHECK(poly_eval(LaurentPoly(1), {0.3, Complex(0, 1), 7.0}) == Complex(1.0));
  CHECK_THROWS_AS((void)poly_eval(l1, {0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("theta at (2, 3, 1/6) matches the direct product") {
  const LambdaTriple l{2.0, 3.0, 1.0 / 6.0};
  Complex direct = 1.0;
  for (Complex z : l) direct *= 1.0 - std::pow(z, 4);
  const Complex via_poly = poly_eval(build_system(1).theta, l);
  CHECK(rel_err(via_poly, direct) <= 1e-12);
  CHECK(rel_err(direct, 1200.0 * 1295.0 / 1296.0) <= 1e-15);
}

TEST_CASE("evaluation is a ring homomorphism") {
  Gen g(13);
  for (int t = 0; t < 20; ++t) {
    const LaurentPoly p = g.poly(), q = g.poly();
    for (int s = 0; s < 10; ++s) {
      const LambdaTriple l = g.lambda();
      const Complex pv = poly_eval(p, l), qv = poly_eval(q, l);
      const double scale = std::max(1.0, std::abs(pv) * std::abs(qv));
      CHECK(std::abs(poly_eval(p * q, l) - pv * qv) <= 1e-12 * scale);
      CHECK(std::abs(poly_eval(p + q, l) - (pv + qv)) <= 1e-12 * std::max({1.0, std::abs(pv), std::abs(qv)}));
    }
  }
}

TEST_CASE("evaluation agrees with a term-by-term sum") {
  Gen g(14);
  for (int t = 0; t < 20; ++t) {
    const LaurentPoly p = g.poly();
    const LambdaTriple l = g.lambda();
    Complex sum = 0.0;
    double mag = 0.0;
    for (const auto& term : p.terms()) {
      Complex m = term.coeff.get_d();
      for (int v = 0; v < 3; ++v) m *= std::pow(l[v], term.exp[v]);
      sum += m;
      mag += std::abs(m);
    }
    CHECK(std::abs(poly_eval(p, l) - sum) <= 1e-12 * std::max(1.0, mag));
  }
}

TEST_CASE("substitute_lambda3") {
  CHECK(substitute_lambda3(l3) == LaurentPoly::monomial({-1, -1, 0}));
  CHECK(substitute_lambda3(l1 * l2 * l3 - 1).is_zero());

  Gen g(15);
  for (int k = 1; k <= 4; ++k) {
    const LaurentPoly delta = build_system(k).delta;
    const LaurentPoly sub = substitute_lambda3(delta);
    for (const auto& t : sub.terms()) CHECK(t.exp[2] == 0);
    for (int s = 0; s < 5; ++s) {
      const LambdaTriple l = g.lambda_product_one();
      CHECK(rel_err(poly_eval(sub, l), poly_eval(delta, l)) <= 1e-12);
    }
  }
  for (int t = 0; t < 30; ++t) {
    const LaurentPoly a = g.poly(), b = g.poly();
    CHECK(substitute_lambda3(a + b) == substitute_lambda3(a) + substitute_lambda3(b));
    CHECK(substitute_lambda3(a * b) == substitute_lambda3(a) * substitute_lambda3(b));
  }
}

TEST_CASE("normalize_to_polynomial") {
  CHECK(normalize_to_polynomial(LaurentPoly::variable(0, -1) - 1) == l1 - 1);
  CHECK(normalize_to_polynomial(6 * l1 * l1 - 4 * l1) == 3 * l1 - 2);
  CHECK_THROWS_AS((void)normalize_to_polynomial(LaurentPoly()), DomainError);
  CHECK(content(6 * l1 - 4) == 2);
  CHECK(content(LaurentPoly()) == 0);

  Gen g(16);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly p = g.nonzero_poly();
    const LaurentPoly n = normalize_to_polynomial(p);
    CHECK(normalize_to_polynomial(n) == n);
    CHECK(n.min_exponents() == Exponent{0, 0, 0});
    CHECK(content(n) == 1);
    CHECK(n.terms().front().coeff > 0);
  }
}

TEST_CASE("exponent overflow is detected") {
  const LaurentPoly big = LaurentPoly::monomial({INT_MAX, 0, 0});
  CHECK_THROWS((void)(big * l1));
  CHECK_THROWS((void)LaurentPoly::monomial({INT_MIN, 0, 0}).pow(2));
}

TEST_CASE("to_string") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((2 * LaurentPoly::variable(0, -1) + l2 - 3).to_string() == "l2 - 3 + 2*l1^-1");
}
