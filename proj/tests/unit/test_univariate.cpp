#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "twistrep/univariate.hpp"

using namespace twistrep;
using twistrep::testing::Gen;

namespace {

CurveSpec spec_of(const LaurentPoly& p) {
  CurveSpec s;
  s.poly = p;
  const Exponent hi = p.max_exponents();
  s.degree = {hi[0], hi[1]};
  return s;
}

// Greedy nearest matching of two root multisets; returns the worst distance.
double match_roots(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (Complex z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) { return std::abs(p - z) < std::abs(q - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

const LaurentPoly l1 = LaurentPoly::variable(0);
const LaurentPoly l2 = LaurentPoly::variable(1);

}  // namespace

TEST_CASE("restrict_curve on small polynomials") {
  const UniPoly p = restrict_curve(spec_of(l1 * l2 - 1), 2.0);
  REQUIRE(p.degree() == 1);
  CHECK(std::abs(p.coeffs[0] + 1.0) <= 1e-15);
  CHECK(std::abs(p.coeffs[1] - 2.0) <= 1e-15);
  const auto r = roots(p);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - 0.5) <= 1e-15);

  const UniPoly q = restrict_curve(spec_of(l2 * l2), Complex(0.3, 0.7));
  REQUIRE(q.degree() == 2);
  for (Complex z : roots(q)) CHECK(std::abs(z) <= 1e-12);
}

TEST_CASE("degenerate slices are reported") {
  CHECK_THROWS_AS((void)restrict_curve(spec_of((l1 - 2) * l2), 2.0), DegenerateSlice);
  CHECK_THROWS_AS((void)restrict_curve(spec_of(l1 * l2), 0.0), DomainError);
}

TEST_CASE("curve slice roots lie on the curve") {
  const CurveSpec spec = curve_polynomial(1);
  const Complex a(1.3, 0.4);
  const UniPoly p = restrict_curve(spec, a);
  CHECK(p.degree() >= 1);
  for (Complex b : roots(p)) {
    if (std::abs(b) < 1e-12) continue;
    double scale = 0.0;
    for (const auto& t : spec.poly.terms())
      scale += std::abs(t.coeff.get_d()) * std::pow(std::abs(a), t.exp[0]) * std::pow(std::abs(b), t.exp[1]);
    CHECK(std::abs(poly_eval(spec.poly, {a, b, 1.0})) <= 1e-8 * scale);
    CHECK(curve_residual(spec, a, b) <= 1e-8);
  }
}

TEST_CASE("roots of simple polynomials") {
  CHECK(match_roots(roots(UniPoly{{-1.0, 0.0, 1.0}}), {1.0, -1.0}) <= 1e-14);
  const auto cube = roots(UniPoly{{-1.0, 0.0, 0.0, 1.0}});
  REQUIRE(cube.size() == 3);
  for (Complex z : cube) CHECK(std::abs(z * z * z - 1.0) <= 1e-12);
  CHECK_THROWS_AS((void)roots(UniPoly{{3.0}}), DomainError);
}

TEST_CASE("roots recover a polynomial built from its roots") {
  Gen g(61);
  for (int t = 0; t < 20; ++t) {
    std::vector<Complex> want;
    for (int i = 0; i < 10; ++i) want.push_back(g.complex_annulus(0.3, 3.0));
    std::vector<Complex> c{1.0};
    for (Complex r : want) {
      std::vector<Complex> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    const auto got = roots(UniPoly{c});
    REQUIRE(got.size() == 10);
    CHECK(match_roots(got, want) <= 1e-8);
    CHECK(std::is_sorted(got.begin(), got.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    }));
  }
}
