#include <doctest.h>

#include <numbers>

#include "generators.hpp"
#include "twistrep/errors.hpp"
#include "twistrep/representation.hpp"

using namespace twistrep;
using twistrep::testing::Gen;

namespace {

// Multiplies letter by letter with Eigen's own inverse.
Mat3 naive_eval(const GroupWord& w, const Representation& rho) {
  Mat3 out = Mat3::Identity();
  const Mat3 xi = rho.X.inverse(), yi = rho.Y.inverse();
  for (const auto& l : w.letters()) {
    const Mat3& m = l.gen == Generator::X ? (l.exp > 0 ? rho.X : xi) : (l.exp > 0 ? rho.Y : yi);
    for (int i = 0; i < std::abs(l.exp); ++i) out = out * m;
  }
  return out;
}

double rel_norm(const Mat3& a, const Mat3& b) { return (a - b).norm() / std::max(1.0, std::max(a.norm(), b.norm())); }

Representation conjugate(const Representation& rho, const Mat3& g) {
  const Mat3 gi = g.inverse();
  return {g * rho.X * gi, g * rho.Y * gi};
}

}  // namespace

TEST_CASE("inverse3") {
  Gen g(51);
  for (int t = 0; t < 20; ++t) {
    const Mat3 m = g.unimodular();
    CHECK((inverse3(m) * m - Mat3::Identity()).norm() <= 1e-11);
  }
  CHECK_THROWS_AS((void)inverse3(Mat3::Zero()), NumericError);
}

TEST_CASE("validate") {
  Representation rho;
  CHECK_NOTHROW(rho.validate());
  rho.X *= 2.0;
  CHECK_THROWS_AS(rho.validate(), DomainError);
}

TEST_CASE("evaluate_word") {
  Gen g(52);
  const Representation rho = g.representation();
  CHECK(evaluate_word(GroupWord(), rho) == Mat3::Identity());
  CHECK(rel_norm(evaluate_word(GroupWord({{Generator::X, 1}, {Generator::X, -1}}), rho), Mat3::Identity()) <= 1e-12);
  for (int t = 0; t < 100; ++t) {
    const Representation r = g.representation();
    const GroupWord a = g.word(), b = g.word();
    CHECK(rel_norm(evaluate_word(a, r), naive_eval(a, r)) <= 1e-10);
    CHECK(rel_norm(evaluate_word(a * b, r), evaluate_word(a, r) * evaluate_word(b, r)) <= 1e-11);
  }
}

TEST_CASE("check_relation on trivial inputs") {
  CHECK(check_relation(Representation{}, 1) == 0.0);
  Gen g(53);
  for (int k = 1; k <= 4; ++k) {
    const Mat3 m = g.unimodular();
    CHECK(check_relation({m, m}, k) <= 1e-13);
    CHECK(check_trace_condition({m, m}, k) <= 1e-12);
  }
}

TEST_CASE("random pairs violate the relation and the trace condition") {
  Gen g(54);
  int relation_fail = 0, trace_fail = 0;
  for (int t = 0; t < 100; ++t) {
    const Representation rho = g.representation();
    if (check_relation(rho, 1) > 1e-3) ++relation_fail;
    if (check_trace_condition(rho, 1) > 1e-3) ++trace_fail;
  }
  CHECK(relation_fail >= 99);
  CHECK(trace_fail >= 99);
}

TEST_CASE("relation residual is conjugation invariant") {
  Gen g(55);
  // Z = identity in a non-trivial frame, then conjugate.
  for (int t = 0; t < 20; ++t) {
    const Representation rho = g.representation();
    const double r0 = check_relation(rho, 1);
    const Representation c = conjugate(rho, g.conjugator(100.0));
    const double r1 = check_relation(c, 1);
    CHECK(r1 <= r0 * 1e4 + 1e-9);
    CHECK(r1 >= r0 * 1e-4 - 1e-9);
  }
}

TEST_CASE("irreducibility") {
  const Mat3 d1 = Eigen::Vector3cd(2.0, 0.5, 1.0).asDiagonal();
  const Mat3 d2 = Eigen::Vector3cd(Complex(0, 1), Complex(0, -1), 1.0).asDiagonal();
  CHECK_FALSE(is_irreducible({d1, d2}));
  CHECK_FALSE(is_irreducible(Representation{}));

  Mat3 cycle = Mat3::Zero();
  cycle(0, 2) = 1.0;
  cycle(1, 0) = 1.0;
  cycle(2, 1) = 1.0;
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 7.0);
  const Mat3 y = Eigen::Vector3cd(zeta, zeta, std::pow(zeta, -2)).asDiagonal();
  CHECK(std::abs(cycle.determinant() - 1.0) <= 1e-15);
  CHECK(word_span_dimension({cycle, y}, 4) == 9);
  CHECK(is_irreducible({cycle, y}));

  // Block upper-triangular pairs share an invariant line.
  Gen g(56);
  for (int t = 0; t < 10; ++t) {
    Mat3 a = g.matrix(), b = g.matrix();
    a(1, 0) = a(2, 0) = 0.0;
    b(1, 0) = b(2, 0) = 0.0;
    CHECK_FALSE(is_irreducible({a, b}));
    CHECK(is_irreducible(g.representation()));
  }
}

TEST_CASE("character") {
  const CharacterRecord id = character(Representation{});
  for (Complex t : id.traces) CHECK(std::abs(t - 3.0) <= 1e-15);
  CHECK_THROWS_AS((void)id.at("xyxy"), DomainError);

  Gen g(57);
  const Representation rho = g.representation();
  const CharacterRecord c = character(rho);
  CHECK(std::abs(c.at("xy^-1") - (rho.X * rho.Y.inverse()).trace()) <= 1e-12);
  CHECK(std::abs(c.at("xyx^-1y^-1") - (rho.X * rho.Y * rho.X.inverse() * rho.Y.inverse()).trace()) <= 1e-11);
  for (int t = 0; t < 50; ++t) {
    const CharacterRecord cc = character(conjugate(rho, g.conjugator(100.0)));
    for (std::size_t i = 0; i < c.traces.size(); ++i) CHECK(std::abs(cc.traces[i] - c.traces[i]) <= 1e-9);
  }

  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const CharacterRecord s = character({w * rho.X, w * rho.Y});
  CHECK(std::abs(s.at("x") - w * c.at("x")) <= 1e-12);
  CHECK(std::abs(s.at("y") - w * c.at("y")) <= 1e-12);
  CHECK(std::abs(s.at("x^-1") - c.at("x^-1") / w) <= 1e-12);
  CHECK(std::abs(s.at("xy") - w * w * c.at("xy")) <= 1e-12);
  CHECK(std::abs(s.at("xy^-1") - c.at("xy^-1")) <= 1e-12);
  CHECK(std::abs(s.at("xyx^-1y^-1") - c.at("xyx^-1y^-1")) <= 1e-11);
}

TEST_CASE("exclusion set") {
  CHECK(is_excluded({1.0, 1.0, 1.0}, 1));
  CHECK_FALSE(is_excluded({2.0, 3.0, 1.0 / 6.0}, 1));
  const Complex root = std::polar(1.0, 2.0 * std::numbers::pi / 4.0);
  CHECK(is_excluded({root, 2.0, 1.0 / (2.0 * root)}, 1));
  const Complex r7 = std::polar(1.0, 2.0 * std::numbers::pi / 7.0);
  CHECK(is_excluded({3.0, r7, 1.0 / (3.0 * r7)}, 2));
  CHECK_FALSE(is_excluded({3.0, r7, 1.0 / (3.0 * r7)}, 1));
  CHECK(is_excluded({2.0, 2.0 + 1e-8, 1.0 / (4.0 + 2e-8)}, 1));
  CHECK_THROWS_AS((void)is_excluded({2.0, 3.0, 1.0}, 1), DomainError);
}
