#include <doctest.h>

#include "generators.hpp"
#include "twistrep/errors.hpp"
#include "twistrep/json_io.hpp"

using namespace twistrep;
using Json = nlohmann::json;
namespace jio = twistrep::json;
using twistrep::testing::Gen;

TEST_CASE("complex numbers round trip exactly") {
  Gen g(81);
  for (int t = 0; t < 50; ++t) {
    const Complex z = g.complex_box(1e3);
    const Json j = Json::parse(jio::complex_to_json(z).dump());
    CHECK(jio::complex_from_json(j) == z);
  }
  CHECK(jio::complex_to_json(Complex(0.1, -2.5)).dump() == "[0.1,-2.5]");
  CHECK_THROWS_AS((void)jio::complex_from_json(Json::parse("[1]")), DomainError);
  CHECK_THROWS_AS((void)jio::complex_from_json(Json::parse("\"x\"")), DomainError);
}

TEST_CASE("polynomials round trip") {
  Gen g(82);
  for (int t = 0; t < 30; ++t) {
    const LaurentPoly p = g.poly() * LaurentPoly(mpz_class("123456789012345678901234567890"));
    CHECK(jio::poly_from_json(Json::parse(jio::poly_to_json(p).dump())) == p);
  }
  CHECK(jio::poly_to_json(LaurentPoly::variable(0, -1) * 2 + 1).dump() == "[[0,0,0,\"1\"],[-1,0,0,\"2\"]]");
  CHECK_THROWS_AS((void)jio::poly_from_json(Json::parse("[[0,0,\"1\"]]")), DomainError);
  CHECK_THROWS_AS((void)jio::poly_from_json(Json::parse("[[0,0,0,\"1x\"]]")), DomainError);
}

TEST_CASE("curve spec round trip") {
  const CurveSpec c = curve_polynomial(1);
  const Json j = jio::curve_to_json(c);
  CHECK(j.at("variables") == Json({"l1", "l2"}));
  CHECK(j.at("terms").size() == c.poly.size());
  const CurveSpec back = jio::curve_from_json(Json::parse(j.dump()));
  CHECK(back.k == 1);
  CHECK(back.poly == c.poly);
  CHECK(back.degree == c.degree);
}

TEST_CASE("representation records") {
  Gen g(83);
  jio::RepresentationRecord r{2, g.representation(), g.lambda_product_one(), 1, 2};
  const Json j = Json::parse(jio::representation_to_json(r).dump());
  const auto back = jio::representation_from_json(j);
  CHECK(back.k == 2);
  CHECK(back.rep.X == r.rep.X);
  CHECK(back.rep.Y == r.rep.Y);
  CHECK(back.lambda.value() == r.lambda.value());
  CHECK(back.branch == 1);
  CHECK(back.sheet == 2);

  const Json bare = {{"X", jio::matrix_to_json(Mat3::Identity())},
                     {"Y", jio::matrix_to_json(Mat3::Identity())}};
  const auto b2 = jio::representation_from_json(bare);
  CHECK(b2.k == 1);
  CHECK_FALSE(b2.lambda.has_value());

  CHECK_THROWS_AS((void)jio::representation_from_json(Json::parse("{\"X\": 1}")), DomainError);
  CHECK_THROWS_AS((void)jio::representation_from_json(Json::parse("[1, 2]")), DomainError);
  Json bad = bare;
  bad["Y"][1] = Json::array({Json::array({1, 0})});
  CHECK_THROWS_AS((void)jio::representation_from_json(bad), DomainError);
}

TEST_CASE("character record is keyed by word") {
  const Json j = jio::character_to_json(character(Representation{}));
  CHECK(j.size() == 9);
  CHECK(j.at("xy^-1") == Json::array({3.0, 0.0}));
}
