#include "taut/surface.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("builtin pairings") {
  SurfaceGeometry g;
  CHECK(g.pairing("omega", "omega").render() == "omega2");
  CHECK(g.pairing("omega", "L") == g.pairing("L", "omega"));
  CHECK(g.pairing("L", "L").render() == "L2");
  CHECK(g.fibre_degree("L").render() == "dL");
  CHECK(g.fibre_degree("omega").render() == "g2");
  CHECK(g.node_count.render() == "sigma");
}

TEST_CASE("user pairings are symmetric") {
  SurfaceGeometry g;
  g.set_pairing("A", "B", 7);
  CHECK(g.pairing("B", "A") == CharacterPolynomial(7));
  g.set_fibre_degree("A", 2);
  CHECK(fibre_degree(SurfaceClass::divisor("A", 3), g) == CharacterPolynomial(6));
}

TEST_CASE("class products respect degree") {
  SurfaceGeometry g;
  auto L = SurfaceClass::divisor("L");
  auto w = SurfaceClass::divisor("omega");
  auto lw = class_mul(L, w, g);
  CHECK(lw.min_degree() == 2);
  CHECK(integrate_on_X(lw).render() == "omegaL");
  CHECK(class_mul(lw, L, g).is_zero());
  CHECK(class_mul(SurfaceClass::scalar(3), L, g) == SurfaceClass::divisor("L", 3));
  CHECK(integrate_on_X(SurfaceClass::point(5)) == CharacterPolynomial(5));
  CHECK_THROWS_AS(fibre_degree(SurfaceClass::point(), g), GradingError);
}

TEST_CASE("basis multiplication") {
  SurfaceGeometry g;
  auto r = g.mul(BasisClass::divisor("L"), BasisClass::divisor("L"));
  REQUIRE(r);
  CHECK(r->first.render() == "L2");
  CHECK(r->second == BasisClass::pt());
  CHECK_FALSE(g.mul(BasisClass::pt(), BasisClass::divisor("L")));
  auto one = g.mul(BasisClass::one(), BasisClass::pt());
  REQUIRE(one);
  CHECK(one->second == BasisClass::pt());
}

TEST_CASE("character files") {
  auto m = parse_character_config("# comment\nsigma = 3\n\nomega2 = -1/2\n");
  CHECK(m.at("sigma") == 3);
  CHECK(m.at("omega2") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_character_config("nope = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_character_config("sigma 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_character_config("/nonexistent/chars.txt"), std::invalid_argument);
}
