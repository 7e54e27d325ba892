#include "taut/charpoly.hpp"

#include <doctest.h>

#include <random>

using namespace taut;

namespace {

Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

CharacterPolynomial sym(const char* s) { return CharacterPolynomial::symbol(s); }

CharacterPolynomial random_poly(std::mt19937_64& rng) {
  static const char* names[] = {"sigma", "omega2", "omegaL", "dL", "u"};
  CharacterPolynomial p = frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
  for (int k = 0; k < 3; ++k) {
    CharacterPolynomial t = frac(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    for (int d = static_cast<int>(rng() % 3); d > 0; --d) t *= sym(names[rng() % 5]);
    p += t;
  }
  return p;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(2, 4).get_den() == 2);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("rendering uses the builtin symbol order") {
  CharacterPolynomial p = sym("omega2") * 14 - sym("sigma") * 2;
  CHECK(p.render() == "-2*sigma + 14*omega2");
  CHECK(CharacterPolynomial().render() == "0");
  CHECK((sym("L2") * sym("dL")).render() == "L2*dL");
  CHECK((sym("dL") * sym("dL") * sym("L2")).render() == "L2*dL^2");
  CHECK(CharacterPolynomial(Rational(-1, 2)).render() == "-1/2");
  CHECK(builtin_symbols().front() == "sigma");
}

TEST_CASE("parse and render round trip") {
  for (const char* text : {"-2*sigma + 14*omega2", "0", "1/2*omegaL - L2*dL^2", "3", "-sigma + omega2 + u*v"}) {
    CharacterPolynomial p = parse_charpoly(text);
    CHECK(parse_charpoly(p.render()) == p);
  }
  CHECK_THROWS(parse_charpoly("2*"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == CharacterPolynomial());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  std::map<std::string, Rational> at{{"sigma", 2}, {"omega2", Rational(1, 3)}, {"omegaL", -1}, {"dL", 4}, {"u", 5}};
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(rng), b = random_poly(rng);
    auto ea = a.evaluate(at), eb = b.evaluate(at);
    REQUIRE(ea.is_constant());
    CHECK((a * b).evaluate(at) == ea * eb);
    CHECK((a + b).evaluate(at) == ea + eb);
  }
}

TEST_CASE("partial evaluation keeps the other symbols") {
  CharacterPolynomial p = sym("sigma") * sym("dL") + sym("L2");
  CHECK(p.evaluate({{"dL", 3}}).render() == "3*sigma + L2");
  CHECK_FALSE(p.is_constant());
  CHECK(CharacterPolynomial(5).constant() == 5);
}

TEST_CASE("parenthesization") {
  CHECK_FALSE(sym("sigma").needs_parens());
  CHECK((sym("sigma") + 1).needs_parens());
  CHECK(is_identifier("omegaL"));
  CHECK_FALSE(is_identifier("2x"));
}
