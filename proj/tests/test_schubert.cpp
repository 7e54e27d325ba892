#include "taut/schubert.hpp"

#include <doctest.h>

#include <random>

using namespace taut;

namespace {

// Hook length formula for the full a x b rectangle.
long rectangle_tableaux(int a, int b) {
  Rational n = 1;
  for (int k = 2; k <= a * b; ++k) n *= k;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) n /= (a - i) + (b - j) - 1;
  return n.get_num().get_si();
}

std::vector<SpecialFactor> rows(std::vector<int> sizes) {
  std::vector<SpecialFactor> f;
  for (int s : sizes) f.push_back({StripKind::row, s});
  return f;
}

}  // namespace

TEST_CASE("box partitions") {
  BoxPartition p{{4, 2}, 2, 4};
  CHECK(p.valid());
  CHECK(p.size() == 6);
  CHECK(p.render() == "(4,2)");
  CHECK(p.transposed().rows == std::vector<int>{2, 2, 1, 1});
  CHECK(p.transposed().transposed() == p);
  CHECK_FALSE((BoxPartition{{2, 4}, 2, 4}).valid());
  CHECK(BoxPartition::empty(2, 3).render() == "()");
}

TEST_CASE("Pieri products") {
  SchurExpr e = pieri_mul(pieri_mul(SchurExpr::unit(2, 2), {StripKind::row, 1}), {StripKind::row, 1});
  CHECK(e.render() == "s(1,1) + s(2)");
  SchurExpr c = pieri_mul(SchurExpr::unit(3, 3), {StripKind::column, 2});
  CHECK(c.render() == "s(1,1)");
  CHECK_THROWS_AS(pieri_mul(SchurExpr::unit(2, 4), {StripKind::row, 5}), std::invalid_argument);
  CHECK_THROWS_AS(pieri_mul(SchurExpr::unit(2, 4), {StripKind::row, -1}), std::invalid_argument);
}

TEST_CASE("degrees of Grassmannians") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 4; ++b)
      CHECK(grassmann_integral(a, b, rows(std::vector<int>(a * b, 1))) == rectangle_tableaux(a, b));
  CHECK(rectangle_tableaux(2, 2) == 2);
  CHECK(rectangle_tableaux(2, 4) == 14);
}

TEST_CASE("row and column classes are dual") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    std::vector<SpecialFactor> r, c;
    int left = 8;
    while (left > 0) {
      int s = 1 + static_cast<int>(rng() % std::min(left, 4));
      r.push_back({StripKind::row, s});
      c.push_back({StripKind::column, s});
      left -= s;
    }
    CHECK(grassmann_integral(2, 4, r) == grassmann_integral(4, 2, c));
  }
}

TEST_CASE("integrals outside top degree vanish") {
  CHECK(grassmann_integral(2, 4, rows({4, 3})) == 0);
  CHECK(grassmann_integral(2, 4, rows({4, 4})) == 1);
  CHECK(grassmann_integral(2, 4, rows({2, 3, 3})) == 1);
}

TEST_CASE("multisecant tuples and factors") {
  auto tuples = nsec3_tuples();
  CHECK(tuples.size() == 9);
  for (const auto& j : tuples) {
    CHECK(j[0] + j[1] + j[2] == 4);
    CHECK(j[2] > 0);
    CHECK(j[0] <= 2);
  }
  TautRing R;
  Nsec3Result res = nsec3(R);
  CharacterPolynomial sum;
  for (const auto& t : res.terms) {
    CHECK(t.grassmann == 1);
    sum += t.product();
  }
  CHECK(sum == res.total);
  CHECK(res.n3() * CharacterPolynomial(6) == res.total);
  CHECK(nsec3(R, StripKind::column).total == res.total);
}
