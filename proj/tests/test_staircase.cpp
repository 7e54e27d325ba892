#include "taut/staircase.hpp"

#include <doctest.h>

using namespace taut;

namespace {

// Lattice points outside the monomial ideal, counted directly from the generators.
long long brute_colength(const Staircase& s, int bound) {
  long long n = 0;
  for (int a = 0; a < bound; ++a)
    for (int b = 0; b < bound; ++b) {
      bool inside = false;
      for (const auto& [x, y] : s.generators) inside = inside || (a >= x && b >= y);
      n += inside ? 0 : 1;
    }
  return n;
}

Poly2 poly(std::initializer_list<std::pair<Exponent2, long>> terms) {
  Poly2 p;
  for (const auto& [e, c] : terms) p[e] = c;
  return p;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("minimalized staircases drop redundant generators") {
  Staircase s = Staircase::minimalized({{2, 0}, {3, 1}, {0, 2}, {1, 1}});
  CHECK(s.generators.size() == 3);
  CHECK(s.contains({3, 1}));
  CHECK_FALSE(s.contains({1, 0}));
}

TEST_CASE("alpha equals the lattice count and the binomial") {
  for (int m = 2; m <= 8; ++m) {
    Staircase s = j_m(m);
    CHECK(brute_colength(s, 4 * m) == alpha(m));
    CHECK(alpha(m) == binomial(m + 2, 4));
    CHECK(colength(BivariateIdeal{m, s, std::nullopt}) == alpha(m));
  }
  CHECK(alpha_printed_closed_form(3) == alpha(3));
  CHECK(alpha_printed_closed_form(4) == 18);
}

TEST_CASE("colength of small non-monomial ideals") {
  // x^2 - y, y^2: basis 1, x, x^2, x^3.
  CHECK(colength({poly({{{2, 0}, 1}, {{0, 1}, -1}}), poly({{{0, 2}, 1}})}) == 4);
  // xy, x + y: basis 1, y.
  CHECK(colength({poly({{{1, 1}, 1}}), poly({{{1, 0}, 1}, {{0, 1}, 1}})}) == 2);
  CHECK(colength({poly({{{2, 0}, 1}}), poly({{{0, 3}, 1}})}) == 6);
  CHECK(standard_monomials({poly({{{1, 0}, 1}}), poly({{{0, 2}, 1}})}).size() == 2);
  CHECK_THROWS_AS(colength({poly({{{2, 0}, 1}})}), InfiniteColengthError);
}

TEST_CASE("Groebner basis is reduced and generates the same ideal") {
  auto g = groebner_basis({poly({{{2, 0}, 1}, {{0, 1}, -1}}), poly({{{0, 2}, 1}})});
  CHECK_FALSE(g.empty());
  for (const auto& p : g) CHECK(p.begin()->second == 1);
}

TEST_CASE("beta tables") {
  CHECK(beta(2) == std::vector<long long>{1});
  CHECK(beta(5) == std::vector<long long>{10, 15, 15, 10});
  CHECK(beta(6) == std::vector<long long>{15, 24, 27, 24, 15});
  for (int m = 2; m <= 8; ++m) {
    auto b = beta(m);
    CHECK(b.front() == binomial(m, 2));
    for (size_t j = 0; j < b.size(); ++j) CHECK(b[j] == b[b.size() - 1 - j]);
    // Sum m^2 (m^2 - 1) / 12, the small-diagonal multiplicity.
    long long total = 0;
    for (long long x : b) total += x;
    CHECK(total == static_cast<long long>(m) * m * (m * m - 1) / 12);
    CHECK(beta_total(m) == total);
  }
}

TEST_CASE("beta does not depend on eta") {
  Rational e(-3, 5);
  for (int m = 2; m <= 6; ++m)
    for (int j = 1; j < m; ++j) {
      CHECK(beta_at(m, j, 1) == beta_at(m, j, 2));
      CHECK(beta_at(m, j, 1) == beta_at(m, j, e));
    }
  CHECK(beta(4, 3, Rational(7, 2)) == beta(4));
}

TEST_CASE("beta is the colength of the staircase plus the binomial") {
  for (int m = 2; m <= 5; ++m)
    for (int j = 1; j < m; ++j)
      CHECK(colength(BivariateIdeal{m, j_m(m), BivariateIdeal::Binomial{j, 1}}) == beta_at(m, j, 1));
}

TEST_CASE("polygon diagnostics") {
  CHECK(printed_polygon_region(3, 1).agrees);
  CHECK(printed_polygon_region(3, 2).value == 4);
  CHECK_FALSE(printed_polygon_region(3, 2).agrees);
  for (int m = 2; m <= 5; ++m)
    for (int j = 1; j < m; ++j) CHECK(elimination_cobasis_count(m, j).beta == beta_at(m, j, 1));
}

TEST_CASE("staircase argument errors") {
  CHECK_THROWS_AS(beta_at(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(beta_at(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(beta(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(j_m(1), std::invalid_argument);
}
