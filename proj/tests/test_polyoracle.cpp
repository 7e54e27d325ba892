#include "taut/polyoracle.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("normal form reduces x_i y_i to t") {
  CHECK(QuotPoly::x(2, 1) * QuotPoly::y(2, 1) == QuotPoly::t(2));
  CHECK(QuotPoly::x(2, 1) * QuotPoly::y(2, 2) != QuotPoly::t(2));
  // x1^2 y1 x2 y2 = t^2 x1 in any reduction order.
  std::map<QuotPoly::Exps, Rational> raw{{{2, 1, 1, 1, 0}, 3}};
  QuotPoly want = QuotPoly::t(2, 2).scaled(3) * QuotPoly::x(2, 1);
  CHECK(QuotPoly::from_raw(2, raw) == want);
  CHECK(normalize_in_order(2, raw, {2, 1}) == want);
  CHECK(want.t_valuation() == 2);
  CHECK(QuotPoly(2).t_valuation() == -1);
}

TEST_CASE("two-point determinants by hand") {
  QuotPoly g1 = QuotPoly::x(2, 1) - QuotPoly::x(2, 2);
  QuotPoly g2 = QuotPoly::y(2, 1) - QuotPoly::y(2, 2);
  CHECK(vdm_det(2, 1) == g1);
  CHECK(vdm_det(2, 2) == g2);
  // t G_2 = -sigma^y_2 G_1.
  CHECK(QuotPoly::t(2) * g2 == -(sigma_y(2, 2) * g1));
  auto s = check_chain(2, 1);
  CHECK(s.ok);
  CHECK(s.sign == -1);
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(sigma_x(3, 0) == QuotPoly::constant(3, 1));
  CHECK(sigma_x(2, 1) == QuotPoly::x(2, 1) + QuotPoly::x(2, 2));
  CHECK(sigma_y(2, 2) == QuotPoly::y(2, 1) * QuotPoly::y(2, 2));
}

TEST_CASE("determinants are leading-positive and vanish on the diagonal") {
  for (int m = 2; m <= 4; ++m)
    for (int i = 1; i <= m; ++i) {
      CHECK(vdm_det(m, i).leading_coefficient() > 0);
      CHECK(diagonal_vanish(m, i));
    }
}

TEST_CASE("chain and syzygy identities") {
  for (int m = 2; m <= 5; ++m)
    for (int i = 1; i < m; ++i) CHECK(check_chain(m, i).ok);
  for (int m = 2; m <= 4; ++m)
    for (int j = 0; j < m; ++j) {
      for (int i = 1; i <= m - 1; ++i) CHECK(check_syzygy(2, m, i, j).ok);
      for (int i = 2; i <= m; ++i) CHECK(check_syzygy(3, m, i, j).ok);
    }
  CHECK_THROWS(check_syzygy(4, 3, 1, 0));
}

TEST_CASE("orders of vanishing") {
  for (int m = 2; m <= 4; ++m) {
    OrdTable t = ord_table(m, 11);
    CHECK(t.well_defined);
    CHECK(t.nonnegative);
    CHECK(t.adjacent_zero_pairs);
    REQUIRE(t.value.size() == static_cast<size_t>(m));
    // G_1 and G_m exchange under x <-> y, reversing the component size.
    for (int k = 0; k <= m; ++k) CHECK(t.value[0][k] == t.value[m - 1][m - k]);
  }
  CHECK(ord_table(3, 1).value == ord_table(3, 99).value);
  CHECK(OrdTable::printed(4, 1) == 12);
}

TEST_CASE("eta exponents") {
  // y1 y2 (x1 - x2)^2 = -t (x1 - x2)(y1 - y2) at m = 2.
  CHECK(eta_identity_exponent(2, 1, 2) == 1);
  for (int m = 2; m <= 4; ++m)
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j) {
        CHECK(Rational(eta_identity_exponent(m, i, j)) == eta_expected(m, i, j));
        CHECK(eta_valuation(m, i, j) >= eta_identity_exponent(m, i, j));
      }
  CHECK(eta_valuation(3, 1, 3) == 4);
  CHECK(eta_printed(3, 2, 2) == 2);
}
