#pragma once

#include "taut/charpoly.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace taut {

// Polynomial in x_1..x_m, y_1..y_m, t kept in normal form modulo x_i y_i = t.
// Exponent layout: [x_1..x_m, y_1..y_m, t].
class QuotPoly {
 public:
  using Exps = std::vector<int>;

  explicit QuotPoly(int m = 0) : m_(m) {}
  static QuotPoly constant(int m, const Rational& c);
  static QuotPoly x(int m, int i, int power = 1);
  static QuotPoly y(int m, int i, int power = 1);
  static QuotPoly t(int m, int power = 1);
  // Builds a polynomial from raw (possibly unreduced) terms and normalizes it.
  static QuotPoly from_raw(int m, const std::map<Exps, Rational>& raw);

  int m() const { return m_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QuotPoly operator+(const QuotPoly& o) const;
  QuotPoly operator-(const QuotPoly& o) const;
  QuotPoly operator*(const QuotPoly& o) const;
  QuotPoly operator-() const;
  QuotPoly scaled(const Rational& c) const;
  bool operator==(const QuotPoly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

  // Largest E with t^E dividing this polynomial in the quotient ring; -1 for zero.
  int t_valuation() const;
  // Coefficient of the lexicographically largest monomial (x_1 first).
  Rational leading_coefficient() const;
  std::string render() const;

 private:
  void add(const Exps& e, const Rational& c);
  int m_;
  std::map<Exps, Rational> terms_;
};

// Reduces x_i y_i -> t for the indices in `order`, one index at a time.
// With order = 1..m this is the canonical normalization.
QuotPoly normalize_in_order(int m, const std::map<QuotPoly::Exps, Rational>& raw, const std::vector<int>& order);

constexpr int kMaxVdmLevel = 6;

// Elementary symmetric polynomials in the x or y variables.
QuotPoly sigma_x(int m, int k);
QuotPoly sigma_y(int m, int k);

// G_i = +-det of the mixed Van der Monde matrix with rows 1, x, .., x^(m-i), y, .., y^(i-1);
// sign chosen so the lex-leading coefficient is positive.
QuotPoly vdm_det(int m, int i);

// Result of an identity check up to a global sign.
struct SignedCheck {
  bool ok = false;
  int sign = 0;  // +1 or -1 when ok
};

// t^(m-i) G_{i+1} = sign * sigma^y_m G_i
SignedCheck check_chain(int m, int i);
// family 2: sigma^y_{m-j} G_i = t^(m-j-i) sigma^x_j G_{i+1}, i = 1..m-1
// family 3: sigma^x_{m-j} G_i = t^(i-1-j) sigma^y_j G_{i-1}, i = 2..m
// Negative t exponents are moved to the other side.
SignedCheck check_syzygy(int family, int m, int i, int j);

class ArcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order of vanishing of G_j along Theta_I, via a generic arc through the component.
int arc_valuation(int m, int j, const std::set<int>& I, std::uint64_t seed);

struct OrdTable {
  int m = 0;
  // value[j-1][k] = order of G_j along components with |I| = k.
  std::vector<std::vector<int>> value;
  bool well_defined = true;
  bool nonnegative = true;
  bool adjacent_zero_pairs = true;
  static long long printed(int k, int j) { return static_cast<long long>(k - j) * (k - j) + (k - j); }
};
OrdTable ord_table(int m, std::uint64_t seed = 1);

// Largest E with t^E | (sigma^y_m)^(i+j-2) G_1^2.
int eta_valuation(int m, int i, int j);
// E with (sigma^y_m)^(i+j-2) G_1^2 = +-t^E G_i G_j, verified as an identity; -1 if none exists.
// Exceeds eta_valuation's cofactor reading exactly when t divides G_i G_j.
int eta_identity_exponent(int m, int i, int j);
// (i-1)(m-i/2) + (j-1)(m-j/2), from iterating the chain identity.
Rational eta_expected(int m, int i, int j);
long long eta_printed(int m, int i, int j);

// G_i vanishes after x_2 := x_1, y_2 := y_1.
bool diagonal_vanish(int m, int i);

}  // namespace taut
