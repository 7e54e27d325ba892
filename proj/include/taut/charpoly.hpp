#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace taut {

using Rational = mpq_class;

// Parses "3", "-3/2", "0"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Built-in characters come first in printing order; user symbols follow alphabetically.
// g2 stands for 2g-2.
const std::vector<std::string>& builtin_symbols();
bool is_identifier(const std::string& s);

// A monomial in character symbols: (symbol, exponent) pairs, exponents > 0,
// sorted by symbol rank.
class CharMonomial {
 public:
  CharMonomial() = default;
  explicit CharMonomial(const std::string& symbol, int exponent = 1);

  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
  int degree() const;
  bool is_one() const { return factors_.empty(); }
  CharMonomial operator*(const CharMonomial& o) const;
  std::string render() const;

  // Graded order: lower degree first, then lexicographic by symbol rank.
  std::strong_ordering operator<=>(const CharMonomial& o) const;
  bool operator==(const CharMonomial& o) const { return factors_ == o.factors_; }

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

class CharacterPolynomial {
 public:
  CharacterPolynomial() = default;
  CharacterPolynomial(const Rational& c);  // NOLINT: constants convert implicitly
  CharacterPolynomial(long c) : CharacterPolynomial(Rational(c)) {}  // NOLINT
  CharacterPolynomial(int c) : CharacterPolynomial(Rational(c)) {}  // NOLINT
  static CharacterPolynomial symbol(const std::string& name);

  const std::map<CharMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; only meaningful when is_constant().
  Rational constant() const;
  int max_degree() const;

  CharacterPolynomial& operator+=(const CharacterPolynomial& o);
  CharacterPolynomial& operator-=(const CharacterPolynomial& o);
  CharacterPolynomial& operator*=(const CharacterPolynomial& o);
  friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
  friend CharacterPolynomial operator*(CharacterPolynomial a, const CharacterPolynomial& b) { return a *= b; }
  CharacterPolynomial operator-() const;
  bool operator==(const CharacterPolynomial& o) const { return terms_ == o.terms_; }

  void add_term(const CharMonomial& m, const Rational& c);

  // Substitutes the assigned symbols; unassigned symbols stay symbolic.
  CharacterPolynomial evaluate(const std::map<std::string, Rational>& assignment) const;

  // Canonical rendering, e.g. "-2*sigma + 14*omega2"; zero renders as "0".
  std::string render() const;
  // True when render() needs parentheses as a factor of a product.
  bool needs_parens() const;

 private:
  std::map<CharMonomial, Rational> terms_;
};

// Parses the canonical rendering back (sums of rational * symbol^k products).
CharacterPolynomial parse_charpoly(const std::string& text);

}  // namespace taut
