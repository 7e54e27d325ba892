#pragma once

#include "taut/charpoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace taut {

class InfiniteColengthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent2 = std::pair<int, int>;  // (power of x, power of y)

// Minimal generators of a monomial ideal in k[x,y], sorted by x-exponent descending.
struct Staircase {
  std::vector<Exponent2> generators;

  static Staircase minimalized(std::vector<Exponent2> gens);
  bool contains(const Exponent2& e) const;  // e lies in the ideal
};

// Degrevlex with x > y; the map iterates from the leading monomial down.
struct Degrevlex {
  bool operator()(const Exponent2& a, const Exponent2& b) const {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};
using Poly2 = std::map<Exponent2, Rational, Degrevlex>;

struct BivariateIdeal {
  int m = 2;
  Staircase monomial_part;
  // Adds y^j + eta * x^(m-j) when present.
  struct Binomial {
    int j;
    Rational eta;
  };
  std::optional<Binomial> binomial_part;

  std::vector<Poly2> generators() const;
};

Staircase j_m(int m);
long long binomial(long long n, long long k);

// Sum over i of i * C(m+1-i, 2).
long long alpha(int m);
// The closed form printed alongside the sum; differs from alpha for m >= 4.
long long alpha_printed_closed_form(int m);

// Reduced Groebner basis (degrevlex, x > y) of the ideal generated by gens.
std::vector<Poly2> groebner_basis(const std::vector<Poly2>& gens);
// Dimension of k[x,y]/(gens); throws InfiniteColengthError.
long long colength(const std::vector<Poly2>& gens);
long long colength(const BivariateIdeal& ideal);
// Standard monomials of the quotient, in increasing (x, y) order.
std::vector<Exponent2> standard_monomials(const std::vector<Poly2>& gens);

// Colength of J_m + (y^j + eta x^(m-j)).
long long beta_at(int m, int j, const Rational& eta);
// Evaluated at two distinct nonzero eta; throws GenericityError on disagreement.
std::vector<long long> beta(int m, const Rational& eta1 = 1, const Rational& eta2 = 2);
long long beta_total(int m);

struct PolygonDiagnostic {
  long long value;
  long long beta;
  bool agrees;
};
// Literal count of unit squares of Q outside R_m, R_m + (-j, m+1-j) and the strip y >= j.
PolygonDiagnostic printed_polygon_region(int m, int j);
// Count left by the monomial-elimination recipe for a cobasis of J_m + (binomial).
PolygonDiagnostic elimination_cobasis_count(int m, int j);

}  // namespace taut
