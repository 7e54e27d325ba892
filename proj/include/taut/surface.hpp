#pragma once

#include "taut/charpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace taut {

class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Basis element of the truncated cohomology of X: 1, a divisor symbol, or pt.
struct BasisClass {
  int degree = 0;          // 0, 1 or 2
  std::string name = "1";  // "1", divisor name, or "pt"

  static BasisClass one() { return {0, "1"}; }
  static BasisClass pt() { return {2, "pt"}; }
  static BasisClass divisor(const std::string& n) { return {1, n}; }

  std::strong_ordering operator<=>(const BasisClass& o) const;
  bool operator==(const BasisClass& o) const { return degree == o.degree && name == o.name; }
};

// c = deg0 * 1 + sum div[D] * D + deg2 * pt
struct SurfaceClass {
  Rational deg0 = 0;
  std::map<std::string, Rational> div;
  CharacterPolynomial deg2;

  static SurfaceClass one() { return scalar(1); }
  static SurfaceClass scalar(const Rational& r);
  static SurfaceClass divisor(const std::string& name, const Rational& coef = 1);
  static SurfaceClass point(const CharacterPolynomial& coef = 1);

  bool is_zero() const;
  // Lowest degree carrying a nonzero component; -1 for the zero class.
  int min_degree() const;
  int max_degree() const;
  std::vector<std::pair<CharacterPolynomial, BasisClass>> basis_terms() const;
  SurfaceClass& operator+=(const SurfaceClass& o);
  bool operator==(const SurfaceClass& o) const;
  std::string render() const;
};

enum class NodeFlavor { reducible, irreducible };

class SurfaceGeometry {
 public:
  SurfaceGeometry();

  // Intersection number of two divisor symbols.
  CharacterPolynomial pairing(const std::string& a, const std::string& b) const;
  CharacterPolynomial fibre_degree(const std::string& divisor) const;
  void set_pairing(const std::string& a, const std::string& b, const CharacterPolynomial& value);
  void set_fibre_degree(const std::string& divisor, const CharacterPolynomial& value);

  NodeFlavor flavor = NodeFlavor::reducible;
  CharacterPolynomial node_count = CharacterPolynomial::symbol("sigma");
  // Fibre degrees of the relative canonical class on the two node branches
  // (J-side and K-side components). Uniform mode: both equal g2.
  CharacterPolynomial branch_omega_degree_j = CharacterPolynomial::symbol("g2");
  CharacterPolynomial branch_omega_degree_k = CharacterPolynomial::symbol("g2");

  // Product of basis classes: coefficient and class, or nullopt if it vanishes.
  std::optional<std::pair<CharacterPolynomial, BasisClass>> mul(const BasisClass& a, const BasisClass& b) const;

 private:
  std::map<std::pair<std::string, std::string>, CharacterPolynomial> pairing_;
  std::map<std::string, CharacterPolynomial> fibre_degree_;
};

// Divisor symbols for the canonical class restricted to a node branch.
inline const std::string kOmegaJ = "omegaJ";
inline const std::string kOmegaK = "omegaK";

SurfaceClass class_mul(const SurfaceClass& a, const SurfaceClass& b, const SurfaceGeometry& geo);
// Throws GradingError unless c has pure degree 1.
CharacterPolynomial fibre_degree(const SurfaceClass& c, const SurfaceGeometry& geo);
CharacterPolynomial integrate_on_X(const SurfaceClass& c);

// Character file: "key = value" lines, keys from builtin_symbols(), value a
// rational or "sym". Blank lines and '#' comments are skipped.
std::map<std::string, Rational> parse_character_config(const std::string& text);
std::map<std::string, Rational> load_character_config(const std::string& path);

}  // namespace taut
