#pragma once

#include "taut/charpoly.hpp"
#include "taut/tautring.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace taut {

// Partition inside an a x b box: at most a rows, each at most b, padded with
// zeros to exactly a entries.
struct BoxPartition {
  std::vector<int> rows;
  int a = 0, b = 0;

  static BoxPartition empty(int a, int b);
  bool valid() const;
  int size() const;
  bool is_full() const;
  BoxPartition transposed() const;
  std::string render() const;  // "(4,2)", "()" for the empty partition
  auto operator<=>(const BoxPartition&) const = default;
};

// Linear combination of Schur classes on the Grassmannian with box (a, b).
class SchurExpr {
 public:
  SchurExpr(int a, int b) : a_(a), b_(b) {}
  static SchurExpr unit(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  const std::map<BoxPartition, Rational>& terms() const { return terms_; }
  void add(const BoxPartition& p, const Rational& c);
  Rational coefficient(const BoxPartition& p) const;
  bool operator==(const SchurExpr& o) const = default;
  std::string render() const;

 private:
  int a_, b_;
  std::map<BoxPartition, Rational> terms_;
};

// Special Schur class: one row (horizontal strips) or one column (vertical strips).
enum class StripKind { row, column };
struct SpecialFactor {
  StripKind kind = StripKind::row;
  int size = 0;
};

// Pieri rule: adds every horizontal (row) or vertical (column) strip of the
// given size that stays inside the box. Throws std::invalid_argument when the
// size is negative or exceeds max(a, b).
SchurExpr pieri_mul(const SchurExpr& e, SpecialFactor f);

// Coefficient of the full box after folding the factors over the unit; zero
// when the sizes do not add up to a*b.
Rational grassmann_integral(int a, int b, const std::vector<SpecialFactor>& factors);

// One (j1, j2, j3) branch of the multisecant count for m = 3.
struct Nsec3Term {
  std::array<int, 3> j{};
  Rational grassmann;      // integral over G of the special factors 4 - j_i
  CharacterPolynomial w;   // integral over W^3 of the tautological monomial
  CharacterPolynomial product() const { return CharacterPolynomial(grassmann) * w; }
};

struct Nsec3Result {
  std::vector<Nsec3Term> terms;
  CharacterPolynomial total;  // 3! N_3
  CharacterPolynomial n3() const { return total * CharacterPolynomial(Rational(1, 6)); }
};

// Tuples with j1 + j2 + j3 = 4 and j3 > 0, dropping those that vanish for
// dimension reasons ((L^(1))^j1 = 0 for j1 > 2).
std::vector<std::array<int, 3>> nsec3_tuples();

// Assembles 3! N_3 = sum over tuples of the Grassmannian factor (box (2,4),
// special classes of sizes 4 - j_i) times the W^3 integral of
// (L^(1))^j1 (L^(2) - Delta<2>)^j2 (L^(3) - Delta<3>)^j3.
Nsec3Result nsec3(const TautRing& ring, StripKind kind = StripKind::row, const std::string& line_bundle = "L");

}  // namespace taut
