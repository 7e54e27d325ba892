#pragma once

#include "taut/tautring.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taut {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Expression tree over Gamma<k>, Delta<k>, slot classes name(i), explicit
// diagonal and node atoms, and rational literals.
struct ExprNode {
  enum class Kind { sum, product, power, negate, number, gamma, delta, slot_class, diagonal, node };
  Kind kind = Kind::number;
  std::vector<ExprPtr> children;
  int exponent = 0;    // power
  Rational value = 0;  // number
  int index = 0;       // gamma, delta: k; slot_class: i
  std::string name;    // slot_class: class symbol
  DiagMonomial diagonal;
  NodeClass node;          // possibly partial profile
  bool split_given = true;  // false: I without '|' and |I| > 2, beta-weighted

  bool operator==(const ExprNode& o) const;
};

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | atom ('^' posint)?. Indices are single digits and
// must lie in [1, m].
ExprPtr parse_expression(const std::string& text, int m);

// Canonical text; parse_expression(render_expression(e), m) equals e.
std::string render_expression(const ExprPtr& e);

// Delta<k> becomes Gamma<k> - Gamma<k-1> (Gamma<1> = 0), then each monomial is
// expanded in the ring at level m.
TautExpr evaluate_expression(const ExprPtr& e, const TautRing& ring, int m);

}  // namespace taut
