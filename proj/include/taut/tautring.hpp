#pragma once

#include "taut/charpoly.hpp"
#include "taut/surface.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taut {

// A rule the engine does not cover for the given input (e.g. pushing a node
// class whose node points contain the last slot).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorted index set with a basis class attached.
struct Block {
  std::vector<int> elems;
  BasisClass cls = BasisClass::one();

  int min() const { return elems.front(); }
  bool contains(int i) const;
  auto operator<=>(const Block&) const = default;
};

// q_{(I.)}[(c.)]: blocks sorted by least element; singleton blocks carrying
// the unit class are implicit.
struct DiagMonomial {
  std::vector<Block> blocks;

  static DiagMonomial unit() { return {}; }
  // Sorts blocks, drops trivial singletons; throws on overlapping blocks.
  void canonicalize();
  int codim() const;
  const Block* block_of(int i) const;
  auto operator<=>(const DiagMonomial&) const = default;
};

// Generalized node scroll (gamma_power 0) or node section (gamma_power 1)
// over the decorated base X^Phi[(c.)], Phi = (I_1|I_2 : J|K) with I_1 the
// initial segment of I of size `split`.
struct NodeClass {
  std::vector<int> I;
  int split = 1;
  std::vector<Block> J, K;
  int gamma_power = 0;

  void canonicalize();
  // Dimension of the decorated base X^Phi[(c.)].
  int base_dimension() const;
  int dimension() const { return base_dimension() + 1 - gamma_power; }
  int r() const { return static_cast<int>(I.size()); }
  auto operator<=>(const NodeClass&) const = default;
};

using Generator = std::variant<DiagMonomial, NodeClass>;

int dimension(const Generator& g, int m);
std::string render_generator(const Generator& g);

// Linear combination of generators at level m with character coefficients.
// All generators share one dimension.
class TautExpr {
 public:
  explicit TautExpr(int m = 1) : m_(m) {}
  static TautExpr unit(int m);
  static TautExpr of(int m, const Generator& g, const CharacterPolynomial& c = 1);

  int level() const { return m_; }
  const std::map<Generator, CharacterPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Common dimension; -1 for zero.
  int dimension() const;

  // Adds c*g; throws GradingError on a dimension mismatch. Negative-dimension
  // generators are zero classes and are dropped.
  void add(const Generator& g, const CharacterPolynomial& c);
  void add(const TautExpr& e, const CharacterPolynomial& c = 1);
  TautExpr scaled(const CharacterPolynomial& c) const;
  TautExpr evaluated(const std::map<std::string, Rational>& assignment) const;
  bool operator==(const TautExpr& o) const { return m_ == o.m_ && terms_ == o.terms_; }

  // Canonical rendering, e.g. "2*q[{1,2,3}](1) - q[{1,3}](omega) + F(13:)".
  // Node terms forming all fillings of a non-full profile are shown collapsed.
  std::string render(NodeFlavor flavor = NodeFlavor::reducible) const;

 private:
  int m_;
  std::map<Generator, CharacterPolynomial> terms_;
};

// {i,j} |x (I.): connect, absorb, insert, or no-op.
std::vector<std::vector<int>> ltimes(std::pair<int, int> pair, const std::vector<std::vector<int>>& partition);

// One factor of a monomial word: Gamma^[k] or the slot class c^(i).
struct WordFactor {
  enum class Kind { gamma, slot_class } kind = Kind::gamma;
  int index = 0;  // k for gamma, i for slot_class
  SurfaceClass cls;

  static WordFactor gamma(int k) { return {Kind::gamma, k, {}}; }
  static WordFactor slot(int i, SurfaceClass c) { return {Kind::slot_class, i, std::move(c)}; }
};
using Word = std::vector<WordFactor>;

enum class ExpandOrder {
  levelwise,    // slot classes applied at their own level, then pulled back
  classes_last  // all slot classes applied at the top level after the Gamma factors
};

struct ChernResult {
  std::vector<std::string> roots;  // "1 + L(i) - Delta<i>"
  std::vector<TautExpr> classes;   // c_0 .. c_m
};

class TautRing {
 public:
  explicit TautRing(SurfaceGeometry geometry = SurfaceGeometry()) : geo_(std::move(geometry)) {}
  const SurfaceGeometry& geometry() const { return geo_; }

  // Gamma^[m] times a generator at level m.
  TautExpr mul_gamma_diag(const DiagMonomial& q, int m) const;
  TautExpr mul_gamma_node(const NodeClass& g, int m) const;
  TautExpr mul_gamma(const TautExpr& e) const;
  // Gamma^[k] pulled back to level m > k, as the sum of Delta_ab over a < b <= k.
  TautExpr mul_pulled_gamma(const TautExpr& e, int k) const;

  TautExpr mul_class(const Generator& g, int m, int slot, const SurfaceClass& c) const;
  TautExpr mul_class(const TautExpr& e, int slot, const SurfaceClass& c) const;

  TautExpr pullback(const TautExpr& e) const;
  TautExpr pushforward(const TautExpr& e) const;
  CharacterPolynomial integrate(const TautExpr& e) const;

  TautExpr expand_monomial(const Word& word, int m, ExpandOrder order = ExpandOrder::levelwise) const;
  // Multiplies an explicit element by a word: slot classes, then pulled-back
  // Gamma^[k] (k < m), then Gamma^[m].
  TautExpr apply_word(const TautExpr& e, const Word& word) const;

  ChernResult chern_taut(const std::string& line_bundle, int m) const;

  // Sum over the fillings of a possibly non-full profile; indices missing from
  // I, J and K become undecorated singleton blocks in J or K.
  TautExpr fillings(const NodeClass& partial, int m) const;
  // F^(I:J|K) with the beta-weighted split sum.
  TautExpr beta_weighted(const NodeClass& partial, int m) const;

 private:
  SurfaceGeometry geo_;
};

}  // namespace taut
