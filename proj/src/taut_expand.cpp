#include "taut/tautring.hpp"

#include <algorithm>

namespace taut {

TautExpr TautRing::expand_monomial(const Word& word, int m, ExpandOrder order) const {
  if (m < 1) throw std::invalid_argument("level must be >= 1");
  std::vector<int> gammas(m + 1, 0);
  for (const auto& f : word) {
    if (f.index < 1 || f.index > m) throw std::invalid_argument("index " + std::to_string(f.index) + " out of range");
    if (f.kind == WordFactor::Kind::gamma) ++gammas[f.index];
  }
  if (gammas[1] > 0) return TautExpr(m);
  TautExpr e = TautExpr::unit(1);
  auto apply_classes = [&](int slot_filter) {
    for (const auto& f : word)
      if (f.kind == WordFactor::Kind::slot_class && (slot_filter == 0 || f.index == slot_filter))
        e = mul_class(e, f.index, f.cls);
  };
  for (int k = 1; k <= m; ++k) {
    if (k > 1) e = pullback(e);
    for (int t = 0; t < gammas[k]; ++t) e = mul_gamma(e);
    if (order == ExpandOrder::levelwise) apply_classes(k);
  }
  if (order == ExpandOrder::classes_last) apply_classes(0);
  return e;
}

TautExpr TautRing::apply_word(const TautExpr& start, const Word& word) const {
  int m = start.level();
  TautExpr e = start;
  for (const auto& f : word)
    if (f.kind == WordFactor::Kind::slot_class) e = mul_class(e, f.index, f.cls);
  std::vector<int> order;
  for (const auto& f : word)
    if (f.kind == WordFactor::Kind::gamma) {
      if (f.index < 1 || f.index > m) throw std::invalid_argument("Gamma index out of range");
      order.push_back(f.index);
    }
  std::sort(order.begin(), order.end());
  for (int k : order) e = k == m ? mul_gamma(e) : mul_pulled_gamma(e, k);
  return e;
}

CharacterPolynomial TautRing::integrate(const TautExpr& e) const {
  if (e.is_zero()) return {};
  if (e.dimension() != 0)
    throw GradingError("integrand has dimension " + std::to_string(e.dimension()) + ", expected 0");
  CharacterPolynomial total;
  TautExpr diagonal(e.level());
  for (const auto& [g, c] : e.terms()) {
    if (std::holds_alternative<DiagMonomial>(g)) {
      diagonal.add(g, c);
      continue;
    }
    const auto& n = std::get<NodeClass>(g);
    CharacterPolynomial v = geo_.node_count;
    for (const auto* side : {&n.J, &n.K})
      for (const auto& b : *side) v *= geo_.fibre_degree(b.cls.name);
    total += c * v;
  }
  while (diagonal.level() > 1) diagonal = pushforward(diagonal);
  for (const auto& [g, c] : diagonal.terms()) {
    const auto& q = std::get<DiagMonomial>(g);
    if (q.blocks.size() == 1 && q.blocks[0].cls == BasisClass::pt()) total += c;
  }
  return total;
}

ChernResult TautRing::chern_taut(const std::string& line_bundle, int m) const {
  if (m < 1) throw std::invalid_argument("level must be >= 1");
  ChernResult res;
  SurfaceClass L = SurfaceClass::divisor(line_bundle);
  // Each factor 1 + L^(i) - Delta^(i) with Delta^(i) = Gamma^[i] - Gamma^[i-1].
  std::vector<std::vector<std::pair<Rational, Word>>> by_degree(m + 1);
  by_degree[0].push_back({1, {}});
  for (int i = 1; i <= m; ++i) {
    std::string root = "1 + " + line_bundle + "(" + std::to_string(i) + ")";
    if (i > 1) root += " - Delta<" + std::to_string(i) + ">";
    res.roots.push_back(root);
    std::vector<std::pair<Rational, Word>> linear{{1, {WordFactor::slot(i, L)}}};
    if (i >= 2) linear.push_back({-1, {WordFactor::gamma(i)}});
    if (i >= 3) linear.push_back({1, {WordFactor::gamma(i - 1)}});
    for (int d = i; d >= 1; --d)
      for (const auto& [c, w] : by_degree[d - 1])
        for (const auto& [lc, lw] : linear) {
          Word nw = w;
          nw.insert(nw.end(), lw.begin(), lw.end());
          by_degree[d].push_back({c * lc, nw});
        }
  }
  for (int d = 0; d <= m; ++d) {
    TautExpr piece(m);
    for (const auto& [c, w] : by_degree[d]) piece.add(expand_monomial(w, m), CharacterPolynomial(c));
    res.classes.push_back(piece);
  }
  return res;
}

}  // namespace taut
