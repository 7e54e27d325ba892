#include "taut/staircase.hpp"
#include "taut/tautring.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace taut {

namespace {

const std::vector<long long>& beta_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, beta(n)).first;
  return it->second;
}

// Product of decorations on a curve: degree >= 2 vanishes.
std::optional<std::pair<CharacterPolynomial, BasisClass>> curve_mul(const SurfaceGeometry& geo, const BasisClass& a,
                                                                     const BasisClass& b) {
  auto r = geo.mul(a, b);
  if (!r || r->second.degree >= 2) return std::nullopt;
  return r;
}

void require_dimension(const TautExpr& out, int expected, const char* rule) {
  if (!out.is_zero() && out.dimension() != expected)
    throw std::logic_error(std::string(rule) + ": produced dimension " + std::to_string(out.dimension()) +
                           ", expected " + std::to_string(expected));
}

// Decorated base cycle of a node class with explicit node points: indices in
// npp sit at n'' (the J-side branch point), indices in np at n'.
struct Base {
  std::vector<int> npp, np;
  std::vector<Block> J, K;
  auto operator<=>(const Base&) const = default;
};
using BaseSum = std::map<Base, CharacterPolynomial>;

void normalize(Base& b) {
  std::sort(b.npp.begin(), b.npp.end());
  std::sort(b.np.begin(), b.np.end());
  std::sort(b.J.begin(), b.J.end());
  std::sort(b.K.begin(), b.K.end());
}

void add_to(BaseSum& s, Base b, const CharacterPolynomial& c) {
  if (c.is_zero()) return;
  normalize(b);
  auto [it, ins] = s.try_emplace(b, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

void add_to(BaseSum& s, const BaseSum& t, const CharacterPolynomial& c) {
  for (const auto& [b, v] : t) add_to(s, b, v * c);
}

Base base_of(const NodeClass& g) {
  Base b;
  b.npp.assign(g.I.begin(), g.I.begin() + g.split);
  b.np.assign(g.I.begin() + g.split, g.I.end());
  b.J = g.J;
  b.K = g.K;
  return b;
}

NodeClass node_of(const Base& b, int gamma_power) {
  NodeClass g;
  g.I = b.npp;
  g.I.insert(g.I.end(), b.np.begin(), b.np.end());
  g.split = static_cast<int>(b.npp.size());
  g.J = b.J;
  g.K = b.K;
  g.gamma_power = gamma_power;
  g.canonicalize();
  return g;
}

enum class Where { none, npp, np, J, K };
struct Loc {
  Where where = Where::none;
  int block = -1;
};

Loc locate(const Base& b, int x) {
  if (std::find(b.npp.begin(), b.npp.end(), x) != b.npp.end()) return {Where::npp, -1};
  if (std::find(b.np.begin(), b.np.end(), x) != b.np.end()) return {Where::np, -1};
  for (size_t k = 0; k < b.J.size(); ++k)
    if (b.J[k].contains(x)) return {Where::J, static_cast<int>(k)};
  for (size_t k = 0; k < b.K.size(); ++k)
    if (b.K[k].contains(x)) return {Where::K, static_cast<int>(k)};
  return {};
}

std::vector<Block>& side_of(Base& b, Where w) { return w == Where::J ? b.J : b.K; }

// Sends a whole block to a node point; a decorated block gives zero.
std::optional<Base> move_block(const Base& b, Where side, int idx, Where target) {
  Base out = b;
  auto& blocks = side_of(out, side);
  if (blocks[idx].cls.degree > 0) return std::nullopt;
  auto& dest = target == Where::npp ? out.npp : out.np;
  dest.insert(dest.end(), blocks[idx].elems.begin(), blocks[idx].elems.end());
  blocks.erase(blocks.begin() + idx);
  return out;
}

// p_{a,b}^*(Delta) on the base for one pair of indices.
BaseSum pair_delta(const Base& b, int x, int y, const SurfaceGeometry& geo) {
  BaseSum out;
  Loc lx = locate(b, x), ly = locate(b, y);
  if (lx.where == Where::none || ly.where == Where::none) throw std::logic_error("index outside node profile");
  bool x_node = lx.where == Where::npp || lx.where == Where::np;
  bool y_node = ly.where == Where::npp || ly.where == Where::np;
  if (x_node && y_node) return out;
  if (x_node || y_node) {
    Loc node = x_node ? lx : ly, blk = x_node ? ly : lx;
    Where target;
    if (geo.flavor == NodeFlavor::reducible)
      target = blk.where == Where::J ? Where::npp : Where::np;
    else
      target = node.where;
    if (auto moved = move_block(b, blk.where, blk.block, target)) add_to(out, *moved, 1);
    return out;
  }
  if (lx.where != ly.where) return out;
  Base nb = b;
  auto& blocks = side_of(nb, lx.where);
  if (lx.block == ly.block) {
    // Diagonal restricted to itself: minus the canonical class of the branch.
    if (blocks[lx.block].cls.degree > 0) return out;
    blocks[lx.block].cls = BasisClass::divisor(lx.where == Where::J ? kOmegaJ : kOmegaK);
    add_to(out, nb, -1);
    return out;
  }
  auto prod = curve_mul(geo, blocks[lx.block].cls, blocks[ly.block].cls);
  if (!prod) return out;
  Block merged = blocks[lx.block];
  merged.elems.insert(merged.elems.end(), blocks[ly.block].elems.begin(), blocks[ly.block].elems.end());
  std::sort(merged.elems.begin(), merged.elems.end());
  merged.cls = prod->second;
  int hi = std::max(lx.block, ly.block), lo = std::min(lx.block, ly.block);
  blocks.erase(blocks.begin() + hi);
  blocks.erase(blocks.begin() + lo);
  blocks.push_back(merged);
  add_to(out, nb, prod->first);
  return out;
}

// Divisor classes on X^Phi pulled back from the profile the node class started with.
struct NodeDivisors {
  const SurfaceGeometry& geo;
  int s, r, top;
  std::vector<int> uj, uk;

  NodeDivisors(const SurfaceGeometry& g, const NodeClass& phi)
      : geo(g), s(phi.split), r(phi.r()), top(phi.I.back()) {
    for (const auto& b : phi.J) uj.insert(uj.end(), b.elems.begin(), b.elems.end());
    for (const auto& b : phi.K) uk.insert(uk.end(), b.elems.begin(), b.elems.end());
  }

  // Weight of a block: base per element, plus `late` per element after the
  // last node slot (those slots entered by pullback).
  long weight(const Block& blk, int base, int late) const {
    long w = 0;
    for (int a : blk.elems) w += base + (a > top ? late : 0);
    return w;
  }

  // sum over a in J of coefficient * p_a^*(n'')
  BaseSum npp(const Base& b, int base = 1, int late = 0) const {
    BaseSum out;
    for (size_t k = 0; k < b.J.size(); ++k)
      if (auto moved = move_block(b, Where::J, static_cast<int>(k), Where::npp))
        add_to(out, *moved, weight(b.J[k], base, late));
    return out;
  }

  // sum over a in K' of coefficient * p_a^*(n'); K' = J for an irreducible fibre
  BaseSum np(const Base& b, int base = 1, int late = 0) const {
    BaseSum out;
    Where side = geo.flavor == NodeFlavor::reducible ? Where::K : Where::J;
    const auto& blocks = side == Where::K ? b.K : b.J;
    for (size_t k = 0; k < blocks.size(); ++k)
      if (auto moved = move_block(b, side, static_cast<int>(k), Where::np))
        add_to(out, *moved, weight(blocks[k], base, late));
    return out;
  }

  BaseSum deltas(const Base& b, const std::vector<int>& u) const {
    BaseSum out;
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = i + 1; j < u.size(); ++j) add_to(out, pair_delta(b, u[i], u[j], geo), 1);
    return out;
  }

  // c_1 of 'E (first) or "E (second).
  BaseSum c1_part(const Base& b, bool second) const {
    BaseSum out;
    // A slot added after the node slots comes from an elementary modification
    // and weighs one more in each summand.
    add_to(out, second ? npp(b, s, 1) : npp(b, s - 1, 1), -1);
    add_to(out, second ? np(b, r - s - 1, 1) : np(b, r - s, 1), -1);
    add_to(out, deltas(b, uj), -1);
    if (geo.flavor == NodeFlavor::reducible) add_to(out, deltas(b, uk), -1);
    return out;
  }

  BaseSum apply(const BaseSum& in, bool second) const {
    BaseSum out;
    for (const auto& [b, c] : in) add_to(out, c1_part(b, second), c);
    return out;
  }
};

// Full partition of [1,m] with every free index as a unit singleton.
std::vector<Block> full_blocks(const DiagMonomial& q, int m) {
  std::vector<Block> out = q.blocks;
  for (int i = 1; i <= m; ++i)
    if (!q.block_of(i)) out.push_back({{i}, BasisClass::one()});
  std::sort(out.begin(), out.end());
  return out;
}

DiagMonomial from_blocks(std::vector<Block> blocks) {
  DiagMonomial q;
  q.blocks = std::move(blocks);
  q.canonicalize();
  return q;
}

// Connects the blocks holding i and j (distinct blocks) with the product class.
std::optional<std::pair<CharacterPolynomial, DiagMonomial>> connect(const std::vector<Block>& full, int i, int j,
                                                                    const SurfaceGeometry& geo) {
  int a = -1, b = -1;
  for (size_t k = 0; k < full.size(); ++k) {
    if (full[k].contains(i)) a = static_cast<int>(k);
    if (full[k].contains(j)) b = static_cast<int>(k);
  }
  auto prod = geo.mul(full[a].cls, full[b].cls);
  if (!prod) return std::nullopt;
  std::vector<Block> out;
  Block merged = full[a];
  merged.elems.insert(merged.elems.end(), full[b].elems.begin(), full[b].elems.end());
  std::sort(merged.elems.begin(), merged.elems.end());
  merged.cls = prod->second;
  for (size_t k = 0; k < full.size(); ++k)
    if (static_cast<int>(k) != a && static_cast<int>(k) != b) out.push_back(full[k]);
  out.push_back(merged);
  return std::make_pair(prod->first, from_blocks(out));
}

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

TautExpr TautRing::mul_gamma_diag(const DiagMonomial& q, int m) const {
  TautExpr out(m);
  auto full = full_blocks(q, m);
  // Pairs not inside a single block.
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const Block* bi = q.block_of(i);
      if (bi && bi->contains(j)) continue;
      if (auto r = connect(full, i, j, geo_)) out.add(r->second, r->first);
    }
  for (size_t k = 0; k < full.size(); ++k) {
    const Block& blk = full[k];
    long long n = static_cast<long long>(blk.elems.size());
    if (n < 2) continue;
    // Node scrolls: the other blocks are spread over the two branches.
    if (blk.cls.degree == 0) {
      std::vector<Block> others;
      bool vanishes = false;
      for (size_t t = 0; t < full.size(); ++t) {
        if (t == k) continue;
        if (full[t].cls.degree > 1) vanishes = true;
        others.push_back(full[t]);
      }
      if (!vanishes) {
        const auto& b = beta_cached(static_cast<int>(n));
        size_t choices = geo_.flavor == NodeFlavor::reducible ? (size_t{1} << others.size()) : 1;
        for (size_t mask = 0; mask < choices; ++mask) {
          NodeClass g;
          g.I = blk.elems;
          for (size_t t = 0; t < others.size(); ++t) ((mask >> t) & 1 ? g.K : g.J).push_back(others[t]);
          for (int j = 1; j < n; ++j) {
            g.split = j;
            NodeClass c = g;
            c.canonicalize();
            out.add(c, CharacterPolynomial(Rational(static_cast<long>(b[j - 1]))));
          }
        }
      }
    }
    // Omega correction on the block, with the sign fixed by the self-intersection of the diagonal.
    if (auto prod = geo_.mul(BasisClass::divisor("omega"), blk.cls)) {
      auto blocks = full;
      blocks[k].cls = prod->second;
      out.add(from_blocks(blocks), prod->first * CharacterPolynomial(Rational(static_cast<long>(-choose2(n)))));
    }
  }
  require_dimension(out, m - q.codim(), "mul_gamma_diag");
  return out;
}

TautExpr TautRing::mul_gamma_node(const NodeClass& g, int m) const {
  int covered = g.r();
  for (const auto* side : {&g.J, &g.K})
    for (const auto& b : *side) covered += static_cast<int>(b.elems.size());
  if (covered != m) throw std::invalid_argument("mul_gamma_node requires a full profile at the top level");
  TautExpr out(m);
  if (g.gamma_power == 0) {
    NodeClass n = g;
    n.gamma_power = 1;
    out.add(n, -1);
  } else {
    // Gamma . h.a = -h.c1(E).a + c2(E).a with h = -Gamma on P(E).
    NodeDivisors d(geo_, g);
    BaseSum alpha{{base_of(g), 1}};
    BaseSum c1;
    add_to(c1, d.apply(alpha, false), 1);
    add_to(c1, d.apply(alpha, true), 1);
    BaseSum c2 = d.apply(d.apply(alpha, true), false);
    for (const auto& [b, c] : c1) out.add(node_of(b, 1), -c);
    for (const auto& [b, c] : c2) out.add(node_of(b, 0), c);
  }
  require_dimension(out, g.dimension() - 1, "mul_gamma_node");
  return out;
}

TautExpr TautRing::mul_gamma(const TautExpr& e) const {
  TautExpr out(e.level());
  for (const auto& [g, c] : e.terms()) {
    if (const auto* q = std::get_if<DiagMonomial>(&g))
      out.add(mul_gamma_diag(*q, e.level()), c);
    else
      out.add(mul_gamma_node(std::get<NodeClass>(g), e.level()), c);
  }
  return out;
}

TautExpr TautRing::mul_pulled_gamma(const TautExpr& e, int k) const {
  int m = e.level();
  if (k >= m) throw std::invalid_argument("mul_pulled_gamma requires k < level");
  TautExpr out(m);
  if (k < 2) return out;
  for (const auto& [g, c] : e.terms()) {
    if (const auto* q = std::get_if<DiagMonomial>(&g)) {
      for (const auto& b : q->blocks)
        if (std::count_if(b.elems.begin(), b.elems.end(), [&](int x) { return x <= k; }) >= 2)
          throw UnsupportedError("pulled-back Gamma on a diagonal block with two slots below the cut");
      auto full = full_blocks(*q, m);
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          if (auto r = connect(full, i, j, geo_)) out.add(r->second, r->first * c);
      continue;
    }
    const auto& n = std::get<NodeClass>(g);
    Base b = base_of(n);
    if (n.I.back() <= k)
      // The scroll is pulled back from level k; there Gamma^[k] differs from
      // the polarization by a curve contracted in the P^1-bundle model.
      throw UnsupportedError("pulled-back Gamma on a node class pulled back from below the cut");
    // Otherwise pairs of node slots contribute nothing: truncating the flag to
    // level k maps the scroll fibre to a point.
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        for (const auto& [nb, v] : pair_delta(b, i, j, geo_)) out.add(node_of(nb, n.gamma_power), v * c);
  }
  require_dimension(out, e.dimension() - 1, "mul_pulled_gamma");
  return out;
}

TautExpr TautRing::mul_class(const Generator& g, int m, int slot, const SurfaceClass& cls) const {
  if (slot < 1 || slot > m) throw std::invalid_argument("slot index out of range");
  TautExpr out(m);
  for (const auto& [coef, bc] : cls.basis_terms()) {
    if (const auto* q = std::get_if<DiagMonomial>(&g)) {
      auto full = full_blocks(*q, m);
      for (auto& blk : full) {
        if (!blk.contains(slot)) continue;
        if (auto prod = geo_.mul(blk.cls, bc)) {
          blk.cls = prod->second;
          out.add(from_blocks(full), coef * prod->first);
        }
      }
      continue;
    }
    NodeClass n = std::get<NodeClass>(g);
    if (std::binary_search(n.I.begin(), n.I.end(), slot)) {
      if (bc.degree == 0) out.add(n, coef);
      continue;
    }
    for (auto* side : {&n.J, &n.K})
      for (auto& blk : *side) {
        if (!blk.contains(slot)) continue;
        NodeClass copy = n;
        auto prod = curve_mul(geo_, blk.cls, bc);
        if (!prod) continue;
        // blk belongs to n; mirror the change on the copy.
        auto& target = (side == &n.J ? copy.J : copy.K)[&blk - side->data()];
        target.cls = prod->second;
        copy.canonicalize();
        out.add(copy, coef * prod->first);
      }
  }
  return out;
}

TautExpr TautRing::mul_class(const TautExpr& e, int slot, const SurfaceClass& c) const {
  TautExpr out(e.level());
  for (const auto& [g, v] : e.terms()) out.add(mul_class(g, e.level(), slot, c), v);
  return out;
}

TautExpr TautRing::pullback(const TautExpr& e) const {
  int m = e.level() + 1;
  TautExpr out(m);
  for (const auto& [g, c] : e.terms()) {
    if (std::holds_alternative<DiagMonomial>(g)) {
      out.add(g, c);
      continue;
    }
    const auto& n = std::get<NodeClass>(g);
    NodeDivisors d(geo_, n);
    bool reducible = geo_.flavor == NodeFlavor::reducible;
    for (Where side : {Where::J, Where::K}) {
      if (side == Where::K && !reducible) continue;
      Base b = base_of(n);
      side_of(b, side).push_back({{m}, BasisClass::one()});
      normalize(b);
      out.add(node_of(b, n.gamma_power), c);
      if (n.gamma_power == 0) continue;
      // Elementary modification along p_m^{-1}(n): the new section differs by
      // the node point of m and the diagonals joining m to its branch.
      Loc lm = locate(b, m);
      Where to = side == Where::J ? Where::npp : Where::np;
      int weight = (side == Where::J ? d.s : d.r - d.s) + 1;
      if (auto moved = move_block(b, side, lm.block, to)) out.add(node_of(*moved, 0), c * CharacterPolynomial(weight));
      if (!reducible)
        if (auto moved = move_block(b, side, lm.block, Where::np))
          out.add(node_of(*moved, 0), c * CharacterPolynomial(d.r - d.s + 1));
      for (int a : side == Where::J ? d.uj : d.uk)
        for (const auto& [nb, v] : pair_delta(b, a, m, geo_)) out.add(node_of(nb, 0), c * v);
    }
  }
  require_dimension(out, e.dimension() + 1, "pullback");
  return out;
}

TautExpr TautRing::pushforward(const TautExpr& e) const {
  int m = e.level();
  if (m < 2) throw std::invalid_argument("pushforward requires level >= 2");
  TautExpr out(m - 1);
  for (const auto& [g, c] : e.terms()) {
    if (const auto* q = std::get_if<DiagMonomial>(&g)) {
      const Block* bm = q->block_of(m);
      if (!bm) continue;
      std::vector<Block> rest;
      for (const auto& b : q->blocks)
        if (&b != bm) rest.push_back(b);
      if (bm->elems.size() > 1) {
        Block cut = *bm;
        cut.elems.pop_back();
        rest.push_back(cut);
        out.add(from_blocks(rest), c);
      } else if (bm->cls.degree == 1) {
        out.add(from_blocks(rest), c * geo_.fibre_degree(bm->cls.name));
      } else {
        // pi^* of a point of B is the fibre class, put on slot 1.
        out.add(mul_class(Generator(from_blocks(rest)), m - 1, 1, SurfaceClass::divisor("f")), c);
      }
      continue;
    }
    const auto& n = std::get<NodeClass>(g);
    if (std::binary_search(n.I.begin(), n.I.end(), m))
      throw UnsupportedError("pushforward of a node class with the last slot at the node");
    Base b = base_of(n);
    Loc lm = locate(b, m);
    auto& blocks = side_of(b, lm.where);
    Block bm = blocks[lm.block];
    if (bm.elems.size() > 1) {
      if (n.gamma_power == 1) throw UnsupportedError("pushforward of a node section with the last slot in a block");
      blocks[lm.block].elems.pop_back();
      out.add(node_of(b, 0), c);
      continue;
    }
    blocks.erase(blocks.begin() + lm.block);
    NodeClass base_class = node_of(b, n.gamma_power);
    NodeDivisors d(geo_, base_class);
    if (n.gamma_power == 0) {
      if (bm.cls.degree == 1) out.add(base_class, c * geo_.fibre_degree(bm.cls.name));
      continue;
    }
    bool j_side = lm.where == Where::J;
    const auto& universe = j_side ? d.uj : d.uk;
    if (bm.cls.degree == 1) {
      out.add(base_class, c * geo_.fibre_degree(bm.cls.name));
      for (int a : universe) {
        Base t = b;
        Loc la = locate(t, a);
        auto& tb = side_of(t, la.where)[la.block];
        auto prod = curve_mul(geo_, tb.cls, bm.cls);
        if (!prod) continue;
        tb.cls = prod->second;
        out.add(node_of(t, 0), -c * prod->first);
      }
    } else {
      int weight;
      if (geo_.flavor == NodeFlavor::irreducible)
        weight = d.r;
      else
        weight = j_side ? d.s : d.r - d.s;
      out.add(node_of(b, 0), -c * CharacterPolynomial(weight + static_cast<int>(universe.size())));
    }
  }
  require_dimension(out, e.dimension(), "pushforward");
  return out;
}

TautExpr TautRing::fillings(const NodeClass& partial, int m) const {
  std::vector<bool> used(m + 1, false);
  auto mark = [&](int i) {
    if (i < 1 || i > m) throw std::invalid_argument("node index out of range");
    used[i] = true;
  };
  for (int i : partial.I) mark(i);
  for (const auto* side : {&partial.J, &partial.K})
    for (const auto& b : *side)
      for (int i : b.elems) mark(i);
  std::vector<int> free;
  for (int i = 1; i <= m; ++i)
    if (!used[i]) free.push_back(i);
  if (geo_.flavor == NodeFlavor::irreducible && !partial.K.empty())
    throw std::invalid_argument("irreducible fibres carry no K blocks");
  size_t choices = geo_.flavor == NodeFlavor::reducible ? (size_t{1} << free.size()) : 1;
  TautExpr out(m);
  for (size_t mask = 0; mask < choices; ++mask) {
    NodeClass g = partial;
    for (size_t t = 0; t < free.size(); ++t) ((mask >> t) & 1 ? g.K : g.J).push_back({{free[t]}, BasisClass::one()});
    g.canonicalize();
    out.add(g, 1);
  }
  return out;
}

TautExpr TautRing::beta_weighted(const NodeClass& partial, int m) const {
  const auto& b = beta_cached(partial.r());
  TautExpr out(m);
  for (int j = 1; j < partial.r(); ++j) {
    NodeClass g = partial;
    g.split = j;
    out.add(fillings(g, m), CharacterPolynomial(Rational(static_cast<long>(b[j - 1]))));
  }
  return out;
}

}  // namespace taut
