#include "taut/tautring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace taut {

bool Block::contains(int i) const { return std::binary_search(elems.begin(), elems.end(), i); }

void DiagMonomial::canonicalize() {
  std::set<int> seen;
  std::vector<Block> kept;
  for (auto& b : blocks) {
    std::sort(b.elems.begin(), b.elems.end());
    for (int i : b.elems)
      if (!seen.insert(i).second) throw std::invalid_argument("diagonal blocks overlap at index " + std::to_string(i));
    if (b.elems.empty()) throw std::invalid_argument("empty diagonal block");
    if (b.elems.size() == 1 && b.cls == BasisClass::one()) continue;
    kept.push_back(std::move(b));
  }
  std::sort(kept.begin(), kept.end());
  blocks = std::move(kept);
}

int DiagMonomial::codim() const {
  int c = 0;
  for (const auto& b : blocks) c += static_cast<int>(b.elems.size()) - 1 + b.cls.degree;
  return c;
}

const Block* DiagMonomial::block_of(int i) const {
  for (const auto& b : blocks)
    if (b.contains(i)) return &b;
  return nullptr;
}

void NodeClass::canonicalize() {
  std::sort(I.begin(), I.end());
  std::set<int> seen(I.begin(), I.end());
  if (seen.size() != I.size()) throw std::invalid_argument("repeated node index");
  if (r() < 2) throw std::invalid_argument("node profile needs |I| >= 2");
  if (split < 1 || split > r() - 1) throw std::invalid_argument("node split must lie in [1, |I|-1]");
  for (auto* side : {&J, &K}) {
    for (auto& b : *side) {
      std::sort(b.elems.begin(), b.elems.end());
      if (b.elems.empty()) throw std::invalid_argument("empty node block");
      for (int i : b.elems)
        if (!seen.insert(i).second) throw std::invalid_argument("node blocks overlap at index " + std::to_string(i));
    }
    std::sort(side->begin(), side->end());
  }
}

int NodeClass::base_dimension() const {
  int d = static_cast<int>(J.size() + K.size());
  for (const auto* side : {&J, &K})
    for (const auto& b : *side) d -= b.cls.degree;
  return d;
}

int dimension(const Generator& g, int m) {
  if (const auto* q = std::get_if<DiagMonomial>(&g)) return m + 1 - q->codim();
  return std::get<NodeClass>(g).dimension();
}

namespace {

std::string digits(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += std::to_string(i);
  return s;
}

std::string render_blocks(const std::vector<Block>& side) {
  std::string s;
  for (size_t k = 0; k < side.size(); ++k) {
    if (k) s += ",";
    s += digits(side[k].elems);
    if (side[k].cls.degree > 0) s += "(" + side[k].cls.name + ")";
  }
  return s;
}

std::string render_node(const NodeClass& g) {
  std::string s = g.gamma_power ? "Fsec(" : "F(";
  if (g.r() == 2) {
    s += digits(g.I);
  } else {
    s += digits({g.I.begin(), g.I.begin() + g.split}) + "|" + digits({g.I.begin() + g.split, g.I.end()});
  }
  s += ":";
  if (!g.J.empty() || !g.K.empty()) s += render_blocks(g.J) + "|" + render_blocks(g.K);
  return s + ")";
}

}  // namespace

std::string render_generator(const Generator& g) {
  if (const auto* q = std::get_if<DiagMonomial>(&g)) {
    if (q->blocks.empty()) return "1";
    std::string s = "q[";
    std::string cls = "(";
    for (size_t k = 0; k < q->blocks.size(); ++k) {
      const auto& b = q->blocks[k];
      s += (k ? ",{" : "{");
      for (size_t t = 0; t < b.elems.size(); ++t) s += (t ? "," : "") + std::to_string(b.elems[t]);
      s += "}";
      cls += (k ? "," : "") + b.cls.name;
    }
    return s + "]" + cls + ")";
  }
  return render_node(std::get<NodeClass>(g));
}

TautExpr TautExpr::unit(int m) { return of(m, DiagMonomial::unit()); }

TautExpr TautExpr::of(int m, const Generator& g, const CharacterPolynomial& c) {
  TautExpr e(m);
  e.add(g, c);
  return e;
}

int TautExpr::dimension() const {
  if (terms_.empty()) return -1;
  return taut::dimension(terms_.begin()->first, m_);
}

void TautExpr::add(const Generator& g, const CharacterPolynomial& c) {
  if (c.is_zero()) return;
  int d = taut::dimension(g, m_);
  if (d < 0) return;
  if (!terms_.empty() && d != dimension())
    throw GradingError("mixed dimensions: " + render_generator(g) + " has dimension " + std::to_string(d) +
                       ", expected " + std::to_string(dimension()));
  auto [it, ins] = terms_.try_emplace(g, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TautExpr::add(const TautExpr& e, const CharacterPolynomial& c) {
  if (e.m_ != m_ && !e.is_zero()) throw std::invalid_argument("adding expressions at different levels");
  for (const auto& [g, v] : e.terms_) add(g, v * c);
}

TautExpr TautExpr::scaled(const CharacterPolynomial& c) const {
  TautExpr r(m_);
  r.add(*this, c);
  return r;
}

TautExpr TautExpr::evaluated(const std::map<std::string, Rational>& assignment) const {
  TautExpr r(m_);
  for (const auto& [g, v] : terms_) r.add(g, v.evaluate(assignment));
  return r;
}

namespace {

struct RenderedTerm {
  CharacterPolynomial coef;
  std::string gen;
};

std::string join_terms(const std::vector<RenderedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    const auto& [c, g] = terms[k];
    std::string body;
    bool negative = false;
    if (g == "1") {
      body = c.needs_parens() ? "(" + c.render() + ")" : c.render();
    } else if (c.needs_parens()) {
      body = "(" + c.render() + ")*" + g;
    } else {
      std::string cr = c.render();
      if (cr == "1")
        body = g;
      else if (cr == "-1")
        body = "-" + g;
      else
        body = cr + "*" + g;
    }
    if (!body.empty() && body[0] == '-' && !c.needs_parens()) {
      negative = true;
      body.erase(0, 1);
    }
    if (k == 0)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace

std::string TautExpr::render(NodeFlavor flavor) const {
  // Group node terms by the profile left after removing undecorated singleton
  // blocks; a group holding every filling with one coefficient prints once.
  using Key = std::pair<NodeClass, std::vector<int>>;
  std::map<Key, std::vector<std::pair<const NodeClass*, CharacterPolynomial>>> groups;
  auto key_of = [](const NodeClass& g) {
    NodeClass core = g;
    std::vector<int> free;
    for (auto* side : {&core.J, &core.K}) {
      std::vector<Block> kept;
      for (auto& b : *side) {
        if (b.elems.size() == 1 && b.cls.degree == 0)
          free.push_back(b.elems[0]);
        else
          kept.push_back(b);
      }
      *side = kept;
    }
    std::sort(free.begin(), free.end());
    return Key{core, free};
  };
  for (const auto& [g, c] : terms_)
    if (const auto* n = std::get_if<NodeClass>(&g)) groups[key_of(*n)].push_back({n, c});

  std::vector<RenderedTerm> out;
  std::set<Key> emitted;
  for (const auto& [g, c] : terms_) {
    const auto* n = std::get_if<NodeClass>(&g);
    if (!n) {
      out.push_back({c, render_generator(g)});
      continue;
    }
    Key key = key_of(*n);
    const auto& members = groups[key];
    size_t fillings = flavor == NodeFlavor::reducible ? (size_t{1} << key.second.size()) : 1;
    bool collapse = !key.second.empty() && members.size() == fillings &&
                    std::all_of(members.begin(), members.end(), [&](auto& p) { return p.second == members[0].second; });
    if (!collapse) {
      out.push_back({c, render_generator(g)});
      continue;
    }
    if (emitted.insert(key).second) out.push_back({c, render_generator(key.first)});
  }
  return join_terms(out);
}

std::vector<std::vector<int>> ltimes(std::pair<int, int> pair, const std::vector<std::vector<int>>& partition) {
  auto [i, j] = pair;
  if (i == j) throw std::invalid_argument("ltimes requires a pair of distinct indices");
  auto find = [&](int x) -> int {
    for (size_t k = 0; k < partition.size(); ++k)
      if (std::find(partition[k].begin(), partition[k].end(), x) != partition[k].end()) return static_cast<int>(k);
    return -1;
  };
  int a = find(i), b = find(j);
  std::vector<std::vector<int>> out;
  if (a >= 0 && a == b) {
    out = partition;
  } else if (a >= 0 && b >= 0) {
    std::vector<int> merged = partition[a];
    merged.insert(merged.end(), partition[b].begin(), partition[b].end());
    for (size_t k = 0; k < partition.size(); ++k)
      if (static_cast<int>(k) != a && static_cast<int>(k) != b) out.push_back(partition[k]);
    out.push_back(merged);
  } else if (a >= 0 || b >= 0) {
    int k0 = a >= 0 ? a : b;
    int extra = a >= 0 ? j : i;
    out = partition;
    out[k0].push_back(extra);
  } else {
    out = partition;
    out.push_back({i, j});
  }
  for (auto& blk : out) std::sort(blk.begin(), blk.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace taut
