#include "taut/cli.hpp"

#include <cctype>

namespace taut {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool ExprNode::operator==(const ExprNode& o) const {
  if (kind != o.kind || exponent != o.exponent || value != o.value || index != o.index || name != o.name ||
      diagonal != o.diagonal || node != o.node || split_given != o.split_given ||
      children.size() != o.children.size())
    return false;
  for (size_t i = 0; i < children.size(); ++i)
    if (!(*children[i] == *o.children[i])) return false;
  return true;
}

namespace {

ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
 public:
  Parser(const std::string& text, int m) : s_(text), m_(m) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  const std::string& s_;
  int m_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(size_t at, const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long number_token() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail_at(start, "number too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  int index_token() {
    skip();
    size_t at = pos_;
    long v = number_token();
    if (v < 1 || v > m_) fail_at(at, "index " + std::to_string(v) + " out of range [1, " + std::to_string(m_) + "]");
    return static_cast<int>(v);
  }

  // One digit per index inside profiles.
  int digit_index() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an index digit");
    int v = s_[pos_] - '0';
    if (v < 1 || v > m_) fail("index " + std::to_string(v) + " out of range [1, " + std::to_string(m_) + "]");
    ++pos_;
    return v;
  }

  std::string identifier() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        ExprNode n;
        n.kind = ExprNode::Kind::negate;
        n.children = {term()};
        terms.push_back(make(std::move(n)));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms[0];
    ExprNode n;
    n.kind = ExprNode::Kind::sum;
    n.children = std::move(terms);
    return make(std::move(n));
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return factors[0];
    ExprNode n;
    n.kind = ExprNode::Kind::product;
    n.children = std::move(factors);
    return make(std::move(n));
  }

  ExprPtr factor() {
    if (accept('-')) {
      ExprNode n;
      n.kind = ExprNode::Kind::negate;
      n.children = {factor()};
      return make(std::move(n));
    }
    ExprPtr base = atom();
    if (accept('^')) {
      skip();
      size_t at = pos_;
      long e = number_token();
      if (e < 1) fail_at(at, "exponent must be a positive integer");
      ExprNode n;
      n.kind = ExprNode::Kind::power;
      n.exponent = static_cast<int>(e);
      n.children = {base};
      return make(std::move(n));
    }
    return base;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprNode n;
      n.kind = ExprNode::Kind::number;
      long num = number_token();
      long den = 1;
      if (peek('/')) {
        ++pos_;
        size_t at = pos_;
        den = number_token();
        if (den == 0) fail_at(at, "zero denominator");
      }
      n.value = Rational(num) / Rational(den);
      return make(std::move(n));
    }
    size_t at = pos_;
    std::string id = identifier();
    if (id == "Gamma" || id == "Delta") {
      expect('<');
      ExprNode n;
      n.kind = id == "Gamma" ? ExprNode::Kind::gamma : ExprNode::Kind::delta;
      n.index = index_token();
      expect('>');
      return make(std::move(n));
    }
    if (id == "q" && peek('[')) return diagonal();
    if ((id == "F" || id == "Fsec") && peek('(')) return node(id == "Fsec");
    if (!peek('(')) fail_at(at, "unknown atom '" + id + "'");
    expect('(');
    ExprNode n;
    n.kind = ExprNode::Kind::slot_class;
    n.name = id;
    n.index = index_token();
    expect(')');
    return make(std::move(n));
  }

  BasisClass class_name() {
    skip();
    if (peek('1')) {
      ++pos_;
      return BasisClass::one();
    }
    std::string name = identifier();
    if (name == "pt") return BasisClass::pt();
    return BasisClass::divisor(name);
  }

  ExprPtr diagonal() {
    expect('[');
    std::vector<Block> blocks;
    do {
      expect('{');
      Block b;
      do b.elems.push_back(index_token());
      while (accept(','));
      expect('}');
      blocks.push_back(b);
    } while (accept(','));
    expect(']');
    expect('(');
    size_t at = pos_;
    std::vector<BasisClass> classes;
    do classes.push_back(class_name());
    while (accept(','));
    expect(')');
    if (classes.size() != blocks.size()) fail_at(at, "one class per block required");
    for (size_t k = 0; k < blocks.size(); ++k) blocks[k].cls = classes[k];
    ExprNode n;
    n.kind = ExprNode::Kind::diagonal;
    n.diagonal.blocks = blocks;
    try {
      n.diagonal.canonicalize();
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    }
    return make(std::move(n));
  }

  std::vector<Block> node_blocks() {
    std::vector<Block> out;
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '|' || s_[pos_] == ')')) return out;
    do {
      skip();
      Block b;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) b.elems.push_back(digit_index());
      if (b.elems.empty()) fail("expected a block of index digits");
      if (accept('(')) {
        b.cls = class_name();
        expect(')');
      }
      out.push_back(b);
    } while (accept(','));
    return out;
  }

  ExprPtr node(bool section) {
    size_t at = pos_;
    expect('(');
    skip();
    ExprNode n;
    n.kind = ExprNode::Kind::node;
    std::vector<int> first, second;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) first.push_back(digit_index());
    bool has_split = false;
    if (accept('|')) {
      has_split = true;
      skip();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) second.push_back(digit_index());
    }
    expect(':');
    n.node.J = node_blocks();
    if (accept('|')) n.node.K = node_blocks();
    expect(')');
    n.node.I = first;
    n.node.I.insert(n.node.I.end(), second.begin(), second.end());
    n.node.gamma_power = section ? 1 : 0;
    if (has_split) {
      if (first.empty() || second.empty()) fail_at(at, "both node parts must be nonempty");
      for (size_t k = 1; k < n.node.I.size(); ++k)
        if (n.node.I[k] <= n.node.I[k - 1]) fail_at(at, "node indices must increase across I1|I2");
      n.node.split = static_cast<int>(first.size());
    } else {
      n.node.split = 1;
      n.split_given = n.node.I.size() == 2;
    }
    try {
      n.node.canonicalize();
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    }
    if (!has_split && n.node.I.size() == 2) n.split_given = true;
    return make(std::move(n));
  }
};

std::string digits(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += std::to_string(i);
  return s;
}

bool is_atom(const ExprPtr& e) {
  return e->kind != ExprNode::Kind::sum && e->kind != ExprNode::Kind::product &&
         e->kind != ExprNode::Kind::negate && e->kind != ExprNode::Kind::power &&
         !(e->kind == ExprNode::Kind::number && e->value.get_den() != 1);
}

std::string render_node_atom(const ExprNode& n) {
  if (n.split_given) return render_generator(n.node);
  NodeClass copy = n.node;
  std::string g = render_generator(copy);
  // Drop the "|" split marker that render_generator prints for |I| > 2.
  std::string I1 = digits({copy.I.begin(), copy.I.begin() + copy.split});
  std::string I2 = digits({copy.I.begin() + copy.split, copy.I.end()});
  size_t p = g.find(I1 + "|" + I2);
  if (p != std::string::npos) g.replace(p, I1.size() + 1 + I2.size(), digits(copy.I));
  return g;
}

}  // namespace

ExprPtr parse_expression(const std::string& text, int m) {
  if (m < 1) throw std::invalid_argument("level must be >= 1");
  return Parser(text, m).run();
}

std::string render_expression(const ExprPtr& e) {
  switch (e->kind) {
    case ExprNode::Kind::sum: {
      std::string s;
      for (size_t k = 0; k < e->children.size(); ++k) {
        const auto& c = e->children[k];
        if (k > 0 && c->kind == ExprNode::Kind::negate) {
          const auto& inner = c->children[0];
          bool wrap = inner->kind == ExprNode::Kind::sum || inner->kind == ExprNode::Kind::negate;
          s += " - " + (wrap ? "(" + render_expression(inner) + ")" : render_expression(inner));
        } else {
          bool wrap = c->kind == ExprNode::Kind::sum;
          s += (k ? " + " : "") + (wrap ? "(" + render_expression(c) + ")" : render_expression(c));
        }
      }
      return s;
    }
    case ExprNode::Kind::product: {
      std::string s;
      for (size_t k = 0; k < e->children.size(); ++k) {
        const auto& c = e->children[k];
        bool wrap = c->kind == ExprNode::Kind::sum || c->kind == ExprNode::Kind::product ||
                    (k > 0 && c->kind == ExprNode::Kind::negate);
        s += (k ? "*" : "") + (wrap ? "(" + render_expression(c) + ")" : render_expression(c));
      }
      return s;
    }
    case ExprNode::Kind::power: {
      const auto& b = e->children[0];
      std::string base = is_atom(b) ? render_expression(b) : "(" + render_expression(b) + ")";
      return base + "^" + std::to_string(e->exponent);
    }
    case ExprNode::Kind::negate: {
      const auto& c = e->children[0];
      bool wrap = c->kind == ExprNode::Kind::sum || c->kind == ExprNode::Kind::negate;
      return "-" + (wrap ? "(" + render_expression(c) + ")" : render_expression(c));
    }
    case ExprNode::Kind::number:
      return e->value.get_str();
    case ExprNode::Kind::gamma:
      return "Gamma<" + std::to_string(e->index) + ">";
    case ExprNode::Kind::delta:
      return "Delta<" + std::to_string(e->index) + ">";
    case ExprNode::Kind::slot_class:
      return e->name + "(" + std::to_string(e->index) + ")";
    case ExprNode::Kind::diagonal: {
      if (e->diagonal.blocks.empty()) return "1";
      return render_generator(e->diagonal);
    }
    case ExprNode::Kind::node:
      return render_node_atom(*e);
  }
  return "";
}

namespace {

// Polynomial in words, each monomial optionally multiplying one explicit class.
struct Mono {
  Rational c;
  Word w;
  std::optional<TautExpr> start;
};
using Poly = std::vector<Mono>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.start && y.start) throw UnsupportedError("product of two explicit diagonal or node classes");
      Mono z{x.c * y.c, x.w, x.start ? x.start : y.start};
      z.w.insert(z.w.end(), y.w.begin(), y.w.end());
      out.push_back(std::move(z));
    }
  return out;
}

Poly scale(Poly p, const Rational& c) {
  for (auto& x : p) x.c *= c;
  return p;
}

Poly to_poly(const ExprPtr& e, const TautRing& ring, int m) {
  switch (e->kind) {
    case ExprNode::Kind::sum: {
      Poly out;
      for (const auto& c : e->children) {
        Poly p = to_poly(c, ring, m);
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }
    case ExprNode::Kind::product: {
      Poly out{{1, {}, std::nullopt}};
      for (const auto& c : e->children) out = multiply(out, to_poly(c, ring, m));
      return out;
    }
    case ExprNode::Kind::power: {
      Poly base = to_poly(e->children[0], ring, m);
      Poly out{{1, {}, std::nullopt}};
      for (int i = 0; i < e->exponent; ++i) out = multiply(out, base);
      return out;
    }
    case ExprNode::Kind::negate:
      return scale(to_poly(e->children[0], ring, m), -1);
    case ExprNode::Kind::number:
      return {{e->value, {}, std::nullopt}};
    case ExprNode::Kind::gamma:
      return {{1, {WordFactor::gamma(e->index)}, std::nullopt}};
    case ExprNode::Kind::delta: {
      Poly out{{1, {WordFactor::gamma(e->index)}, std::nullopt}};
      if (e->index > 2) out.push_back({-1, {WordFactor::gamma(e->index - 1)}, std::nullopt});
      if (e->index == 1) out.clear();
      return out;
    }
    case ExprNode::Kind::slot_class: {
      SurfaceClass c = e->name == "pt" ? SurfaceClass::point() : SurfaceClass::divisor(e->name);
      return {{1, {WordFactor::slot(e->index, c)}, std::nullopt}};
    }
    case ExprNode::Kind::diagonal:
      return {{1, {}, TautExpr::of(m, e->diagonal)}};
    case ExprNode::Kind::node: {
      TautExpr start = e->split_given ? ring.fillings(e->node, m) : ring.beta_weighted(e->node, m);
      return {{1, {}, start}};
    }
  }
  return {};
}

}  // namespace

TautExpr evaluate_expression(const ExprPtr& e, const TautRing& ring, int m) {
  TautExpr out(m);
  for (const auto& mono : to_poly(e, ring, m)) {
    if (mono.c == 0) continue;
    TautExpr piece = mono.start ? ring.apply_word(*mono.start, mono.w) : ring.expand_monomial(mono.w, m);
    out.add(piece, CharacterPolynomial(mono.c));
  }
  return out;
}

}  // namespace taut
