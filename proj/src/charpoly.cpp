#include "taut/charpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace taut {

namespace {

std::pair<int, std::string> symbol_rank(const std::string& name) {
  const auto& b = builtin_symbols();
  auto it = std::find(b.begin(), b.end(), name);
  if (it != b.end()) return {static_cast<int>(it - b.begin()), ""};
  return {static_cast<int>(b.size()), name};
}

bool rank_less(const std::string& a, const std::string& b) { return symbol_rank(a) < symbol_rank(b); }

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  size_t slash = s.find('/');
  auto digits = [&](size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  size_t end_num = slash == std::string::npos ? s.size() : slash;
  if (!digits(i, end_num) || (slash != std::string::npos && !digits(slash + 1, s.size())))
    throw std::invalid_argument("malformed rational '" + text + "'");
  Rational r;
  std::string body = s[0] == '+' ? s.substr(1) : s;
  if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

const std::vector<std::string>& builtin_symbols() {
  static const std::vector<std::string> names = {"sigma", "omega2", "omegaL", "L2", "dL", "g2"};
  return names;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

CharMonomial::CharMonomial(const std::string& symbol, int exponent) {
  if (!is_identifier(symbol)) throw std::invalid_argument("bad character symbol '" + symbol + "'");
  if (exponent > 0) factors_.push_back({symbol, exponent});
}

int CharMonomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

CharMonomial CharMonomial::operator*(const CharMonomial& o) const {
  CharMonomial r;
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && rank_less(factors_[i].first, o.factors_[j].first))) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || rank_less(o.factors_[j].first, factors_[i].first)) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

std::string CharMonomial::render() const {
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::strong_ordering CharMonomial::operator<=>(const CharMonomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  // Lex: a larger exponent on an earlier symbol sorts first.
  size_t n = std::min(factors_.size(), o.factors_.size());
  for (size_t k = 0; k < n; ++k) {
    const auto& a = factors_[k];
    const auto& b = o.factors_[k];
    if (a.first != b.first) return rank_less(a.first, b.first) ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.second != b.second) return a.second > b.second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return factors_.size() <=> o.factors_.size();
}

CharacterPolynomial::CharacterPolynomial(const Rational& c) {
  if (c != 0) terms_[CharMonomial()] = c;
}

CharacterPolynomial CharacterPolynomial::symbol(const std::string& name) {
  CharacterPolynomial p;
  p.terms_[CharMonomial(name)] = 1;
  return p;
}

bool CharacterPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CharacterPolynomial::constant() const {
  auto it = terms_.find(CharMonomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int CharacterPolynomial::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

void CharacterPolynomial::add_term(const CharMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator*=(const CharacterPolynomial& o) {
  CharacterPolynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

CharacterPolynomial CharacterPolynomial::operator-() const {
  CharacterPolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CharacterPolynomial CharacterPolynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
  CharacterPolynomial r;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    CharMonomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        rest = rest * CharMonomial(name, e);
      } else {
        Rational p = 1;
        for (int k = 0; k < e; ++k) p *= it->second;
        coef *= p;
      }
    }
    r.add_term(rest, coef);
  }
  return r;
}

std::string CharacterPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += m.render();
    }
  }
  return out;
}

bool CharacterPolynomial::needs_parens() const {
  if (terms_.size() > 1) return true;
  return false;
}

CharacterPolynomial parse_charpoly(const std::string& text) {
  CharacterPolynomial result;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.compare(pos, std::string::npos, "0") == 0) return result;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in character polynomial");
    }
    first = false;
    Rational coef = sign;
    CharMonomial mono;
    bool more = true;
    while (more) {
      skip();
      size_t start = pos;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        coef *= parse_rational(text.substr(start, pos - start));
      } else {
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name = text.substr(start, pos - start);
        if (name.empty()) throw std::invalid_argument("expected symbol in character polynomial");
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          size_t s2 = ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (s2 == pos) throw std::invalid_argument("expected exponent");
          e = std::stoi(text.substr(s2, pos - s2));
        }
        mono = mono * CharMonomial(name, e);
      }
      skip();
      more = pos < text.size() && text[pos] == '*';
      if (more) ++pos;
    }
    result.add_term(mono, coef);
  }
  return result;
}

}  // namespace taut
