#include "taut/schubert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace taut {

BoxPartition BoxPartition::empty(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  return {std::vector<int>(a, 0), a, b};
}

bool BoxPartition::valid() const {
  if (static_cast<int>(rows.size()) != a) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] > b) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

int BoxPartition::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

bool BoxPartition::is_full() const { return size() == a * b; }

BoxPartition BoxPartition::transposed() const {
  BoxPartition t = empty(b, a);
  for (int c = 0; c < b; ++c)
    for (int r : rows)
      if (r > c) ++t.rows[c];
  return t;
}

std::string BoxPartition::render() const {
  std::string s = "(";
  bool first = true;
  for (int r : rows) {
    if (r == 0) break;
    s += (first ? "" : ",") + std::to_string(r);
    first = false;
  }
  return s + ")";
}

SchurExpr SchurExpr::unit(int a, int b) {
  SchurExpr e(a, b);
  e.add(BoxPartition::empty(a, b), 1);
  return e;
}

void SchurExpr::add(const BoxPartition& p, const Rational& c) {
  if (p.a != a_ || p.b != b_ || !p.valid()) throw std::invalid_argument("partition " + p.render() + " not in box");
  if (c == 0) return;
  auto [it, ins] = terms_.try_emplace(p, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SchurExpr::coefficient(const BoxPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string SchurExpr::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational mag = abs(c);
    std::string body = mag == 1 ? "" : mag.get_str() + "*";
    body += "s" + p.render();
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

// Every mu obtained from lambda by adding a strip of size j row by row.
void add_strips(const BoxPartition& lam, int j, StripKind kind, const std::function<void(const BoxPartition&)>& emit) {
  BoxPartition mu = lam;
  std::function<void(int, int)> go = [&](int row, int left) {
    if (row == lam.a) {
      if (left == 0) emit(mu);
      return;
    }
    int cap = row == 0 ? lam.b : mu.rows[row - 1];
    int hi = kind == StripKind::row ? (row == 0 ? lam.b : lam.rows[row - 1]) : lam.rows[row] + 1;
    hi = std::min({hi, cap, lam.rows[row] + left});
    for (int v = lam.rows[row]; v <= hi; ++v) {
      mu.rows[row] = v;
      go(row + 1, left - (v - lam.rows[row]));
    }
    mu.rows[row] = lam.rows[row];
  };
  go(0, j);
}

}  // namespace

SchurExpr pieri_mul(const SchurExpr& e, SpecialFactor f) {
  if (f.size < 0 || f.size > std::max(e.a(), e.b()))
    throw std::invalid_argument("special class size " + std::to_string(f.size) + " outside [0, max(box)]");
  SchurExpr out(e.a(), e.b());
  for (const auto& [lam, c] : e.terms())
    add_strips(lam, f.size, f.kind, [&](const BoxPartition& mu) { out.add(mu, c); });
  return out;
}

Rational grassmann_integral(int a, int b, const std::vector<SpecialFactor>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.size;
  if (total != a * b) return 0;
  SchurExpr e = SchurExpr::unit(a, b);
  for (const auto& f : factors) e = pieri_mul(e, f);
  BoxPartition full{std::vector<int>(a, b), a, b};
  return e.coefficient(full);
}

std::vector<std::array<int, 3>> nsec3_tuples() {
  std::vector<std::array<int, 3>> out;
  for (int j1 = 2; j1 >= 0; --j1)
    for (int j2 = 4 - j1; j2 >= 0; --j2) {
      int j3 = 4 - j1 - j2;
      if (j3 > 0) out.push_back({j1, j2, j3});
    }
  return out;
}

namespace {

using WordSum = std::vector<std::pair<Rational, Word>>;

WordSum times(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [c, w] : x)
    for (const auto& [d, v] : y) {
      Word nw = w;
      nw.insert(nw.end(), v.begin(), v.end());
      out.push_back({c * d, nw});
    }
  return out;
}

WordSum power(const WordSum& x, int n) {
  WordSum out{{1, {}}};
  for (int i = 0; i < n; ++i) out = times(out, x);
  return out;
}

}  // namespace

Nsec3Result nsec3(const TautRing& ring, StripKind kind, const std::string& line_bundle) {
  SurfaceClass L = SurfaceClass::divisor(line_bundle);
  // Chern roots L^(i) - Delta<i>, Delta<i> = Gamma<i> - Gamma<i-1>, Gamma<1> = 0.
  std::array<WordSum, 3> roots{
      WordSum{{1, {WordFactor::slot(1, L)}}},
      WordSum{{1, {WordFactor::slot(2, L)}}, {-1, {WordFactor::gamma(2)}}},
      WordSum{{1, {WordFactor::slot(3, L)}}, {-1, {WordFactor::gamma(3)}}, {1, {WordFactor::gamma(2)}}}};
  Nsec3Result res;
  for (const auto& j : nsec3_tuples()) {
    Nsec3Term t;
    t.j = j;
    std::vector<SpecialFactor> factors;
    for (int x : j) factors.push_back({kind, 4 - x});
    t.grassmann = kind == StripKind::row ? grassmann_integral(2, 4, factors) : grassmann_integral(4, 2, factors);
    WordSum monomial = times(times(power(roots[0], j[0]), power(roots[1], j[1])), power(roots[2], j[2]));
    TautExpr e(3);
    for (const auto& [c, w] : monomial) e.add(ring.expand_monomial(w, 3), CharacterPolynomial(c));
    t.w = ring.integrate(e);
    res.total += t.product();
    res.terms.push_back(t);
  }
  return res;
}

}  // namespace taut
