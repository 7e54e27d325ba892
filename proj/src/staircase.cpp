#include "taut/staircase.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace taut {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Staircase Staircase::minimalized(std::vector<Exponent2> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Staircase s;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && h.first <= g.first && h.second <= g.second) redundant = true;
    if (!redundant) s.generators.push_back(g);
  }
  std::sort(s.generators.begin(), s.generators.end(), [](auto& a, auto& b) { return a.first > b.first; });
  return s;
}

bool Staircase::contains(const Exponent2& e) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Exponent2& g) { return g.first <= e.first && g.second <= e.second; });
}

Staircase j_m(int m) {
  if (m < 2) throw std::invalid_argument("j_m requires m >= 2");
  std::vector<Exponent2> gens;
  for (int i = 1; i <= m; ++i)
    gens.push_back({static_cast<int>(binomial(m - i + 1, 2)), static_cast<int>(binomial(i, 2))});
  return Staircase::minimalized(gens);
}

std::vector<Poly2> BivariateIdeal::generators() const {
  std::vector<Poly2> out;
  for (const auto& g : monomial_part.generators) out.push_back(Poly2{{g, Rational(1)}});
  if (binomial_part) {
    Poly2 p;
    p[{0, binomial_part->j}] += 1;
    p[{m - binomial_part->j, 0}] += binomial_part->eta;
    out.push_back(p);
  }
  return out;
}

long long alpha(int m) {
  if (m < 2) throw std::invalid_argument("alpha requires m >= 2");
  long long s = 0;
  for (int i = 1; i <= m - 1; ++i) s += i * binomial(m + 1 - i, 2);
  return s;
}

long long alpha_printed_closed_form(int m) { return 3 * binomial(m, 4) + 3 * binomial(m, 3) + m - 1; }

namespace {

bool divides(const Exponent2& a, const Exponent2& b) { return a.first <= b.first && a.second <= b.second; }

void axpy(Poly2& p, const Rational& c, const Exponent2& shift, const Poly2& q) {
  for (const auto& [e, v] : q) {
    Exponent2 k{e.first + shift.first, e.second + shift.second};
    auto [it, ins] = p.try_emplace(k, c * v);
    if (!ins) {
      it->second += c * v;
      if (it->second == 0) p.erase(it);
    }
  }
}

// Full reduction of p modulo basis.
Poly2 reduce(Poly2 p, const std::vector<Poly2>& basis) {
  Poly2 rem;
  while (!p.empty()) {
    auto [lm, lc] = *p.begin();
    bool reduced = false;
    for (const auto& g : basis) {
      const auto& [gm, gc] = *g.begin();
      if (divides(gm, lm)) {
        axpy(p, -lc / gc, {lm.first - gm.first, lm.second - gm.second}, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem[lm] = lc;
      p.erase(p.begin());
    }
  }
  return rem;
}

Poly2 monic(Poly2 p) {
  Rational lc = p.begin()->second;
  for (auto& t : p) t.second /= lc;
  return p;
}

}  // namespace

std::vector<Poly2> groebner_basis(const std::vector<Poly2>& gens) {
  std::vector<Poly2> basis;
  for (const auto& g : gens)
    if (!g.empty()) basis.push_back(monic(g));
  // S-pairs processed in order of lcm degree.
  auto lcm_deg = [&](size_t i, size_t j) {
    auto a = basis[i].begin()->first, b = basis[j].begin()->first;
    return std::max(a.first, b.first) + std::max(a.second, b.second);
  };
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](auto& p, auto& q) { return lcm_deg(p.first, p.second) < lcm_deg(q.first, q.second); });
    auto [i, j] = *best;
    pairs.erase(best);
    auto a = basis[i].begin()->first, b = basis[j].begin()->first;
    Exponent2 l{std::max(a.first, b.first), std::max(a.second, b.second)};
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (l.first == a.first + b.first && l.second == a.second + b.second) continue;
    Poly2 s;
    axpy(s, 1, {l.first - a.first, l.second - a.second}, basis[i]);
    axpy(s, -1, {l.first - b.first, l.second - b.second}, basis[j]);
    Poly2 r = reduce(s, basis);
    if (r.empty()) continue;
    basis.push_back(monic(r));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.push_back({k, basis.size() - 1});
  }
  // Minimalize, then inter-reduce.
  std::vector<Poly2> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j) continue;
      auto a = basis[j].begin()->first, b = basis[i].begin()->first;
      if (divides(a, b) && (a != b || j < i)) keep = false;
    }
    if (keep) minimal.push_back(basis[i]);
  }
  std::vector<Poly2> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly2> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly2 head{*minimal[i].begin()};
    Poly2 tail = minimal[i];
    tail.erase(tail.begin());
    Poly2 r = reduce(tail, others);
    for (auto& t : r) head[t.first] = t.second;
    reduced.push_back(head);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly2& p, const Poly2& q) { return Degrevlex()(q.begin()->first, p.begin()->first); });
  return reduced;
}

std::vector<Exponent2> standard_monomials(const std::vector<Poly2>& gens) {
  auto gb = groebner_basis(gens);
  std::vector<Exponent2> leads;
  for (const auto& g : gb) leads.push_back(g.begin()->first);
  int xmax = -1, ymax = -1;
  for (const auto& l : leads) {
    if (l.second == 0) xmax = xmax < 0 ? l.first : std::min(xmax, l.first);
    if (l.first == 0) ymax = ymax < 0 ? l.second : std::min(ymax, l.second);
  }
  if (xmax < 0 || ymax < 0) throw InfiniteColengthError("ideal has infinite colength");
  std::vector<Exponent2> out;
  for (int a = 0; a < xmax; ++a)
    for (int b = 0; b < ymax; ++b) {
      bool in_ideal = std::any_of(leads.begin(), leads.end(), [&](auto& l) { return divides(l, {a, b}); });
      if (!in_ideal) out.push_back({a, b});
    }
  return out;
}

long long colength(const std::vector<Poly2>& gens) {
  return static_cast<long long>(standard_monomials(gens).size());
}

long long colength(const BivariateIdeal& ideal) { return colength(ideal.generators()); }

long long beta_at(int m, int j, const Rational& eta) {
  if (j < 1 || j > m - 1) throw std::invalid_argument("beta requires 1 <= j <= m-1");
  if (eta == 0) throw std::invalid_argument("eta must be nonzero");
  BivariateIdeal I{m, j_m(m), BivariateIdeal::Binomial{j, eta}};
  return colength(I);
}

std::vector<long long> beta(int m, const Rational& eta1, const Rational& eta2) {
  if (m < 2) throw std::invalid_argument("beta requires m >= 2");
  if (eta1 == eta2) throw std::invalid_argument("genericity check needs two distinct eta values");
  std::vector<long long> out;
  for (int j = 1; j <= m - 1; ++j) {
    long long a = beta_at(m, j, eta1), b = beta_at(m, j, eta2);
    if (a != b)
      throw GenericityError("beta(" + std::to_string(m) + "," + std::to_string(j) + ") depends on eta: " +
                            std::to_string(a) + " vs " + std::to_string(b));
    out.push_back(a);
  }
  return out;
}

long long beta_total(int m) {
  static std::mutex mu;
  static std::map<int, long long> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  long long s = 0;
  for (long long b : beta(m)) s += b;
  std::lock_guard lock(mu);
  cache[m] = s;
  return s;
}

namespace {

// Unit square with lower-left corner (a, b) lies in S_m.
bool square_in_S(int m, int a, int b) {
  if (a < 0 || b < 0) return false;
  for (int i = 1; i <= m; ++i)
    if (a + 1 <= binomial(m - i + 1, 2) && b + 1 <= binomial(i + 1, 2)) return true;
  return false;
}

}  // namespace

PolygonDiagnostic printed_polygon_region(int m, int j) {
  if (j < 1 || j > m - 1) throw std::invalid_argument("printed_polygon_region requires 1 <= j <= m-1");
  long long count = 0;
  int w = static_cast<int>(binomial(m, 2)) + 1;
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < j; ++b) {
      if (!square_in_S(m, a, b)) continue;
      // Inside R_m + P_j when the shifted-back square lies in Q but outside S_m.
      int a0 = a + j, b0 = b - (m + 1 - j);
      bool in_translate = a0 >= 0 && b0 >= 0 && !square_in_S(m, a0, b0);
      if (!in_translate) ++count;
    }
  long long bt = beta_at(m, j, 1);
  return {count, bt, count == bt};
}

PolygonDiagnostic elimination_cobasis_count(int m, int i) {
  if (i < 1 || i > m - 1) throw std::invalid_argument("elimination_cobasis_count requires 1 <= i <= m-1");
  Staircase jm = j_m(m);
  long long count = 0;
  int w = static_cast<int>(binomial(m, 2)) + 1;
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      if (jm.contains({a, b}) || b >= i) continue;
      bool eliminated = false;
      for (int jj = 1; jj <= m; ++jj) {
        if (binomial(jj, 2) < i) continue;
        Exponent2 g{static_cast<int>(binomial(m + 1 - jj, 2)) + m + 1 - i, static_cast<int>(binomial(jj, 2)) - i};
        if (divides(g, {a, b})) eliminated = true;
      }
      if (!eliminated) ++count;
    }
  long long bt = beta_at(m, i, 1);
  return {count, bt, count == bt};
}

}  // namespace taut
