#include "taut/polyoracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace taut {

namespace {

void reduce_index(QuotPoly::Exps& e, int m, int i) {
  int k = std::min(e[i], e[m + i]);
  e[i] -= k;
  e[m + i] -= k;
  e[2 * m] += k;
}

}  // namespace

void QuotPoly::add(const Exps& e, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = terms_.try_emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QuotPoly QuotPoly::constant(int m, const Rational& c) {
  QuotPoly p(m);
  p.add(Exps(2 * m + 1, 0), c);
  return p;
}

QuotPoly QuotPoly::x(int m, int i, int power) {
  QuotPoly p(m);
  Exps e(2 * m + 1, 0);
  e[i - 1] = power;
  p.add(e, 1);
  return p;
}

QuotPoly QuotPoly::y(int m, int i, int power) {
  QuotPoly p(m);
  Exps e(2 * m + 1, 0);
  e[m + i - 1] = power;
  p.add(e, 1);
  return p;
}

QuotPoly QuotPoly::t(int m, int power) {
  QuotPoly p(m);
  Exps e(2 * m + 1, 0);
  e[2 * m] = power;
  p.add(e, 1);
  return p;
}

QuotPoly normalize_in_order(int m, const std::map<QuotPoly::Exps, Rational>& raw, const std::vector<int>& order) {
  std::map<QuotPoly::Exps, Rational> cur = raw;
  for (int i : order) {
    std::map<QuotPoly::Exps, Rational> next;
    for (const auto& [e0, c] : cur) {
      QuotPoly::Exps e = e0;
      reduce_index(e, m, i - 1);
      next[e] += c;
    }
    cur.clear();
    for (auto& [e, c] : next)
      if (c != 0) cur[e] = c;
  }
  // Indices missing from `order` are reduced here so the result is canonical.
  return QuotPoly::from_raw(m, cur);
}

QuotPoly QuotPoly::from_raw(int m, const std::map<Exps, Rational>& raw) {
  QuotPoly p(m);
  for (const auto& [e0, c] : raw) {
    QuotPoly::Exps e = e0;
    if (static_cast<int>(e.size()) != 2 * m + 1) throw std::invalid_argument("exponent vector has wrong length");
    for (int k = 0; k < m; ++k) reduce_index(e, m, k);
    p.add(e, c);
  }
  return p;
}

QuotPoly QuotPoly::operator+(const QuotPoly& o) const {
  QuotPoly r = *this;
  if (r.m_ == 0) r.m_ = o.m_;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

QuotPoly QuotPoly::operator-(const QuotPoly& o) const { return *this + (-o); }

QuotPoly QuotPoly::operator-() const { return scaled(-1); }

QuotPoly QuotPoly::scaled(const Rational& c) const {
  QuotPoly r(m_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

QuotPoly QuotPoly::operator*(const QuotPoly& o) const {
  QuotPoly r(std::max(m_, o.m_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e(e1.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
      for (int k = 0; k < r.m_; ++k) reduce_index(e, r.m_, k);
      r.add(e, c1 * c2);
    }
  return r;
}

int QuotPoly::t_valuation() const {
  if (terms_.empty()) return -1;
  int v = -1;
  for (const auto& [e, c] : terms_) v = v < 0 ? e[2 * m_] : std::min(v, e[2 * m_]);
  return v;
}

Rational QuotPoly::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

std::string QuotPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> f;
    for (int k = 0; k < m_; ++k)
      if (e[k]) f.push_back("x" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : ""));
    for (int k = 0; k < m_; ++k)
      if (e[m_ + k]) f.push_back("y" + std::to_string(k + 1) + (e[m_ + k] > 1 ? "^" + std::to_string(e[m_ + k]) : ""));
    if (e[2 * m_]) f.push_back("t" + (e[2 * m_] > 1 ? "^" + std::to_string(e[2 * m_]) : ""));
    if (f.empty() || a != 1) {
      out << to_string(a);
      if (!f.empty()) out << "*";
    }
    for (size_t k = 0; k < f.size(); ++k) out << (k ? "*" : "") << f[k];
  }
  return out.str();
}

namespace {

QuotPoly elementary(int m, int k, bool use_y) {
  if (k < 0 || k > m) return QuotPoly(m);
  QuotPoly total(m);
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    QuotPoly term = QuotPoly::constant(m, 1);
    for (int i = 0; i < m; ++i)
      if (pick[i]) term = term * (use_y ? QuotPoly::y(m, i + 1) : QuotPoly::x(m, i + 1));
    total = total + term;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

// Row r of the mixed Van der Monde matrix at column c.
QuotPoly vdm_entry(int m, int i, int r, int c) {
  if (r <= m - i) return r == 0 ? QuotPoly::constant(m, 1) : QuotPoly::x(m, c + 1, r);
  return QuotPoly::y(m, c + 1, r - (m - i));
}

}  // namespace

QuotPoly sigma_x(int m, int k) { return elementary(m, k, false); }
QuotPoly sigma_y(int m, int k) { return elementary(m, k, true); }

QuotPoly vdm_det(int m, int i) {
  if (m < 2 || m > kMaxVdmLevel) throw std::invalid_argument("vdm_det supports 2 <= m <= 6");
  if (i < 1 || i > m) throw std::invalid_argument("vdm_det requires 1 <= i <= m");
  // Laplace expansion along rows with the minors memoized by column subset.
  std::map<unsigned, QuotPoly> minors;
  minors[0] = QuotPoly::constant(m, 1);
  for (int r = 0; r < m; ++r) {
    std::map<unsigned, QuotPoly> next;
    for (const auto& [mask, minor] : minors) {
      int pos = 0;
      for (int c = 0; c < m; ++c) {
        if (mask & (1u << c)) {
          ++pos;
          continue;
        }
        // Column c enters after `pos` smaller columns already used: the sign
        // counts used columns to its right.
        int right = __builtin_popcount(mask >> (c + 1));
        QuotPoly term = vdm_entry(m, i, r, c) * minor;
        if (right % 2) term = -term;
        auto [it, ins] = next.try_emplace(mask | (1u << c), term);
        if (!ins) it->second = it->second + term;
      }
    }
    minors = std::move(next);
  }
  QuotPoly d = minors[(1u << m) - 1];
  if (d.leading_coefficient() < 0) d = -d;
  return d;
}

namespace {

SignedCheck compare_up_to_sign(const QuotPoly& lhs, const QuotPoly& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return {true, 1};
  if (lhs == rhs) return {true, 1};
  if (lhs == -rhs) return {true, -1};
  return {false, 0};
}

}  // namespace

SignedCheck check_chain(int m, int i) {
  if (i < 1 || i > m - 1) throw std::invalid_argument("check_chain requires 1 <= i <= m-1");
  QuotPoly lhs = QuotPoly::t(m, m - i) * vdm_det(m, i + 1);
  QuotPoly rhs = sigma_y(m, m) * vdm_det(m, i);
  return compare_up_to_sign(lhs, rhs);
}

SignedCheck check_syzygy(int family, int m, int i, int j) {
  if (family != 2 && family != 3) throw std::invalid_argument("syzygy family must be 2 or 3");
  if (j < 0 || j > m - 1) throw std::invalid_argument("syzygy requires 0 <= j <= m-1");
  QuotPoly lhs, rhs;
  if (family == 2) {
    if (i < 1 || i > m - 1) throw std::invalid_argument("family 2 requires 1 <= i <= m-1");
    lhs = sigma_y(m, m - j) * vdm_det(m, i);
    rhs = sigma_x(m, j) * vdm_det(m, i + 1);
  } else {
    if (i < 2 || i > m) throw std::invalid_argument("family 3 requires 2 <= i <= m");
    lhs = sigma_x(m, m - j) * vdm_det(m, i);
    rhs = sigma_y(m, j) * vdm_det(m, i - 1);
  }
  // Family 3 is the x <-> y mirror of family 2, which puts t^(i-1-j) on the right.
  int e = family == 2 ? m - j - i : i - 1 - j;
  if (e >= 0)
    rhs = QuotPoly::t(m, e) * rhs;
  else
    lhs = QuotPoly::t(m, -e) * lhs;
  return compare_up_to_sign(lhs, rhs);
}

namespace {

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 97), den(1, 89), sgn(0, 1);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return sgn(rng) ? r : Rational(-r);
}

// Minimal t exponent of g restricted to a random arc through Theta_I; -1 if it vanishes.
int arc_once(const QuotPoly& g, int m, const std::set<int>& I, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> v(m);
  for (auto& r : v) r = random_nonzero(rng);
  std::map<int, Rational> series;
  for (const auto& [e, c] : g.terms()) {
    Rational coef = c;
    int tpow = e[2 * m];
    for (int k = 0; k < m; ++k) {
      int a = e[k], b = e[m + k];
      // k in I: x = v, y = t/v; otherwise y = v, x = t/v.
      int net = I.count(k + 1) ? a - b : b - a;
      tpow += I.count(k + 1) ? b : a;
      Rational p = 1;
      for (int s = 0; s < std::abs(net); ++s) p *= v[k];
      coef *= net >= 0 ? p : Rational(1 / p);
    }
    series[tpow] += coef;
  }
  for (const auto& [p, c] : series)
    if (c != 0) return p;
  return -1;
}

}  // namespace

int arc_valuation(int m, int j, const std::set<int>& I, std::uint64_t seed) {
  QuotPoly g = vdm_det(m, j);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::uint64_t s1 = seed * 2654435761ULL + 2 * attempt + 1;
    std::uint64_t s2 = s1 ^ 0x9E3779B97F4A7C15ULL;
    int a = arc_once(g, m, I, s1), b = arc_once(g, m, I, s2);
    if (a >= 0 && a == b) return a;
  }
  throw ArcError("arc valuation unstable after 5 attempts");
}

OrdTable ord_table(int m, std::uint64_t seed) {
  OrdTable table;
  table.m = m;
  table.value.assign(m, std::vector<int>(m + 1, 0));
  for (int j = 1; j <= m; ++j) {
    for (int k = 0; k <= m; ++k) {
      // Initial and final segments of size k: two distinct components when 0 < k < m.
      std::set<int> first, last;
      for (int a = 1; a <= k; ++a) first.insert(a);
      for (int a = m - k + 1; a <= m; ++a) last.insert(a);
      int v1 = arc_valuation(m, j, first, seed);
      int v2 = arc_valuation(m, j, last, seed + 17);
      if (v1 != v2) table.well_defined = false;
      if (v1 < 0) table.nonnegative = false;
      table.value[j - 1][k] = v1;
    }
    std::vector<int> zeros;
    for (int k = 0; k <= m; ++k)
      if (table.value[j - 1][k] == 0) zeros.push_back(k);
    if (zeros.size() != 2 || zeros[1] != zeros[0] + 1) table.adjacent_zero_pairs = false;
  }
  return table;
}

int eta_valuation(int m, int i, int j) {
  if (i < 1 || j < 1 || i > m || j > m) throw std::invalid_argument("eta_valuation requires 1 <= i, j <= m");
  QuotPoly g1 = vdm_det(m, 1);
  QuotPoly p = g1 * g1;
  QuotPoly s = sigma_y(m, m);
  for (int k = 0; k < i + j - 2; ++k) p = p * s;
  return p.t_valuation();
}

int eta_identity_exponent(int m, int i, int j) {
  if (i < 1 || j < 1 || i > m || j > m) throw std::invalid_argument("eta_identity_exponent requires 1 <= i, j <= m");
  QuotPoly g1 = vdm_det(m, 1);
  QuotPoly lhs = g1 * g1;
  QuotPoly s = sigma_y(m, m);
  for (int k = 0; k < i + j - 2; ++k) lhs = lhs * s;
  QuotPoly prod = vdm_det(m, i) * vdm_det(m, j);
  int e = lhs.t_valuation() - prod.t_valuation();
  if (e < 0) return -1;
  QuotPoly rhs = QuotPoly::t(m, e) * prod;
  return compare_up_to_sign(lhs, rhs).ok ? e : -1;
}

Rational eta_expected(int m, int i, int j) {
  Rational r = Rational(i - 1) * (Rational(2 * m - i)) + Rational(j - 1) * (Rational(2 * m - j));
  return r / 2;
}

long long eta_printed(int m, int i, int j) {
  return static_cast<long long>(i - 1) * (m - i) + static_cast<long long>(j - 1) * (m - j);
}

bool diagonal_vanish(int m, int i) {
  QuotPoly g = vdm_det(m, i);
  std::map<QuotPoly::Exps, Rational> raw;
  for (const auto& [e0, c] : g.terms()) {
    QuotPoly::Exps e = e0;
    e[0] += e[1];
    e[1] = 0;
    e[m] += e[m + 1];
    e[m + 1] = 0;
    raw[e] += c;
  }
  return QuotPoly::from_raw(m, raw).is_zero();
}

}  // namespace taut
