#include "taut/surface.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace taut {

std::strong_ordering BasisClass::operator<=>(const BasisClass& o) const {
  if (auto c = degree <=> o.degree; c != 0) return c;
  // omega before L before f before user divisors.
  auto rank = [](const std::string& n) -> std::pair<int, std::string> {
    if (n == "omega") return {0, ""};
    if (n == "L") return {1, ""};
    if (n == "f") return {2, ""};
    return {3, n};
  };
  return rank(name) <=> rank(o.name);
}

SurfaceClass SurfaceClass::scalar(const Rational& r) {
  SurfaceClass c;
  c.deg0 = r;
  return c;
}

SurfaceClass SurfaceClass::divisor(const std::string& name, const Rational& coef) {
  SurfaceClass c;
  if (coef != 0) c.div[name] = coef;
  return c;
}

SurfaceClass SurfaceClass::point(const CharacterPolynomial& coef) {
  SurfaceClass c;
  c.deg2 = coef;
  return c;
}

bool SurfaceClass::is_zero() const { return deg0 == 0 && div.empty() && deg2.is_zero(); }

int SurfaceClass::min_degree() const {
  if (deg0 != 0) return 0;
  if (!div.empty()) return 1;
  if (!deg2.is_zero()) return 2;
  return -1;
}

int SurfaceClass::max_degree() const {
  if (!deg2.is_zero()) return 2;
  if (!div.empty()) return 1;
  if (deg0 != 0) return 0;
  return -1;
}

std::vector<std::pair<CharacterPolynomial, BasisClass>> SurfaceClass::basis_terms() const {
  std::vector<std::pair<CharacterPolynomial, BasisClass>> out;
  if (deg0 != 0) out.push_back({deg0, BasisClass::one()});
  for (const auto& [n, c] : div) out.push_back({c, BasisClass::divisor(n)});
  if (!deg2.is_zero()) out.push_back({deg2, BasisClass::pt()});
  return out;
}

SurfaceClass& SurfaceClass::operator+=(const SurfaceClass& o) {
  deg0 += o.deg0;
  for (const auto& [n, c] : o.div) {
    div[n] += c;
    if (div[n] == 0) div.erase(n);
  }
  deg2 += o.deg2;
  return *this;
}

bool SurfaceClass::operator==(const SurfaceClass& o) const {
  return deg0 == o.deg0 && div == o.div && deg2 == o.deg2;
}

std::string SurfaceClass::render() const {
  std::vector<std::string> parts;
  if (deg0 != 0) parts.push_back(to_string(deg0));
  for (const auto& [n, c] : div) parts.push_back(c == 1 ? n : to_string(c) + "*" + n);
  if (!deg2.is_zero()) parts.push_back(deg2.needs_parens() ? "(" + deg2.render() + ")*pt" : deg2.render() + "*pt");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return BasisClass::divisor(a) <= BasisClass::divisor(b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string base_divisor(const std::string& n) { return (n == kOmegaJ || n == kOmegaK) ? "omega" : n; }

}  // namespace

SurfaceGeometry::SurfaceGeometry() {
  auto sym = CharacterPolynomial::symbol;
  pairing_[ordered("omega", "omega")] = sym("omega2");
  pairing_[ordered("omega", "L")] = sym("omegaL");
  pairing_[ordered("L", "L")] = sym("L2");
  pairing_[ordered("f", "f")] = CharacterPolynomial();
  fibre_degree_["omega"] = sym("g2");
  fibre_degree_["L"] = sym("dL");
  fibre_degree_["f"] = CharacterPolynomial();
}

CharacterPolynomial SurfaceGeometry::pairing(const std::string& a0, const std::string& b0) const {
  std::string a = base_divisor(a0), b = base_divisor(b0);
  if (a == "f") return fibre_degree(b);
  if (b == "f") return fibre_degree(a);
  auto key = ordered(a, b);
  auto it = pairing_.find(key);
  if (it != pairing_.end()) return it->second;
  if (key.first == key.second) return CharacterPolynomial::symbol(key.first + "2");
  return CharacterPolynomial::symbol(key.first + key.second);
}

CharacterPolynomial SurfaceGeometry::fibre_degree(const std::string& divisor) const {
  if (divisor == kOmegaJ) return branch_omega_degree_j;
  if (divisor == kOmegaK) return branch_omega_degree_k;
  auto it = fibre_degree_.find(divisor);
  if (it != fibre_degree_.end()) return it->second;
  return CharacterPolynomial::symbol("d" + divisor);
}

void SurfaceGeometry::set_pairing(const std::string& a, const std::string& b, const CharacterPolynomial& value) {
  pairing_[ordered(a, b)] = value;
}

void SurfaceGeometry::set_fibre_degree(const std::string& divisor, const CharacterPolynomial& value) {
  fibre_degree_[divisor] = value;
}

std::optional<std::pair<CharacterPolynomial, BasisClass>> SurfaceGeometry::mul(const BasisClass& a,
                                                                              const BasisClass& b) const {
  if (a.degree + b.degree > 2) return std::nullopt;
  if (a.degree == 0) return std::make_pair(CharacterPolynomial(1), b);
  if (b.degree == 0) return std::make_pair(CharacterPolynomial(1), a);
  CharacterPolynomial v = pairing(a.name, b.name);
  if (v.is_zero()) return std::nullopt;
  return std::make_pair(v, BasisClass::pt());
}

SurfaceClass class_mul(const SurfaceClass& a, const SurfaceClass& b, const SurfaceGeometry& geo) {
  SurfaceClass r;
  r.deg0 = a.deg0 * b.deg0;
  for (const auto& [n, c] : a.div) r.div[n] += c * b.deg0;
  for (const auto& [n, c] : b.div) r.div[n] += c * a.deg0;
  for (auto it = r.div.begin(); it != r.div.end();) it = it->second == 0 ? r.div.erase(it) : std::next(it);
  r.deg2 = a.deg2 * CharacterPolynomial(b.deg0) + b.deg2 * CharacterPolynomial(a.deg0);
  for (const auto& [n1, c1] : a.div)
    for (const auto& [n2, c2] : b.div) r.deg2 += geo.pairing(n1, n2) * CharacterPolynomial(c1 * c2);
  return r;
}

CharacterPolynomial fibre_degree(const SurfaceClass& c, const SurfaceGeometry& geo) {
  if (c.deg0 != 0 || !c.deg2.is_zero() || c.div.empty())
    throw GradingError("fibre degree requires a class of pure degree 1");
  CharacterPolynomial r;
  for (const auto& [n, k] : c.div) r += geo.fibre_degree(n) * CharacterPolynomial(k);
  return r;
}

CharacterPolynomial integrate_on_X(const SurfaceClass& c) { return c.deg2; }

std::map<std::string, Rational> parse_character_config(const std::string& text) {
  std::map<std::string, Rational> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const auto& keys = builtin_symbols();
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (value == "sym") continue;
    try {
      out[key] = parse_rational(value);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
  }
  return out;
}

std::map<std::string, Rational> load_character_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open character file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_character_config(ss.str());
}

}  // namespace taut
