#include "taut/cli.hpp"
#include "taut/polyoracle.hpp"
#include "taut/schubert.hpp"
#include "taut/staircase.hpp"
#include "taut/surface.hpp"
#include "taut/tautring.hpp"
#include "taut/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace taut;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kGrading = 2;
constexpr int kMismatch = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> level;
  std::string chars_file;
  std::string format = "pretty";
  std::string eta;
  std::uint64_t seed = 7;
};

class Output {
 public:
  explicit Output(bool kv) : kv_(kv) {}
  // Pretty mode prints the value alone; kv mode prints "name = value".
  void emit(const std::string& name, const std::string& value) const {
    if (kv_)
      std::cout << name << " = " << value << "\n";
    else
      std::cout << value << "\n";
  }
  // Pretty mode keeps the label in front, for multi-line reports.
  void labelled(const std::string& name, const std::string& value) const {
    std::cout << name << (kv_ ? " = " : ": ") << value << "\n";
  }

 private:
  bool kv_;
};

int level_of(const Options& o, const std::optional<int>& positional) {
  std::optional<int> m = positional ? positional : o.level;
  if (!m) throw UsageError("a level is required (positional or -m)");
  if (*m < 1) throw UsageError("level must be >= 1");
  return *m;
}

std::map<std::string, Rational> characters(const Options& o) {
  if (o.chars_file.empty()) return {};
  return load_character_config(o.chars_file);
}

std::string render_value(const CharacterPolynomial& p, const std::map<std::string, Rational>& chars) {
  return chars.empty() ? p.render() : p.evaluate(chars).render();
}

std::string render_value(const TautExpr& e, const std::map<std::string, Rational>& chars) {
  return chars.empty() ? e.render() : e.evaluated(chars).render();
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<SpecialFactor> parse_factors(const std::string& text) {
  std::vector<SpecialFactor> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() < 2 || (tok[0] != 'r' && tok[0] != 'c'))
      throw UsageError("factor '" + tok + "' must look like r3 (row) or c2 (column)");
    SpecialFactor f;
    f.kind = tok[0] == 'r' ? StripKind::row : StripKind::column;
    try {
      size_t used = 0;
      f.size = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad factor size in '" + tok + "'");
    }
    out.push_back(f);
  }
  if (out.empty()) throw UsageError("no factors given");
  return out;
}

std::pair<int, int> parse_box(const std::string& text) {
  int a = 0, b = 0;
  char comma = 0, extra = 0;
  std::istringstream ss(text);
  if (!(ss >> a >> comma >> b) || comma != ',' || (ss >> extra) || a < 0 || b < 0)
    throw UsageError("box must look like A,B");
  return {a, b};
}

int run_verify(const Options& o, const Output& out) {
  VerifyOptions vo;
  vo.seed = o.seed;
  auto results = run_criteria(vo);
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed();
    out.labelled("criterion " + std::to_string(c.id), std::string(c.passed() ? "PASS" : "FAIL") + "  " + c.title);
    for (const auto& s : c.checks)
      if (!s.pass)
        std::cout << "    mismatch " << s.label << ": expected " << s.expected << ", got " << s.actual << "\n";
  }
  out.labelled("summary", all ? "all checks pass" : "mismatches found");
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for tautological classes on flag-Hilbert schemes of fibred surfaces"};
  app.require_subcommand(1);
  Options o;
  int level_flag = 0;
  auto* level_opt = app.add_option("-m,--level", level_flag, "Level m");
  app.add_option("--chars", o.chars_file, "Character file with key = value lines");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"pretty", "kv"}));
  app.add_option("--eta", o.eta, "Binomial coefficient for the staircase ideal");
  app.add_option("--seed", o.seed, "Seed for random arcs and samples");
  app.fallthrough();

  std::optional<int> pos_m;
  int pos_i = 0, pos_j = 0;
  std::string expr, line_bundle = "L", box, factors;

  auto* alpha_cmd = app.add_subcommand("alpha", "Colength of the staircase ideal j_m");
  auto* beta_cmd = app.add_subcommand("beta", "Vector beta_m");
  auto* colength_cmd = app.add_subcommand("colength", "Colength of j_m, or of j_m plus the j-th binomial");
  auto* vdm_cmd = app.add_subcommand("vdm-check", "Chain and syzygy identities of the mixed Van der Monde G_i");
  auto* ord_cmd = app.add_subcommand("ord-table", "Orders of vanishing of G_j along the special-fibre components");
  auto* eta_cmd = app.add_subcommand("eta", "Exponent E in (sigma^y_m)^(i+j-2) G_1^2 = +-t^E G_i G_j");
  auto* norm_cmd = app.add_subcommand("normalize", "Normal form of an expression");
  auto* int_cmd = app.add_subcommand("integrate", "Degree of a top-degree expression");
  auto* chern_cmd = app.add_subcommand("chern", "Chern classes of the tautological bundle");
  auto* schubert_cmd = app.add_subcommand("schubert", "Products of special Schubert classes");
  auto* nsec_cmd = app.add_subcommand("nsec3", "Multisecant count for m = 3");
  auto* verify_cmd = app.add_subcommand("verify-paper", "Replays every regression check");

  for (auto* c : {alpha_cmd, beta_cmd, colength_cmd, vdm_cmd, ord_cmd, eta_cmd})
    c->add_option("m", pos_m, "Level m");
  colength_cmd->add_option("j", pos_i, "Binomial index j in [1, m-1]");
  eta_cmd->add_option("i", pos_i, "Index i")->required();
  eta_cmd->add_option("j", pos_j, "Index j")->required();
  for (auto* c : {norm_cmd, int_cmd}) c->add_option("expr", expr, "Expression")->required();
  chern_cmd->add_option("--line", line_bundle, "Line bundle name");
  nsec_cmd->add_option("--line", line_bundle, "Line bundle name");
  schubert_cmd->add_option("--box", box, "Box A,B")->required();
  schubert_cmd->add_option("--factors", factors, "Special classes, e.g. r4,r3,r3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (level_opt->count() > 0) o.level = level_flag;
  Output out(o.format == "kv");

  try {
    if (*alpha_cmd) {
      int m = level_of(o, pos_m);
      out.emit("alpha", std::to_string(alpha(m)));
    } else if (*beta_cmd) {
      int m = level_of(o, pos_m);
      if (m < 2) throw UsageError("beta needs m >= 2");
      std::vector<long long> b;
      if (o.eta.empty()) {
        b = beta(m);
      } else {
        Rational eta = parse_rational(o.eta);
        for (int j = 1; j < m; ++j) b.push_back(beta_at(m, j, eta));
      }
      out.emit("beta", join(b));
    } else if (*colength_cmd) {
      int m = level_of(o, pos_m);
      if (pos_i == 0) {
        out.emit("colength", std::to_string(colength(BivariateIdeal{m, j_m(m), std::nullopt})));
      } else {
        if (pos_i < 1 || pos_i >= m) throw UsageError("j must lie in [1, m-1]");
        Rational eta = o.eta.empty() ? Rational(1) : parse_rational(o.eta);
        BivariateIdeal I{m, j_m(m), BivariateIdeal::Binomial{pos_i, eta}};
        out.emit("colength", std::to_string(colength(I)));
      }
    } else if (*vdm_cmd) {
      int m = level_of(o, pos_m);
      if (m < 2 || m > kMaxVdmLevel) throw UsageError("vdm-check supports 2 <= m <= " + std::to_string(kMaxVdmLevel));
      auto show = [](const SignedCheck& s) { return s.ok ? std::string(s.sign > 0 ? "ok (+)" : "ok (-)") : "FAIL"; };
      for (int i = 1; i < m; ++i) out.labelled("chain i=" + std::to_string(i), show(check_chain(m, i)));
      for (int family : {2, 3}) {
        int lo = family == 2 ? 1 : 2, hi = family == 2 ? m - 1 : m;
        for (int i = lo; i <= hi; ++i)
          for (int j = 0; j < m; ++j)
            out.labelled("syzygy" + std::to_string(family) + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                         show(check_syzygy(family, m, i, j)));
      }
    } else if (*ord_cmd) {
      int m = level_of(o, pos_m);
      if (m < 2 || m > kMaxVdmLevel) throw UsageError("ord-table supports 2 <= m <= " + std::to_string(kMaxVdmLevel));
      OrdTable t = ord_table(m, o.seed);
      for (size_t j = 0; j < t.value.size(); ++j) {
        std::vector<long long> row(t.value[j].begin(), t.value[j].end());
        out.labelled("G" + std::to_string(j + 1), join(row));
      }
      out.labelled("well_defined", t.well_defined ? "yes" : "no");
      out.labelled("nonnegative", t.nonnegative ? "yes" : "no");
      out.labelled("adjacent_zero_pairs", t.adjacent_zero_pairs ? "yes" : "no");
    } else if (*eta_cmd) {
      int m = level_of(o, pos_m);
      if (m < 1 || m > kMaxVdmLevel) throw UsageError("eta supports 1 <= m <= " + std::to_string(kMaxVdmLevel));
      if (pos_i < 1 || pos_i > m || pos_j < 1 || pos_j > m) throw UsageError("i and j must lie in [1, m]");
      out.labelled("identity", std::to_string(eta_identity_exponent(m, pos_i, pos_j)));
      out.labelled("expected", eta_expected(m, pos_i, pos_j).get_str());
      out.labelled("printed", std::to_string(eta_printed(m, pos_i, pos_j)));
      out.labelled("valuation", std::to_string(eta_valuation(m, pos_i, pos_j)));
    } else if (*norm_cmd || *int_cmd) {
      int m = level_of(o, std::nullopt);
      auto chars = characters(o);
      TautRing ring;
      TautExpr e = evaluate_expression(parse_expression(expr, m), ring, m);
      if (*norm_cmd)
        out.emit("normal_form", render_value(e, chars));
      else
        out.emit("integral", render_value(ring.integrate(e), chars));
    } else if (*chern_cmd) {
      int m = level_of(o, std::nullopt);
      auto chars = characters(o);
      ChernResult res = TautRing().chern_taut(line_bundle, m);
      for (size_t k = 0; k < res.roots.size(); ++k) out.labelled("root" + std::to_string(k + 1), res.roots[k]);
      for (size_t k = 0; k < res.classes.size(); ++k)
        out.labelled("c" + std::to_string(k), render_value(res.classes[k], chars));
    } else if (*schubert_cmd) {
      auto [a, b] = parse_box(box);
      auto fs = parse_factors(factors);
      int total = 0;
      for (const auto& f : fs) total += f.size;
      if (total == a * b) {
        out.emit("integral", grassmann_integral(a, b, fs).get_str());
      } else {
        SchurExpr e = SchurExpr::unit(a, b);
        for (const auto& f : fs) e = pieri_mul(e, f);
        out.emit("product", e.render());
      }
    } else if (*nsec_cmd) {
      auto chars = characters(o);
      Nsec3Result res = nsec3(TautRing(), StripKind::row, line_bundle);
      CharacterPolynomial n3 = chars.empty() ? res.n3() : res.n3().evaluate(chars);
      if (n3.is_constant()) {
        out.emit("N3", n3.constant().get_str());
      } else {
        for (const auto& t : res.terms) {
          std::string j = std::to_string(t.j[0]) + std::to_string(t.j[1]) + std::to_string(t.j[2]);
          out.labelled("term" + j, render_value(t.product(), chars));
        }
        out.labelled("3!N3", render_value(res.total, chars));
        out.labelled("N3", n3.render());
      }
    } else if (*verify_cmd) {
      return run_verify(o, out);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const GradingError& e) {
    std::cerr << "grading error: " << e.what() << "\n";
    return kGrading;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kGrading;
  } catch (const InfiniteColengthError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kGrading;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
