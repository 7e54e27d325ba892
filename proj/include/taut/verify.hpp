#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taut {

struct SubCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
  // Failure analysed as unattainable against the printed value; see README.
  bool known_unattainable = false;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<SubCheck> checks;
  std::vector<std::string> notes;  // reported, never asserted
  double seconds = 0;

  bool passed() const;
  // Every failing sub-check is a known unattainable one.
  bool acceptable() const;
  int failures() const;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  bool parallel = true;
};

constexpr int kCriterionCount = 12;

Criterion run_criterion(int id, const VerifyOptions& opts = {});
// All criteria, sorted by id regardless of completion order.
std::vector<Criterion> run_criteria(const VerifyOptions& opts = {});

// "criterion 7: FAIL  worked values (2 of 31 failed, all known)".
std::string summary_line(const Criterion& c);

}  // namespace taut
