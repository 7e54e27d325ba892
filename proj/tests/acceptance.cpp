#include "taut/verify.hpp"

#include <cstring>
#include <iostream>

using namespace taut;

// One line per criterion. Exits 0 when every criterion passes or fails only in
// sub-checks known to be unattainable against the printed values.
int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool ok = true;
  for (const auto& c : run_criteria()) {
    std::cout << summary_line(c) << "\n";
    for (const auto& s : c.checks)
      if (!s.pass)
        std::cout << "    " << (s.known_unattainable ? "known: " : "UNEXPECTED: ") << s.label << ": expected "
                  << s.expected << ", got " << s.actual << "\n";
    if (verbose)
      for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
    ok = ok && c.acceptable();
  }
  std::cout << (ok ? "acceptance: every failure is a known unattainable sub-check" : "acceptance: unexpected failures")
            << "\n";
  return ok ? 0 : 1;
}
