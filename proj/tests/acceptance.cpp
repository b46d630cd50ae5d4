// Acceptance suite: one pass/fail line per criterion; nonzero exit on any
// failure. Every tolerance is exact integer equality.

#include <cstdio>
#include <string>

#include "support/criteria.hpp"

namespace {

struct Entry {
  const char* name;
  crit::CriterionResult (*run)();
};

crit::CriterionResult run5() { return crit::criterion5(); }

}  // namespace

int main() {
  const Entry entries[] = {
      {"criterion 1 (gin fixture, d=3 a=2)", crit::criterion1},
      {"criterion 2 (degree fixture A)", crit::criterion2},
      {"criterion 3 (lex fixture, hdeg 9 and 18)", crit::criterion3},
      {"criterion 4 (counterexample reproduction)", crit::criterion4},
      {"criterion 5 (property suite, 200 Borel ideals)", run5},
      {"criterion 6 (oracle equivalence)", crit::criterion6},
      {"criterion 7 (hyperplane identity)", crit::criterion7},
      {"criterion 8 (Groebner sanity)", crit::criterion8},
  };
  int failures = 0;
  for (const auto& e : entries) {
    crit::CriterionResult r = e.run();
    std::printf("%s: %s\n", e.name, r.pass ? "PASS" : "FAIL");
    if (!r.pass) {
      ++failures;
      std::printf("  -> %s\n", r.detail.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
