#pragma once

#include "quivar/quiver.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace quivar {

// Shared fixtures.
Quiver fixture_loops(int count);      // loops x1..xk at one vertex
Quiver fixture_c2();                  // a: u->v, b: v->u
Quiver fixture_example31();           // the three-vertex six-arrow example
Word fixture_h1(const Quiver& ex31);  // c z c z x y b a
Word fixture_h2(const Quiver& ex31);  // c z c b y z x a

enum class CriterionStatus { pass, fail, inconclusive };

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;
  double seconds = 0.0;
};

// Runs all acceptance criteria, printing one PASS/FAIL/INCONCLUSIVE line per
// criterion to `out`.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

// 0 = all pass, 1 = some criterion failed, 3 = no failures but something inconclusive.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

}  // namespace quivar
