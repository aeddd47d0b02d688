#pragma once

#include "quivar/equiv.hpp"
#include "quivar/oracle.hpp"
#include "quivar/quiver.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace quivar {

// Closed-form class bound M(n,d,m), implemented verbatim from the piecewise
// definition (for char 2 the middle branch can exceed the "otherwise" branch on some
// inputs; see effective_char2_bound).
long long m_formula(int n, int d, int m, Char chi);

// min of the two char-2 theorem bounds m(d-n-1)+2n and 2m(d-n)+m.
long long effective_char2_bound(int n, int d, int m);

// Nonemptiness of the class Q(n,d,m): n=m=1 (any d>=1), or n>=m>=2 and
// d >= n+l-delta(0,r) where n-1 = l(m-1)+r, l>=1, 0<=r<=m-2.
bool q_class_nonempty(int n, int d, int m);

// Exhaustive cross-check of the criterion (enumerates tail/head multisets).
bool q_class_nonempty_bruteforce(int n, int d, int m);

// Degree cap for words not equivalent to zero on this quiver.
long long upper_bound_for_quiver(const Quiver& q, Char chi);

struct GeneratorWitness {
  Word word;
  int k = 1;
  long long degree = 0;
};

struct DResult {
  long long value = 0;
  std::vector<GeneratorWitness> witnesses;
};

// D(Q): max degree of an indecomposable invariant. sigma_1 side via the engine
// (trace decomposability = word equivalence to zero); sigma_2 side over primitive
// cycles via the matrix oracle.
DResult compute_D(const Quiver& q, Char chi, const EngineConfig& ecfg = {}, const OracleConfig& ocfg = {});

// All labelled quivers on n vertices and d arrows, in assignment order.
void for_each_labelled_quiver(int n, int d, const std::function<void(const Quiver&)>& fn);

struct BoundReport {
  int n = 0, d = 0, m = 0;
  Char chi = Char::two;
  long long M_formula = 0;
  long long effective_bound = 0;
  bool class_nonempty = false;
  std::optional<long long> D_exact;
  int quivers_in_class = 0;
  std::vector<GeneratorWitness> witnesses;
  Quiver witness_quiver;
  bool theorem_holds = false;
};

BoundReport survey_class(int n, int d, int m, Char chi, const EngineConfig& ecfg = {},
                         const OracleConfig& ocfg = {});

nlohmann::json bound_report_json(const BoundReport& r);
std::string bound_report_csv_row(const BoundReport& r);

}  // namespace quivar
