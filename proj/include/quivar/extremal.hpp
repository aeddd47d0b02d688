#pragma once

#include "quivar/equiv.hpp"
#include "quivar/oracle.hpp"
#include "quivar/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quivar {

enum class Family { loop_bouquet, cycle_parallel, rhombus_chain, rhombus_cycle, char_not2_family };

Family parse_family(const std::string& s);  // "a".."e" or long names
std::string family_str(Family f);

struct ExtremalParams {
  int n = 0, d = 0, m = 0, t = 0;  // family-specific; see build_extremal
};

struct ExtremalWitness {
  Family family = Family::loop_bouquet;
  Quiver quiver;
  std::optional<Word> word;          // word-type witness
  std::optional<Multidegree> delta;  // multidegree-type witness (families c, d)
  long long claimed_degree = 0;
  ExtremalParams params;
  Char chi = Char::two;                    // characteristic the family targets
  std::map<int, ConstMat> substitution;    // family e: constants for the reduction step
};

// (a) loop bouquet: params.d loops at one vertex, word a1...ad.
// (b) cycle with parallels: params.n = m, params.t parallels, word (a_i b)-product.
// (c) rhombus chain: params n, d, m with n > m >= 2, d >= n + 2*floor((n-1)/m);
//     multidegree witness of size m(d-n-1)+2n-(r+1).
// (d) small-d rhombus chain: multidegree witness of size 2m(2i+j+1); implemented for
//     m = 2 (the smallest admissible parameters); m >= 3 raises Inconclusive.
// (e) characteristic-not-2 family: word witness of degree M(n,d,m).
ExtremalWitness build_extremal(Family f, const ExtremalParams& p);

struct WitnessReport {
  bool ok = false;
  std::vector<std::string> checks;    // human-readable record of what was verified
  std::vector<std::string> failures;  // non-empty means a stated property failed
};

WitnessReport verify_witness(const ExtremalWitness& w, Char chi, const EngineConfig& ecfg = {},
                             const OracleConfig& ocfg = {});

nlohmann::json witness_json(const ExtremalWitness& w, const WitnessReport& r);

}  // namespace quivar
