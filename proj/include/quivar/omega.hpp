#pragma once

#include "quivar/equiv.hpp"
#include "quivar/graph.hpp"
#include "quivar/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivar {

enum class YesNoUnknown { yes, no, unknown };
std::string ynu_str(YesNoUnknown v);

struct OmegaMembership {
  bool in_omega0 = false;
  bool in_omega3 = false;
  bool in_omega2 = false;
  YesNoUnknown in_omega_equiv = YesNoUnknown::no;
  std::optional<Word> equiv_witness;        // a word with mdeg = delta and not == 0
  std::optional<Word> double_path_witness;  // some delta-double path, when one exists
  std::optional<Word> omega2_failure;       // a double path whose residual is not decomposable
};

// Membership of delta relative to the whole of Q (Omega_0 requires full support).
// Q must be strongly connected. Omega_equiv is decided by searching the finite class
// of words realizing delta; "unknown" only arises from engine caps.
OmegaMembership omega_membership(const Quiver& q, const Multidegree& delta, Char chi,
                                 const EngineConfig& cfg = {});

nlohmann::json omega_report_json(const Quiver& q, const Multidegree& delta, const OmegaMembership& m);

struct CompleteChain {
  std::vector<Word> paths;            // ordered, possibly empty
  Multidegree residual;               // theta = delta - 2 * sum mdeg(paths)
  std::vector<Component> decomposition;
};

// Validity per the chain definition; empty vector = valid. All conditions are
// machine-checkable: primitivity, delta-doubleness, the vertex-intersection pattern,
// residual positivity, decomposability with r >= 2, per-component Omega_2 membership,
// and the end-attachment condition when the chain has >= 2 paths.
std::vector<std::string> validate_complete_chain(const Quiver& q, const Multidegree& delta,
                                                 const CompleteChain& chain);

// Deterministic construction (smallest candidates first); requires delta in Omega_2 of
// its support. Exhausting the search space without a valid chain is a loud
// PropertyViolation: chain existence is a checked property, not an assumption.
CompleteChain build_complete_chain(const Quiver& q, const Multidegree& delta);

struct DeltaTreeNode {
  Multidegree delta;
  CompleteChain chain;
  int parent = -1;
  std::vector<int> children;
};
struct DeltaTree {
  std::vector<DeltaTreeNode> nodes;  // node 0 is the root
};

DeltaTree build_delta_tree(const Quiver& q, const Multidegree& delta);
std::vector<std::string> validate_delta_tree(const Quiver& q, const Multidegree& delta,
                                             const DeltaTree& tree);
nlohmann::json delta_tree_json(const Quiver& q, const DeltaTree& tree);

struct GoodSubpath {
  int position = 0;  // start offset in h
  Word segment;
};

struct GoodDecomposition {
  std::vector<int> null_component;                // I_0, subset of Ver(a)
  std::vector<std::vector<int>> good_components;  // I_1..I_r, each sorted
  std::vector<GoodSubpath> good_subpaths;
};

// Standing assumption: a primitive closed with deg(a) >= 2 and deg_{a_i}(h) = 2 for
// every arrow of a.
GoodDecomposition good_component_decomposition(const Quiver& q, const Word& a, const Word& h);

struct PathDecomposition {
  std::vector<Word> b_paths;  // r >= 1
  std::vector<Word> c_paths;  // t >= 0
  std::vector<int> x_arrows, y_arrows, z_arrows;
  int support_n = 0, support_d = 0;
};

// mdeg(h) = sum mdeg(b_i) + 2 sum mdeg(c_k) over pairwise different primitive cycles,
// with the distinguished-arrow constraints and r + t <= d - n + 1 on the support of h.
// Requires h not == 0 (char 2); failure to find one is a PropertyViolation.
PathDecomposition find_path_decomposition(const Quiver& q, const Word& h, bool check_nonzero = true);

}  // namespace quivar
