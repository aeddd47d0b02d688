#pragma once

#include "quivar/quiver.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace quivar {

enum class Char { two, not_two };

Char parse_char(const std::string& s);  // "2" | "not2"
std::string char_str(Char c);

struct EngineConfig {
  std::size_t max_states = 2'000'000;  // BFS cap; exceeding it is Inconclusive, never "false"
  bool contextual = false;             // experimental: also rewrite inside proper closed subwords
  bool omega2_filter = true;           // char2 fast nonzero certificate
};

enum class Certificate { none, rule3, rule4, sign, omega2 };
std::string certificate_str(Certificate c);

struct EquivResult {
  bool equiv_zero = false;
  Certificate certificate = Certificate::none;
  std::size_t states_explored = 0;
};

struct Factorization {
  int basepoint = 0;
  std::vector<Word> factors;  // each factor closed at basepoint; concatenation rotates to the word
};

// All ways to cut a rotation of w at occurrences of v into >= 2 closed factors,
// including coarser groupings obtained by merging adjacent cuts.
std::vector<Factorization> vertex_factorizations(const Quiver& q, const Word& w, int vertex);

// Decide w == 0 under rules 1-4. Moves: adjacent factor transpositions of vertex
// factorizations with >= 3 factors (a transposition of two incident factors coincides
// with a rotation and is sign-neutral, so it generates nothing). Null detectors:
// rule 3 (two equal factors plus remainder), rule 4 (char2: the word is f.f;
// charNot2: four incident factors), and in charNot2 a word reached with both signs.
EquivResult equiv_zero(const Quiver& q, const Word& w, Char chi, const EngineConfig& cfg = {});

enum class SignReach { plus, minus, both, unreachable };
std::string sign_reach_str(SignReach s);

SignReach equivalent_sign(const Quiver& q, const Word& w1, const Word& w2, Char chi,
                          const EngineConfig& cfg = {});

// Full rotation/transposition closure of w (canonical forms).
std::vector<Word> reachable_states(const Quiver& q, const Word& w, Char chi,
                                   const EngineConfig& cfg = {});

// Shared-answer cache for sweeps: words in one reachability component share their verdict.
class EquivMemo {
 public:
  EquivMemo(const Quiver& q, Char chi, EngineConfig cfg = {});
  bool is_zero(const Word& w);

 private:
  const Quiver& q_;
  Char chi_;
  EngineConfig cfg_;
  std::unordered_map<Word, bool, WordHash> known_;
  std::map<std::vector<int>, bool> omega2_cache_;
};

// mdeg(w) lies in Omega_2 of its own support quiver (char-2 nonzero certificate).
bool support_in_omega2(const Quiver& q, const Multidegree& delta);

// Largest degree <= cutoff of a word with equiv_zero = false.
int max_nonzero_degree(const Quiver& q, Char chi, int cutoff, const EngineConfig& cfg = {});

}  // namespace quivar
