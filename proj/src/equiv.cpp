#include "quivar/equiv.hpp"

#include "quivar/graph.hpp"
#include "quivar/util.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace quivar {

Char parse_char(const std::string& s) {
  if (s == "2") return Char::two;
  if (s == "not2") return Char::not_two;
  throw BadInput("characteristic must be \"2\" or \"not2\", got: " + s);
}

std::string char_str(Char c) { return c == Char::two ? "2" : "not2"; }

std::string certificate_str(Certificate c) {
  switch (c) {
    case Certificate::rule3: return "rule3";
    case Certificate::rule4: return "rule4";
    case Certificate::sign: return "sign";
    case Certificate::omega2: return "omega2";
    case Certificate::none: break;
  }
  return "null";
}

std::string sign_reach_str(SignReach s) {
  switch (s) {
    case SignReach::plus: return "plus";
    case SignReach::minus: return "minus";
    case SignReach::both: return "both";
    case SignReach::unreachable: break;
  }
  return "unreachable";
}

namespace {

// Positions p with tail(w[p]) == v, grouped by vertex, ascending.
std::map<int, std::vector<int>> basepoints(const Quiver& q, const Word& w) {
  std::map<int, std::vector<int>> pos;
  for (std::size_t p = 0; p < w.size(); ++p)
    pos[q.arrows[static_cast<std::size_t>(w[p])].tail].push_back(static_cast<int>(p));
  return pos;
}

std::vector<Word> blocks_at(const Word& w, const std::vector<int>& ps) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(ps.size());
  std::vector<Word> blocks(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int from = ps[static_cast<std::size_t>(i)];
    int to = i + 1 < k ? ps[static_cast<std::size_t>(i + 1)] : n + ps[0];
    for (int t = from; t < to; ++t) blocks[static_cast<std::size_t>(i)].push_back(w[static_cast<std::size_t>(t % n)]);
  }
  return blocks;
}

bool is_square_word(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2 != 0) return false;
  for (std::size_t i = 0; i < n / 2; ++i)
    if (w[i] != w[i + n / 2]) return false;
  return true;
}

// Two disjoint cyclic runs of blocks with equal arrow content and a non-empty
// complement: that is an a1^2 a2 presentation after permuting them adjacent.
bool rule3_at(const std::vector<Word>& blocks) {
  const int k = static_cast<int>(blocks.size());
  if (k < 3) return false;
  auto run_content = [&](int i, int len) {
    Word c;
    for (int t = 0; t < len; ++t) {
      const Word& b = blocks[static_cast<std::size_t>((i + t) % k)];
      c.insert(c.end(), b.begin(), b.end());
    }
    return c;
  };
  for (int l1 = 1; l1 <= k - 2; ++l1) {
    for (int i = 0; i < k; ++i) {
      Word c1 = run_content(i, l1);
      for (int l2 = l1; l1 + l2 <= k - 1; ++l2) {
        for (int j = 0; j < k; ++j) {
          bool overlap = false;
          for (int t = 0; t < l2 && !overlap; ++t) {
            int idx = (j + t) % k;
            int rel = (idx - i + k) % k;
            overlap = rel < l1;
          }
          if (overlap) continue;
          if (run_content(j, l2) == c1) return true;
        }
      }
    }
  }
  return false;
}

struct Detector {
  bool fired = false;
  Certificate cert = Certificate::none;
};

Detector run_detectors(const Quiver& q, const Word& w, Char chi) {
  Detector d;
  auto pos = basepoints(q, w);
  if (chi == Char::two) {
    if (is_square_word(w)) return {true, Certificate::rule4};
  } else {
    for (const auto& [v, ps] : pos)
      if (ps.size() >= 4) return {true, Certificate::rule4};
  }
  for (const auto& [v, ps] : pos) {
    if (ps.size() >= 3 && rule3_at(blocks_at(w, ps))) return {true, Certificate::rule3};
  }
  return d;
}

void append_blocks(Word& out, const std::vector<Word>& blocks) {
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
}

// Adjacent transpositions of vertex factorizations with >= 3 factors (block level);
// merged-factor swaps are block permutations too, so these generate everything.
void neighbor_states(const Quiver& q, const Word& w, bool contextual, std::vector<Word>& out) {
  out.clear();
  for (const auto& [v, ps] : basepoints(q, w)) {
    const int k = static_cast<int>(ps.size());
    if (k < 3) continue;
    auto blocks = blocks_at(w, ps);
    for (int i = 0; i < k; ++i) {
      std::vector<Word> swapped = blocks;
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>((i + 1) % k)]);
      Word nw;
      nw.reserve(w.size());
      append_blocks(nw, swapped);
      out.push_back(canonicalize(q, nw));
    }
  }
  if (contextual) {
    const int n = static_cast<int>(w.size());
    for (int s = 0; s < n; ++s) {
      int v = q.arrows[static_cast<std::size_t>(w[static_cast<std::size_t>(s)])].tail;
      for (int len = 2; len < n; ++len) {
        int last = (s + len - 1) % n;
        if (q.arrows[static_cast<std::size_t>(w[static_cast<std::size_t>(last)])].head != v) continue;
        std::vector<int> cuts{0};
        for (int o = 1; o < len; ++o)
          if (q.arrows[static_cast<std::size_t>(w[static_cast<std::size_t>((s + o) % n)])].tail == v)
            cuts.push_back(o);
        if (cuts.size() < 2) continue;
        cuts.push_back(len);
        const int t = static_cast<int>(cuts.size()) - 1;
        for (int f = 0; f + 1 < t; ++f) {
          Word nw;
          nw.reserve(w.size());
          auto emit = [&](int from, int to) {
            for (int o = from; o < to; ++o) nw.push_back(w[static_cast<std::size_t>((s + o) % n)]);
          };
          for (int g = 0; g < t; ++g) {
            int g2 = g == f ? f + 1 : (g == f + 1 ? f : g);
            emit(cuts[static_cast<std::size_t>(g2)], cuts[static_cast<std::size_t>(g2) + 1]);
          }
          for (int o = len; o < n; ++o) nw.push_back(w[static_cast<std::size_t>((s + o) % n)]);
          out.push_back(canonicalize(q, nw));
        }
      }
    }
  }
}

struct ExploreResult {
  bool null_found = false;
  Certificate cert = Certificate::none;
  std::unordered_map<Word, std::uint8_t, WordHash> visited;  // word -> sign mask (bit0 +, bit1 -)
};

ExploreResult explore(const Quiver& q, const Word& start, Char chi, const EngineConfig& cfg,
                      bool stop_on_null) {
  ExploreResult R;
  std::deque<std::pair<Word, int>> queue;

  auto note_null = [&](Certificate c) {
    if (!R.null_found) {
      R.null_found = true;
      R.cert = c;
    }
  };

  auto push = [&](const Word& w, int sign) {
    std::uint8_t bit = chi == Char::two ? 1 : (sign > 0 ? 1 : 2);
    auto [it, fresh_word] = R.visited.try_emplace(w, 0);
    if (it->second & bit) return;
    it->second |= bit;
    if (chi == Char::not_two && it->second == 3) note_null(Certificate::sign);
    if (fresh_word) {
      if (R.visited.size() > cfg.max_states)
        throw Inconclusive("equivalence search exceeded max_states=" + std::to_string(cfg.max_states));
      Detector det = run_detectors(q, w, chi);
      if (det.fired) note_null(det.cert);
    }
    queue.emplace_back(w, sign);
  };

  push(canonicalize(q, start), +1);
  std::vector<Word> nbrs;
#ifndef NDEBUG
  Multidegree start_mdeg = mdeg(q, start);
#endif
  while (!queue.empty()) {
    if (stop_on_null && R.null_found) break;
    check_interrupt();
    auto [w, sign] = queue.front();
    queue.pop_front();
    neighbor_states(q, w, cfg.contextual, nbrs);
    for (const auto& nw : nbrs) {
#ifndef NDEBUG
      assert(mdeg(q, nw) == start_mdeg && "moves must conserve the multidegree");
#endif
      push(nw, -sign);
    }
  }
  return R;
}

}  // namespace

std::vector<Factorization> vertex_factorizations(const Quiver& q, const Word& w, int vertex) {
  require_closed_word(q, w);
  auto pos = basepoints(q, w);
  auto it = pos.find(vertex);
  if (it == pos.end() || it->second.size() < 2)
    throw BadInput("vertex occurs fewer than twice as a basepoint");
  auto blocks = blocks_at(w, it->second);
  const int k = static_cast<int>(blocks.size());
  std::vector<Factorization> out;
  // A factorization = a subset of the k cut positions of size >= 2.
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 2) continue;
    Factorization f;
    f.basepoint = vertex;
    int first = -1;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        first = i;
        break;
      }
    Word current;
    for (int t = 0; t < k; ++t) {
      int i = (first + t) % k;
      if (t > 0 && (mask & (1u << i))) {
        f.factors.push_back(current);
        current.clear();
      }
      current.insert(current.end(), blocks[static_cast<std::size_t>(i)].begin(),
                     blocks[static_cast<std::size_t>(i)].end());
    }
    f.factors.push_back(current);
    out.push_back(std::move(f));
  }
  return out;
}

bool support_in_omega2(const Quiver& q, const Multidegree& delta) {
  std::vector<int> amap;
  Quiver sup = support_quiver(q, delta, &amap);
  if (sup.d() == 0 || !is_strongly_connected(sup)) return false;
  Multidegree ds(sup.d());
  for (int i = 0; i < sup.d(); ++i) ds[i] = delta[amap[static_cast<std::size_t>(i)]];
  if (!closed_path_exists(sup, ds)) return false;  // Omega_0 of the support
  for (const auto& cyc : enumerate_primitive_cycles(sup)) {
    bool dbl = true;
    for (int a : cyc)
      if (ds[a] < 2) {
        dbl = false;
        break;
      }
    if (!dbl) continue;
    Multidegree resid = ds.minus(mdeg(sup, cyc).scaled(2));
    if (resid.is_zero()) return false;
    if (classify_multidegree(sup, resid).kind != VectorKind::decomposable) return false;
  }
  return true;
}

EquivResult equiv_zero(const Quiver& q, const Word& w, Char chi, const EngineConfig& cfg) {
  require_closed_word(q, w);
  if (chi == Char::two && cfg.omega2_filter && support_in_omega2(q, mdeg(q, w)))
    return {false, Certificate::omega2, 0};
  auto R = explore(q, w, chi, cfg, true);
  return {R.null_found, R.null_found ? R.cert : Certificate::none, R.visited.size()};
}

SignReach equivalent_sign(const Quiver& q, const Word& w1, const Word& w2, Char chi,
                          const EngineConfig& cfg) {
  require_closed_word(q, w1);
  require_closed_word(q, w2);
  if (!(mdeg(q, w1) == mdeg(q, w2))) return SignReach::unreachable;
  auto R = explore(q, w1, chi, cfg, false);
  auto it = R.visited.find(canonicalize(q, w2));
  if (it == R.visited.end()) return SignReach::unreachable;
  switch (it->second) {
    case 1: return SignReach::plus;
    case 2: return SignReach::minus;
    default: return SignReach::both;
  }
}

std::vector<Word> reachable_states(const Quiver& q, const Word& w, Char chi, const EngineConfig& cfg) {
  require_closed_word(q, w);
  auto R = explore(q, w, chi, cfg, false);
  std::vector<Word> out;
  out.reserve(R.visited.size());
  for (const auto& [word, mask] : R.visited) out.push_back(word);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(q, a, b); });
  return out;
}

EquivMemo::EquivMemo(const Quiver& q, Char chi, EngineConfig cfg) : q_(q), chi_(chi), cfg_(cfg) {}

bool EquivMemo::is_zero(const Word& w) {
  Word c = canonicalize(q_, w);
  if (auto it = known_.find(c); it != known_.end()) return it->second;
  if (chi_ == Char::two && cfg_.omega2_filter) {
    Multidegree m = mdeg(q_, c);
    auto [fit, fresh] = omega2_cache_.try_emplace(m.c, false);
    if (fresh) fit->second = support_in_omega2(q_, m);
    if (fit->second) {
      known_[c] = false;
      return false;
    }
  }
  auto R = explore(q_, c, chi_, cfg_, true);
  // Everything visited sits in c's component: one shared verdict (0 is absorbing).
  for (const auto& [word, mask] : R.visited) known_[word] = R.null_found;
  return R.null_found;
}

int max_nonzero_degree(const Quiver& q, Char chi, int cutoff, const EngineConfig& cfg) {
  if (cutoff < 1) throw BadInput("cutoff must be >= 1");
  auto words = enumerate_closed_words(q, cutoff);
  if (words.empty()) throw BadInput("quiver has no closed path");
  EquivMemo memo(q, chi, cfg);
  for (auto it = words.rbegin(); it != words.rend(); ++it) {
    check_interrupt();
    if (!memo.is_zero(*it)) return static_cast<int>(it->size());
  }
  throw PropertyViolation("every closed word up to the cutoff is equivalent to zero");
}

}  // namespace quivar
