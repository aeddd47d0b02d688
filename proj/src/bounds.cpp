#include "quivar/bounds.hpp"

#include "quivar/graph.hpp"
#include "quivar/util.hpp"

#include <algorithm>
#include <cmath>

namespace quivar {

long long m_formula(int n, int d, int m, Char chi) {
  if (n <= 0 || d <= 0 || m <= 0) throw BadInput("m_formula needs positive n, d, m");
  long long N = n, D = d, M = m;
  if (chi == Char::two) {
    if (d == n && n == m) return 2 * M;
    if (D < N + 2 * ((N - 1) / M) && n > m && m >= 2) return 2 * M * (D - N) + M;
    return M * (D - N - 1) + 2 * N;
  }
  if (n == m && (d == n || d == n + 1)) return 2 * N;
  return 3 * N;
}

long long effective_char2_bound(int n, int d, int m) {
  long long N = n, D = d, M = m;
  return std::min(M * (D - N - 1) + 2 * N, 2 * M * (D - N) + M);
}

bool q_class_nonempty(int n, int d, int m) {
  if (n <= 0 || d <= 0 || m <= 0) throw BadInput("q_class_nonempty needs positive n, d, m");
  if (n == 1 && m == 1) return true;  // any d >= 1: loops at one vertex
  if (n >= m && m >= 2) {
    int l = (n - 1) / (m - 1);
    int r = (n - 1) % (m - 1);
    return d >= n + l - (r == 0 ? 1 : 0);
  }
  return false;
}

void for_each_labelled_quiver(int n, int d, const std::function<void(const Quiver&)>& fn) {
  if (n <= 0 || d < 0) throw BadInput("bad quiver class parameters");
  Quiver q;
  for (int v = 0; v < n; ++v) q.vertices.push_back("v" + std::to_string(v + 1));
  for (int a = 0; a < d; ++a) q.arrows.push_back({"a" + std::to_string(a + 1), 0, 0});
  const long long pairs = static_cast<long long>(n) * n;
  std::vector<int> code(static_cast<std::size_t>(d), 0);
  while (true) {
    for (int a = 0; a < d; ++a) {
      q.arrows[static_cast<std::size_t>(a)].tail = code[static_cast<std::size_t>(a)] / n;
      q.arrows[static_cast<std::size_t>(a)].head = code[static_cast<std::size_t>(a)] % n;
    }
    q.finalize();
    fn(q);
    int pos = d - 1;
    while (pos >= 0) {
      if (++code[static_cast<std::size_t>(pos)] < pairs) break;
      code[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    check_interrupt();
  }
}

bool q_class_nonempty_bruteforce(int n, int d, int m) {
  // Labels do not matter for existence, so enumerate tail/head multisets.
  bool found = false;
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h) pairs.emplace_back(t, h);
  std::vector<int> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (found) return;
    if (left == 0) {
      Quiver q;
      for (int v = 0; v < n; ++v) q.vertices.push_back("v" + std::to_string(v + 1));
      for (std::size_t i = 0; i < pick.size(); ++i)
        q.arrows.push_back({"a" + std::to_string(i + 1), pairs[static_cast<std::size_t>(pick[i])].first,
                            pairs[static_cast<std::size_t>(pick[i])].second});
      q.finalize();
      if (is_strongly_connected(q) && max_primitive_degree(q) == m) found = true;
      return;
    }
    if (idx == pairs.size()) return;
    for (int take = left; take >= 0 && !found; --take) {
      for (int t = 0; t < take; ++t) pick.push_back(static_cast<int>(idx));
      rec(idx + 1, left - take);
      for (int t = 0; t < take; ++t) pick.pop_back();
    }
  };
  rec(0, d);
  return found;
}

long long upper_bound_for_quiver(const Quiver& q, Char chi) {
  if (!is_strongly_connected(q)) throw BadInput("upper bound needs a strongly connected quiver");
  int n = q.n(), d = q.d(), m = max_primitive_degree(q);
  if (chi == Char::two) return effective_char2_bound(n, d, m);
  return m_formula(n, d, m, Char::not_two);
}

namespace {

std::pair<int, Word> max_nonzero_word(const Quiver& q, Char chi, int cutoff, const EngineConfig& cfg) {
  auto words = enumerate_closed_words(q, cutoff);
  if (words.empty()) throw BadInput("quiver has no closed path");
  EquivMemo memo(q, chi, cfg);
  for (auto it = words.rbegin(); it != words.rend(); ++it) {
    check_interrupt();
    if (!memo.is_zero(*it)) return {static_cast<int>(it->size()), *it};
  }
  throw PropertyViolation("all closed words up to the cutoff vanish");
}

}  // namespace

DResult compute_D(const Quiver& q, Char chi, const EngineConfig& ecfg, const OracleConfig& ocfg) {
  if (!is_strongly_connected(q)) throw BadInput("compute_D needs a strongly connected quiver");
  long long cutoff = upper_bound_for_quiver(q, chi) + 2;  // slack so the cap is visible
  auto [mq, word] = max_nonzero_word(q, chi, static_cast<int>(cutoff), ecfg);

  DResult r;
  r.value = mq;
  r.witnesses.push_back({word, 1, mq});

  FieldChoice f = field_for(chi);
  for (const auto& cyc : enumerate_primitive_cycles(q)) {
    long long deg2 = 2 * static_cast<long long>(cyc.size());
    if (!decomposable(q, cyc, 2, f, ocfg)) {
      if (deg2 > r.value) {
        r.value = deg2;
        r.witnesses.clear();
        r.witnesses.push_back({cyc, 2, deg2});
      } else if (deg2 == r.value) {
        r.witnesses.push_back({cyc, 2, deg2});
      }
    }
  }
  return r;
}

BoundReport survey_class(int n, int d, int m, Char chi, const EngineConfig& ecfg, const OracleConfig& ocfg) {
  BoundReport rep;
  rep.n = n;
  rep.d = d;
  rep.m = m;
  rep.chi = chi;
  rep.class_nonempty = q_class_nonempty(n, d, m);
  rep.M_formula = m_formula(n, d, m, chi);
  rep.effective_bound = chi == Char::two ? effective_char2_bound(n, d, m) : rep.M_formula;
  if (!rep.class_nonempty) throw BadInput("Q(n,d,m) is empty for these parameters");

  double assignments = std::pow(static_cast<double>(n) * n, d);
  if (assignments > 70000.0) throw BadInput("survey_class: class too large for desk scale");

  std::vector<Quiver> members;
  for_each_labelled_quiver(n, d, [&](const Quiver& q) {
    if (is_strongly_connected(q) && max_primitive_degree(q) == m) members.push_back(q);
  });
  rep.quivers_in_class = static_cast<int>(members.size());
  if (members.empty()) throw BadInput("Q(n,d,m) is empty (enumeration found no member)");

  std::vector<DResult> results(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    check_interrupt();
    results[i] = compute_D(members[i], chi, ecfg, ocfg);
  });

  long long best = -1;
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].value > best) {
      best = results[i].value;
      best_idx = i;
    }
  }
  rep.D_exact = best;
  rep.witnesses = results[best_idx].witnesses;
  rep.witness_quiver = members[best_idx];

  bool holds = best <= rep.M_formula;
  if (chi == Char::two && best < rep.M_formula - m) holds = false;
  if (chi == Char::not_two) {
    long long l = (static_cast<long long>(n) - 1) / m;
    bool hyp = d >= n + 2 * l + m || n == m;
    if (hyp && best != rep.M_formula) holds = false;
  }
  rep.theorem_holds = holds;
  return rep;
}

nlohmann::json bound_report_json(const BoundReport& r) {
  nlohmann::json doc;
  doc["n"] = r.n;
  doc["d"] = r.d;
  doc["m"] = r.m;
  doc["char"] = char_str(r.chi);
  doc["M_formula"] = r.M_formula;
  doc["effective_bound"] = r.effective_bound;
  doc["class_nonempty"] = r.class_nonempty;
  doc["quivers_in_class"] = r.quivers_in_class;
  doc["D_exact"] = r.D_exact ? nlohmann::json(*r.D_exact) : nlohmann::json();
  doc["theorem_holds"] = r.theorem_holds;
  nlohmann::json wits = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    wits.push_back({{"word", word_to_json(r.witness_quiver, w.word)["word"]},
                    {"k", w.k},
                    {"degree", w.degree}});
  doc["witnesses"] = wits;
  doc["witness_quiver"] = r.witness_quiver.to_json();
  return doc;
}

std::string bound_report_csv_row(const BoundReport& r) {
  long long D = r.D_exact.value_or(-1);
  long long gap = r.M_formula - D;
  return std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.m) + "," +
         char_str(r.chi) + "," + std::to_string(r.M_formula) + "," + std::to_string(D) + "," +
         std::to_string(gap) + "," + (r.theorem_holds ? "true" : "false");
}

}  // namespace quivar
