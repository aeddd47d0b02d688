#include "quivar/acceptance.hpp"

#include "quivar/bounds.hpp"
#include "quivar/equiv.hpp"
#include "quivar/extremal.hpp"
#include "quivar/graph.hpp"
#include "quivar/omega.hpp"
#include "quivar/oracle.hpp"
#include "quivar/util.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

namespace quivar {

Quiver fixture_loops(int count) {
  Quiver q;
  q.vertices.push_back("v");
  for (int i = 1; i <= count; ++i) q.arrows.push_back({"x" + std::to_string(i), 0, 0});
  q.finalize();
  return q;
}

Quiver fixture_c2() {
  Quiver q;
  q.vertices = {"u", "v"};
  q.arrows.push_back({"a", 0, 1});
  q.arrows.push_back({"b", 1, 0});
  q.finalize();
  return q;
}

Quiver fixture_example31() {
  Quiver q;
  q.vertices = {"u", "v", "w"};
  q.arrows.push_back({"a", 1, 0});  // v -> u
  q.arrows.push_back({"x", 0, 1});  // u -> v
  q.arrows.push_back({"y", 1, 2});  // v -> w
  q.arrows.push_back({"b", 2, 1});  // w -> v
  q.arrows.push_back({"c", 0, 2});  // u -> w
  q.arrows.push_back({"z", 2, 0});  // w -> u
  q.finalize();
  return q;
}

static Word word_of(const Quiver& q, std::initializer_list<const char*> ids) {
  Word w;
  for (const char* id : ids) w.push_back(q.arrow_index(id));
  require_closed_word(q, w);
  return w;
}

Word fixture_h1(const Quiver& ex31) { return word_of(ex31, {"c", "z", "c", "z", "x", "y", "b", "a"}); }
Word fixture_h2(const Quiver& ex31) { return word_of(ex31, {"c", "z", "c", "b", "y", "z", "x", "a"}); }

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Quiver> sweep_quivers(int max_n, int max_d) {
  std::vector<Quiver> out;
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= max_d; ++d)
      for_each_labelled_quiver(n, d, [&](const Quiver& q) {
        if (is_strongly_connected(q)) out.push_back(q);
      });
  return out;
}

const std::vector<Quiver>& sweep() {
  static std::vector<Quiver> quivers = sweep_quivers(3, 4);
  return quivers;
}

// Full-support flow-balanced multidegrees with |delta| <= cap.
std::vector<Multidegree> balanced_multidegrees(const Quiver& q, int cap) {
  std::vector<Multidegree> out;
  Multidegree delta(q.d());
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == q.d()) {
      if (closed_path_exists(q, delta)) out.push_back(delta);
      return;
    }
    int need_rest = q.d() - idx - 1;
    for (int v = 1; v + need_rest <= left; ++v) {
      delta[idx] = v;
      rec(idx + 1, left - v);
    }
    delta[idx] = 0;
  };
  if (q.d() <= cap) rec(0, cap);
  return out;
}

struct OmegaSweepStats {
  long long deltas = 0;
  long long chain_violations = 0;  // criterion 4
  long long unknowns = 0;
  long long omega3_bound_violations = 0;  // criterion 5
  long long omega2_bound_violations = 0;
  bool done = false;
};

OmegaSweepStats& omega_sweep() {
  static OmegaSweepStats stats;
  if (stats.done) return stats;
  const auto& quivers = sweep();
  std::vector<OmegaSweepStats> per(quivers.size());
  parallel_for(quivers.size(), [&](std::size_t i) {
    const Quiver& q = quivers[i];
    OmegaSweepStats local;
    int m = max_primitive_degree(q);
    for (const auto& delta : balanced_multidegrees(q, 8)) {
      check_interrupt();
      auto mem = omega_membership(q, delta, Char::two);
      ++local.deltas;
      bool equiv_yes = mem.in_omega_equiv == YesNoUnknown::yes;
      bool equiv_no = mem.in_omega_equiv == YesNoUnknown::no;
      if (mem.in_omega_equiv == YesNoUnknown::unknown) ++local.unknowns;
      if (mem.in_omega3 && !mem.in_omega2) ++local.chain_violations;
      if (mem.in_omega2 && equiv_no) ++local.chain_violations;
      if (equiv_yes && !mem.in_omega0) ++local.chain_violations;
      if (mem.in_omega3 &&
          delta.total() > static_cast<long long>(m) * (q.d() - q.n() + 1))
        ++local.omega3_bound_violations;
      if (mem.in_omega2 &&
          delta.total() > static_cast<long long>(m) * (q.d() - q.n() - 1) + 2LL * q.n())
        ++local.omega2_bound_violations;
    }
    per[i] = local;
  });
  for (const auto& p : per) {
    stats.deltas += p.deltas;
    stats.chain_violations += p.chain_violations;
    stats.unknowns += p.unknowns;
    stats.omega3_bound_violations += p.omega3_bound_violations;
    stats.omega2_bound_violations += p.omega2_bound_violations;
  }
  stats.done = true;
  return stats;
}

CriterionResult criterion1() {
  CriterionResult r{1, "example 3.1 reproduction", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  Quiver q = fixture_example31();
  Word h1 = fixture_h1(q), h2 = fixture_h2(q);
  auto r1 = equiv_zero(q, h1, Char::two);
  auto r2 = equiv_zero(q, h2, Char::two);
  auto mem = omega_membership(q, mdeg(q, h2), Char::two);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  std::ostringstream det;
  det << "h1==0:" << (r1.equiv_zero ? "yes" : "no") << " (cert " << certificate_str(r1.certificate)
      << "), h2==0:" << (r2.equiv_zero ? "yes" : "no") << ", mdeg(h2): omega_equiv="
      << ynu_str(mem.in_omega_equiv) << " omega2=" << (mem.in_omega2 ? "yes" : "no") << ", "
      << secs << "s";
  r.detail = det.str();
  bool ok = r1.equiv_zero && !r2.equiv_zero && mem.in_omega_equiv == YesNoUnknown::yes &&
            !mem.in_omega2 && secs < 10.0;
  r.status = ok ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion2() {
  CriterionResult r{2, "oracle equivalence on fixtures", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  struct Fixture {
    Quiver q;
    int cutoff;
  };
  std::vector<Fixture> fixtures{{fixture_loops(1), 6}, {fixture_loops(2), 6}, {fixture_c2(), 6},
                                {fixture_example31(), 5}};
  long long words = 0, mismatches = 0;
  std::string first;
  for (const auto& fx : fixtures) {
    for (Char chi : {Char::two, Char::not_two}) {
      auto rows = cross_validate(fx.q, fx.cutoff, chi);
      words += static_cast<long long>(enumerate_closed_words(fx.q, fx.cutoff).size());
      mismatches += static_cast<long long>(rows.size());
      if (!rows.empty() && first.empty())
        first = word_str(fx.q, rows.front().word) + " (char " + char_str(chi) + ")";
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  std::ostringstream det;
  det << words << " necklace checks, " << mismatches << " mismatches";
  if (!first.empty()) det << ", first: " << first;
  det << ", " << secs << "s";
  r.detail = det.str();
  r.status = (mismatches == 0 && secs < 600.0) ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion3() {
  CriterionResult r{3, "theorem bound sweep", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  const auto& quivers = sweep();
  std::vector<int> bad(quivers.size(), 0);
  parallel_for(quivers.size(), [&](std::size_t i) {
    const Quiver& q = quivers[i];
    for (Char chi : {Char::two, Char::not_two}) {
      long long bound = upper_bound_for_quiver(q, chi);
      int mq = max_nonzero_degree(q, chi, static_cast<int>(bound) + 2);
      if (mq > bound) bad[i] = 1;
    }
  });
  long long violations = std::count(bad.begin(), bad.end(), 1);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = std::to_string(quivers.size()) + " strongly connected quivers, " +
             std::to_string(violations) + " violations, " + std::to_string(secs) + "s";
  r.status = violations == 0 ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion4() {
  CriterionResult r{4, "omega inclusion chain", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  const auto& stats = omega_sweep();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = std::to_string(stats.deltas) + " multidegrees, " + std::to_string(stats.chain_violations) +
             " chain violations, " + std::to_string(stats.unknowns) + " unknown, " +
             std::to_string(secs) + "s";
  r.status = stats.chain_violations == 0 ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion5() {
  CriterionResult r{5, "omega size bounds", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  const auto& stats = omega_sweep();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = std::to_string(stats.omega3_bound_violations) + " omega3 violations, " +
             std::to_string(stats.omega2_bound_violations) + " omega2 violations, " +
             std::to_string(secs) + "s";
  r.status = (stats.omega3_bound_violations == 0 && stats.omega2_bound_violations == 0)
                 ? CriterionStatus::pass
                 : CriterionStatus::fail;
  return r;
}

CriterionResult criterion6() {
  CriterionResult r{6, "path decomposition of nonzero words", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  const auto& quivers = sweep();
  std::vector<long long> checked(quivers.size(), 0);
  std::vector<int> bad(quivers.size(), 0);
  parallel_for(quivers.size(), [&](std::size_t i) {
    const Quiver& q = quivers[i];
    EquivMemo memo(q, Char::two);
    for (const auto& w : enumerate_closed_words(q, 6)) {
      check_interrupt();
      if (memo.is_zero(w)) continue;
      ++checked[i];
      try {
        auto dec = find_path_decomposition(q, w, false);
        int rr = static_cast<int>(dec.b_paths.size());
        int tt = static_cast<int>(dec.c_paths.size());
        if (rr < 1 || rr + tt > dec.support_d - dec.support_n + 1 || rr + tt > q.d() - q.n() + 1)
          bad[i] = 1;
      } catch (const PropertyViolation&) {
        bad[i] = 1;
      }
    }
  });
  long long total = 0, violations = 0;
  for (std::size_t i = 0; i < quivers.size(); ++i) {
    total += checked[i];
    violations += bad[i];
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = std::to_string(total) + " nonzero words decomposed, " + std::to_string(violations) +
             " failures, " + std::to_string(secs) + "s";
  r.status = violations == 0 ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion7() {
  CriterionResult r{7, "extremal witness families", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  std::vector<std::string> failures;
  bool inconclusive = false;
  int verified = 0;
  auto run = [&](Family f, ExtremalParams p, Char chi, const std::string& label) {
    try {
      auto w = build_extremal(f, p);
      auto rep = verify_witness(w, chi);
      if (rep.ok)
        ++verified;
      else
        failures.push_back(label + ": " + (rep.failures.empty() ? "?" : rep.failures.front()));
    } catch (const Inconclusive& e) {
      inconclusive = true;
      failures.push_back(label + " [inconclusive]: " + e.what());
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  };
  for (int d = 1; d <= 5; ++d) run(Family::loop_bouquet, {1, d, 1, 0}, Char::two, "a(d=" + std::to_string(d) + ")");
  for (int n = 2; n <= 3; ++n)
    for (int t = 1; t <= 3; ++t)
      run(Family::cycle_parallel, {n, 0, n, t}, Char::two,
          "b(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")");
  run(Family::rhombus_chain, {3, 5, 2, 0}, Char::two, "c(3,5,2)");
  run(Family::rhombus_chain, {4, 6, 3, 0}, Char::two, "c(4,6,3)");
  run(Family::rhombus_chain, {5, 9, 2, 0}, Char::two, "c(5,9,2)");
  run(Family::rhombus_cycle, {5, 8, 2, 0}, Char::two, "d(5,8,2)");
  run(Family::char_not2_family, {4, 8, 2, 0}, Char::not_two, "e(4,2,d=8)");
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  std::ostringstream det;
  if (failures.empty())
    det << verified << " witnesses verified";
  else {
    det << failures.size() << " failures: " << failures.front();
  }
  det << ", " << secs << "s";
  r.detail = det.str();
  if (failures.empty())
    r.status = CriterionStatus::pass;
  else
    r.status = inconclusive && failures.size() == 1 ? CriterionStatus::inconclusive : CriterionStatus::fail;
  return r;
}

CriterionResult criterion8() {
  CriterionResult r{8, "formula fidelity", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  auto expect = [&](long long got, long long want, const std::string& label) {
    if (got != want) bad.push_back(label + ": got " + std::to_string(got) + " want " + std::to_string(want));
  };
  expect(m_formula(2, 2, 2, Char::two), 4, "M(2,2,2,char2)");
  expect(m_formula(7, 9, 3, Char::two), 15, "M(7,9,3,char2)");
  expect(m_formula(3, 6, 3, Char::two), 12, "M(3,6,3,char2)");
  expect(m_formula(2, 3, 2, Char::not_two), 4, "M(2,3,2,not2)");
  expect(m_formula(1, 5, 1, Char::not_two), 3, "M(1,5,1,not2)");
  long long checked = 0;
  for (int n = 1; n <= 4 && bad.empty(); ++n)
    for (int m = 1; m <= 4; ++m)
      for (int d = 1; d <= 6; ++d) {
        ++checked;
        bool formula = q_class_nonempty(n, d, m);
        bool brute = q_class_nonempty_bruteforce(n, d, m);
        if (formula != brute) {
          bad.push_back("nonemptiness(" + std::to_string(n) + "," + std::to_string(d) + "," +
                        std::to_string(m) + "): formula " + (formula ? "true" : "false") +
                        " brute " + (brute ? "true" : "false"));
          break;
        }
      }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = bad.empty() ? "5 formula points + " + std::to_string(checked) + " class points, " +
                               std::to_string(secs) + "s"
                         : bad.front();
  r.status = bad.empty() ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

CriterionResult criterion9() {
  CriterionResult r{9, "desk-scale D via survey", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  auto check = [&](int n, int d, int m, Char chi, long long wantD) {
    auto rep = survey_class(n, d, m, chi);
    if (!rep.D_exact || *rep.D_exact != wantD || rep.M_formula != wantD || !rep.theorem_holds ||
        rep.witnesses.empty())
      bad.push_back("survey(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(m) +
                    "," + char_str(chi) + "): D=" + std::to_string(rep.D_exact.value_or(-1)) +
                    " M=" + std::to_string(rep.M_formula));
  };
  check(1, 1, 1, Char::two, 2);
  check(1, 2, 1, Char::not_two, 2);
  check(2, 2, 2, Char::two, 4);
  check(2, 2, 2, Char::not_two, 4);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  r.detail = bad.empty() ? "4 classes surveyed, " + std::to_string(secs) + "s" : bad.front();
  r.status = (bad.empty() && secs < 300.0) ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

// Rewriting-reachability properties over the sweep (char 2).
struct PropertyStats {
  long long rotation_checks = 0, conservation_checks = 0;
  long long l0_checks = 0, aaa_checks = 0, l4_checks = 0;
  long long violations = 0;
  std::string first;
};

bool contiguous_family_run(const Word& w, const std::set<int>& fam) {
  int n = static_cast<int>(w.size());
  int k = 0;
  for (int a : w) k += fam.count(a) ? 1 : 0;
  if (k == 0 || k == n) return true;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = fam.count(w[static_cast<std::size_t>((s + i) % n)]) > 0;
    for (int i = k; i < n && ok; ++i) ok = fam.count(w[static_cast<std::size_t>((s + i) % n)]) == 0;
    if (ok) return true;
  }
  return false;
}

bool contains_contiguous(const Word& w, const Word& pat) {
  int n = static_cast<int>(w.size()), k = static_cast<int>(pat.size());
  if (k > n) return false;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = w[static_cast<std::size_t>((s + i) % n)] == pat[static_cast<std::size_t>(i)];
    if (ok) return true;
  }
  return false;
}

int count_disjoint_cyclic_occurrences(const Word& w, const Word& pat) {
  int n = static_cast<int>(w.size()), k = static_cast<int>(pat.size());
  std::vector<int> hits;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = w[static_cast<std::size_t>((s + i) % n)] == pat[static_cast<std::size_t>(i)];
    if (ok) hits.push_back(s);
  }
  // greedy packing of non-overlapping occurrences on the circle
  int best = 0;
  for (int h0 : hits) {
    int cnt = 1, last_end = h0 + k;
    for (int h : hits)
      if (h >= last_end && h + k <= h0 + n) {
        ++cnt;
        last_end = h + k;
      }
    best = std::max(best, cnt);
  }
  return best;
}

void property_check_quiver(const Quiver& q, PropertyStats& st) {
  std::map<int, std::set<int>> loops_at;  // vertex -> loop arrows
  for (int a = 0; a < q.d(); ++a)
    if (q.arrows[static_cast<std::size_t>(a)].tail == q.arrows[static_cast<std::size_t>(a)].head)
      loops_at[q.arrows[static_cast<std::size_t>(a)].tail].insert(a);
  auto cycles = enumerate_primitive_cycles(q);

  std::map<Word, std::shared_ptr<std::vector<Word>>> component_of;
  auto component = [&](const Word& w) {
    Word c = canonicalize(q, w);
    auto it = component_of.find(c);
    if (it != component_of.end()) return it->second;
    auto states = std::make_shared<std::vector<Word>>(reachable_states(q, c, Char::two));
    for (const auto& s : *states) component_of[s] = states;
    return states;
  };

  auto note_violation = [&](const std::string& what, const Word& w) {
    ++st.violations;
    if (st.first.empty()) st.first = what + " at " + word_str(q, w);
  };

  for (const auto& w : enumerate_closed_words(q, 6)) {
    check_interrupt();
    auto comp = component(w);

    // conservation: every reachable state preserves the multidegree
    ++st.conservation_checks;
    Multidegree base = mdeg(q, w);
    for (const auto& s : *comp)
      if (!(mdeg(q, s) == base)) note_violation("multidegree conservation", w);

    // rotation invariance of equiv_zero
    ++st.rotation_checks;
    auto base_res = equiv_zero(q, w, Char::two);
    Word rot = w;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (equiv_zero(q, rot, Char::two).equiv_zero != base_res.equiv_zero)
      note_violation("rotation invariance", w);

    // L0: loops at v can be gathered into one run
    for (const auto& [v, fam] : loops_at) {
      int degp = 0;
      for (int a : w) degp += fam.count(a) ? 1 : 0;
      if (degp == 0) continue;
      ++st.l0_checks;
      bool found = false;
      for (const auto& s : *comp)
        if (contiguous_family_run(s, fam)) {
          found = true;
          break;
        }
      if (!found) note_violation("loop-gathering reachability", w);
    }

    // aaa: a path of distinct arrows, each of multiplicity >= 2 in w, plus a spare
    // arrow, can be made contiguous
    auto arrows_in_w = word_arrows(w);
    std::function<void(Word&)> try_paths = [&](Word& path) {
      if (!path.empty()) {
        bool spare = false;
        std::set<int> on_path(path.begin(), path.end());
        for (int b : arrows_in_w)
          if (!on_path.count(b)) {
            spare = true;
            break;
          }
        if (spare) {
          ++st.aaa_checks;
          bool found = false;
          for (const auto& s : *comp)
            if (contains_contiguous(s, path)) {
              found = true;
              break;
            }
          if (!found) note_violation("path-gathering reachability", w);
        }
      }
      if (path.size() >= 3) return;
      for (int a : arrows_in_w) {
        if (deg_arrow(w, a) < 2) continue;
        if (std::find(path.begin(), path.end(), a) != path.end()) continue;
        if (!path.empty() &&
            q.arrows[static_cast<std::size_t>(path.back())].head != q.arrows[static_cast<std::size_t>(a)].tail)
          continue;
        path.push_back(a);
        try_paths(path);
        path.pop_back();
      }
    };
    Word path;
    try_paths(path);

    // L4: a primitive cycle a (s >= 2, all multiplicities >= 2) with a bridging arrow b
    // forces two separated a1 a2 runs
    for (const auto& cyc : cycles) {
      if (cyc.size() < 2) continue;
      bool all2 = true;
      for (int a : cyc)
        if (deg_arrow(w, a) < 2) {
          all2 = false;
          break;
        }
      if (!all2) continue;
      std::set<int> arr_a(cyc.begin(), cyc.end());
      const int s = static_cast<int>(cyc.size());
      for (int rotoff = 0; rotoff < s; ++rotoff) {
        // labeled a_1..a_s with v_i = tail(a_i)
        auto arrow_at = [&](int i) { return cyc[static_cast<std::size_t>((rotoff + i) % s)]; };
        int v2 = q.arrows[static_cast<std::size_t>(arrow_at(1))].tail;
        bool applies = false;
        for (int b : arrows_in_w) {
          if (arr_a.count(b)) continue;
          const auto& arr = q.arrows[static_cast<std::size_t>(b)];
          if (arr.tail == arr.head) continue;
          for (int k = 0; k < s; ++k) {
            if (k == 1) continue;  // k in {1,3,...,s} in 1-based terms, i.e. not v_2 itself
            int vk = q.arrows[static_cast<std::size_t>(arrow_at(k))].tail;
            std::set<int> ends{arr.tail, arr.head};
            if (ends == std::set<int>{v2, vk}) {
              applies = true;
              break;
            }
          }
          if (applies) break;
        }
        if (!applies) continue;
        ++st.l4_checks;
        Word pat{arrow_at(0), arrow_at(1)};
        bool found = false;
        for (const auto& state : *comp)
          if (count_disjoint_cyclic_occurrences(state, pat) >= 2) {
            found = true;
            break;
          }
        if (!found) note_violation("double-run reachability", w);
      }
    }
  }
}

CriterionResult criterion10() {
  CriterionResult r{10, "engine property suite", CriterionStatus::fail, "", 0};
  auto t0 = Clock::now();
  const auto& quivers = sweep();
  std::vector<PropertyStats> per(quivers.size());
  parallel_for(quivers.size(), [&](std::size_t i) { property_check_quiver(quivers[i], per[i]); });
  PropertyStats total;
  for (const auto& p : per) {
    total.rotation_checks += p.rotation_checks;
    total.conservation_checks += p.conservation_checks;
    total.l0_checks += p.l0_checks;
    total.aaa_checks += p.aaa_checks;
    total.l4_checks += p.l4_checks;
    total.violations += p.violations;
    if (total.first.empty()) total.first = p.first;
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.seconds = secs;
  std::ostringstream det;
  det << total.rotation_checks << " rotation, " << total.conservation_checks << " conservation, "
      << total.l0_checks << " loop-run, " << total.aaa_checks << " path-run, " << total.l4_checks
      << " double-run checks, " << total.violations << " violations";
  if (!total.first.empty()) det << " (first: " << total.first << ")";
  det << ", " << secs << "s";
  r.detail = det.str();
  r.status = total.violations == 0 ? CriterionStatus::pass : CriterionStatus::fail;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
  std::vector<std::function<CriterionResult()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<CriterionResult> results;
  for (auto& c : criteria) {
    CriterionResult r;
    try {
      r = c();
    } catch (const Inconclusive& e) {
      r.status = CriterionStatus::inconclusive;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.status = CriterionStatus::fail;
      r.detail = e.what();
    }
    if (r.id == 0 && !results.empty()) r.id = results.back().id + 1;
    if (r.id == 0) r.id = 1;
    const char* tag = r.status == CriterionStatus::pass
                          ? "PASS"
                          : (r.status == CriterionStatus::fail ? "FAIL" : "INCONCLUSIVE");
    out << tag << " criterion " << r.id << (r.name.empty() ? "" : " (" + r.name + ")") << ": "
        << r.detail << "\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

int acceptance_exit_code(const std::vector<CriterionResult>& results) {
  bool any_fail = false, any_inc = false;
  for (const auto& r : results) {
    any_fail |= r.status == CriterionStatus::fail;
    any_inc |= r.status == CriterionStatus::inconclusive;
  }
  if (any_fail) return 1;
  if (any_inc) return 3;
  return 0;
}

}  // namespace quivar
