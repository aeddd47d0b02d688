#include "quivar/extremal.hpp"

#include "quivar/bounds.hpp"
#include "quivar/graph.hpp"
#include "quivar/util.hpp"

#include <algorithm>

namespace quivar {

Family parse_family(const std::string& s) {
  if (s == "a" || s == "loop_bouquet") return Family::loop_bouquet;
  if (s == "b" || s == "cycle_parallel") return Family::cycle_parallel;
  if (s == "c" || s == "rhombus_chain") return Family::rhombus_chain;
  if (s == "d" || s == "rhombus_cycle") return Family::rhombus_cycle;
  if (s == "e" || s == "char_not2_family") return Family::char_not2_family;
  throw BadInput("unknown witness family: " + s);
}

std::string family_str(Family f) {
  switch (f) {
    case Family::loop_bouquet: return "loop_bouquet";
    case Family::cycle_parallel: return "cycle_parallel";
    case Family::rhombus_chain: return "rhombus_chain";
    case Family::rhombus_cycle: return "rhombus_cycle";
    case Family::char_not2_family: break;
  }
  return "char_not2_family";
}

namespace {

Quiver bouquet(int d) {
  Quiver q;
  q.vertices.push_back("v");
  for (int i = 1; i <= d; ++i) q.arrows.push_back({"a" + std::to_string(i), 0, 0});
  q.finalize();
  return q;
}

// n-cycle closed by t parallel arrows a_1..a_t from v1 to v2, chain b_1..b_{n-1} back.
Quiver cycle_with_parallels(int n, int t) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back("v" + std::to_string(v));
  for (int i = 1; i <= t; ++i) q.arrows.push_back({"a" + std::to_string(i), 0, n == 1 ? 0 : 1});
  for (int j = 1; j <= n - 1; ++j) q.arrows.push_back({"b" + std::to_string(j), j % n, (j + 1) % n});
  q.finalize();
  return q;
}

ExtremalWitness build_a(const ExtremalParams& p) {
  if (p.d < 1) throw BadInput("family a needs d >= 1");
  ExtremalWitness w;
  w.family = Family::loop_bouquet;
  w.params = p;
  w.params.n = 1;
  w.params.m = 1;
  w.quiver = bouquet(p.d);
  Word h;
  for (int i = 0; i < p.d; ++i) h.push_back(i);
  w.word = h;
  w.claimed_degree = p.d;
  w.chi = Char::two;
  return w;
}

ExtremalWitness build_b(const ExtremalParams& p) {
  if (p.n < 2 || p.t < 1) throw BadInput("family b needs n = m >= 2 and t >= 1");
  ExtremalWitness w;
  w.family = Family::cycle_parallel;
  w.params = p;
  w.params.m = p.n;
  w.params.d = p.n - 1 + p.t;
  w.quiver = cycle_with_parallels(p.n, p.t);
  Word h;
  for (int i = 0; i < p.t; ++i) {
    h.push_back(i);  // a_{i+1}
    for (int j = 0; j < p.n - 1; ++j) h.push_back(p.t + j);
  }
  w.word = h;
  w.claimed_degree = static_cast<long long>(p.t) * p.n;
  w.chi = Char::two;
  return w;
}

// Family (c): a chain of cycles K_1 (with the t-parallel bundle), K_2..K_l, and the
// (r+1)-cycle K_{l+1}, joined by bridge cycles of length exactly m whose bridge arrows
// carry 2 and whose arcs bump the underlying cycle arrows by 2.
struct RhombusChain {
  Quiver q;
  Multidegree delta;
};

RhombusChain build_rhombus_chain(int n, int d, int m, int arc_in_next) {
  const int l = (n - 1) / m;
  const int r = (n - 1) % m;
  const int t = d - n - 2 * l + 1;
  const int a = arc_in_next;       // kappa arc length inside the entered cycle
  const int beta = m - 2 - a;      // arc length inside the exited cycle
  if (a < 0 || beta < 0 || a > r) throw BadInput("rhombus chain: bad arc split");

  Quiver q;
  Multidegree delta;
  std::vector<std::vector<int>> cyc_verts(static_cast<std::size_t>(l + 2));  // 1-based cycles
  auto add_vertex = [&](const std::string& name) {
    q.vertices.push_back(name);
    return static_cast<int>(q.vertices.size()) - 1;
  };
  std::vector<int> arrow_delta;
  auto add_arrow = [&](const std::string& id, int tail, int head, int dv) {
    q.arrows.push_back({id, tail, head});
    arrow_delta.push_back(dv);
    return static_cast<int>(q.arrows.size()) - 1;
  };

  // K_1: chain u_1..u_m plus t bundle arrows u_m -> u_1
  for (int j = 1; j <= m; ++j) cyc_verts[1].push_back(add_vertex("u" + std::to_string(j)));
  for (int j = 1; j <= m - 1; ++j) {
    int bump = (j >= m - beta) ? 2 : 0;  // kappa_1 exit arc: the last beta chain arrows
    add_arrow("c" + std::to_string(j), cyc_verts[1][static_cast<std::size_t>(j - 1)],
              cyc_verts[1][static_cast<std::size_t>(j)], t + bump);
  }
  for (int k = 1; k <= t; ++k)
    add_arrow("p" + std::to_string(k), cyc_verts[1][static_cast<std::size_t>(m - 1)], cyc_verts[1][0], 1);

  // middle cycles K_2..K_l at base 2
  for (int i = 2; i <= l; ++i) {
    for (int j = 1; j <= m; ++j)
      cyc_verts[static_cast<std::size_t>(i)].push_back(
          add_vertex("w" + std::to_string(i) + "_" + std::to_string(j)));
    for (int j = 1; j <= m; ++j) {
      int tail = cyc_verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      int head = cyc_verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j % m)];
      int bump = 0;
      if (j <= a) bump += 2;                      // entry arc of kappa_{i-1}
      if (j >= a + 2 && j <= m - 1) bump += 2;    // exit arc of kappa_i
      add_arrow("q" + std::to_string(i) + "_" + std::to_string(j), tail, head, 2 + bump);
    }
  }

  // right cycle K_{l+1} with r+1 arrows at base 1
  for (int j = 0; j <= r; ++j)
    cyc_verts[static_cast<std::size_t>(l + 1)].push_back(add_vertex("z" + std::to_string(j)));
  for (int j = 0; j <= r; ++j) {
    int tail = cyc_verts[static_cast<std::size_t>(l + 1)][static_cast<std::size_t>(j)];
    int head = cyc_verts[static_cast<std::size_t>(l + 1)][static_cast<std::size_t>((j + 1) % (r + 1))];
    int bump = (j < a) ? 2 : 0;  // entry arc of kappa_l: z_0 -> ... -> z_a
    add_arrow("s" + std::to_string(j), tail, head, 1 + bump);
  }

  // bridges kappa_i between K_i and K_{i+1}
  for (int i = 1; i <= l; ++i) {
    const auto& from = cyc_verts[static_cast<std::size_t>(i)];
    const auto& to = cyc_verts[static_cast<std::size_t>(i + 1)];
    int exit_vertex = from.back();                       // u_m or w_i_m
    int entry_vertex = to.front();                       // w_{i+1}_1 or z_0
    int return_from = to[static_cast<std::size_t>(a)];   // end of the entry arc
    int return_to = i == 1 ? cyc_verts[1][static_cast<std::size_t>(m - 1 - beta)]
                           : from[static_cast<std::size_t>(a + 1)];  // start of the exit arc
    if (beta == 0) return_to = exit_vertex;
    add_arrow("x" + std::to_string(i), exit_vertex, entry_vertex, 2);
    add_arrow("y" + std::to_string(i), return_from, return_to, 2);
  }

  q.finalize();
  RhombusChain rc;
  rc.q = q;
  rc.delta = Multidegree(q.d());
  for (int i = 0; i < q.d(); ++i) rc.delta[i] = arrow_delta[static_cast<std::size_t>(i)];
  return rc;
}

ExtremalWitness build_c(const ExtremalParams& p) {
  const int n = p.n, d = p.d, m = p.m;
  if (!(n > m && m >= 2)) throw BadInput("family c needs n > m >= 2");
  const int l = (n - 1) / m;
  const int r = (n - 1) % m;
  if (l < 1) throw BadInput("family c needs floor((n-1)/m) >= 1");
  if (d < n + 2 * l) throw BadInput("family c needs d >= n + 2*floor((n-1)/m)");

  const long long target = static_cast<long long>(m) * (d - n - 1) + 2LL * n - (r + 1);
  ExtremalWitness w;
  w.family = Family::rhombus_chain;
  w.params = p;
  w.claimed_degree = target;
  w.chi = Char::two;

  // Standard arc split first, then a bounded search over the split parameter.
  std::vector<int> candidates;
  int preferred = std::min(r, m - 2);
  candidates.push_back(preferred);
  for (int a = std::min(r, m - 2); a >= 0; --a)
    if (a != preferred) candidates.push_back(a);
  for (int a : candidates) {
    RhombusChain rc;
    try {
      rc = build_rhombus_chain(n, d, m, a);
    } catch (const BadInput&) {
      continue;
    }
    if (rc.q.n() != n || rc.q.d() != d) continue;
    if (!is_strongly_connected(rc.q) || max_primitive_degree(rc.q) != m) continue;
    if (rc.delta.total() != target) continue;
    if (!support_in_omega2(rc.q, rc.delta)) continue;
    w.quiver = rc.q;
    w.delta = rc.delta;
    return w;
  }
  throw Inconclusive(
      "family c: no validated construction at these parameters (open figure interpretation)");
}

ExtremalWitness build_d(const ExtremalParams& p) {
  const int n = p.n, d = p.d, m = p.m;
  if (!(n > m && m >= 2)) throw BadInput("family d needs n > m >= 2");
  const int l = (n - 1) / m;
  if (d >= n + 2 * l) throw BadInput("family d needs d < n + 2*floor((n-1)/m)");
  // Solve n = m(i+j+2)-j-t, d-n = 2i+j+1 with i,j >= 0 and 1 <= t < m.
  int si = -1, sj = -1, st = -1;
  for (int i = 0;; ++i) {
    int j = d - n - 1 - 2 * i;
    if (j < 0) break;
    int t = m * (i + j + 2) - j - n;
    if (t >= 1 && t < m) {
      si = i;
      sj = j;
      st = t;
      break;
    }
  }
  if (si < 0) throw BadInput("family d: no (i, j, t) solves the parameter equations");
  const long long target = 2LL * m * (2 * si + sj + 1);

  ExtremalWitness w;
  w.family = Family::rhombus_cycle;
  w.params = p;
  w.params.t = st;
  w.claimed_degree = target;
  w.chi = Char::two;

  if (m != 2)
    throw Inconclusive("family d: validated construction known for m = 2 only (open figure interpretation)");

  // Chain of c doubled 2-cycles with a plain 2-cycle hung on each end.
  const int c = 2 * si + sj;
  Quiver q;
  for (int v = 0; v <= c; ++v) q.vertices.push_back("u" + std::to_string(v));
  q.vertices.push_back("P");
  q.vertices.push_back("R");
  Multidegree delta;
  std::vector<int> dv;
  for (int k = 1; k <= c; ++k) {
    q.arrows.push_back({"f" + std::to_string(k), k - 1, k});
    dv.push_back(2);
    q.arrows.push_back({"g" + std::to_string(k), k, k - 1});
    dv.push_back(2);
  }
  int P = c + 1, R = c + 2;
  q.arrows.push_back({"pL", P, 0});
  dv.push_back(1);
  q.arrows.push_back({"pR", 0, P});
  dv.push_back(1);
  q.arrows.push_back({"rL", c, R});
  dv.push_back(1);
  q.arrows.push_back({"rR", R, c});
  dv.push_back(1);
  q.finalize();
  delta = Multidegree(q.d());
  for (int i = 0; i < q.d(); ++i) delta[i] = dv[static_cast<std::size_t>(i)];

  if (q.n() != n || q.d() != d || !is_strongly_connected(q) || max_primitive_degree(q) != m ||
      delta.total() != target || !support_in_omega2(q, delta))
    throw Inconclusive("family d: construction failed validation (open figure interpretation)");
  w.quiver = q;
  w.delta = delta;
  return w;
}

ExtremalWitness build_e(const ExtremalParams& p) {
  const int n = p.n, d = p.d, m = p.m;
  ExtremalWitness w;
  w.family = Family::char_not2_family;
  w.params = p;
  w.chi = Char::not_two;

  if (m == 1) {
    if (n != 1) throw BadInput("family e with m = 1 needs n = 1");
    w.quiver = bouquet(d);
    if (d >= 3) {
      w.word = Word{0, 1, 2};
      w.claimed_degree = 3;
    } else {
      w.word = Word{0, 0};
      w.claimed_degree = 2;
    }
    return w;
  }
  if (n == m) {
    int t = d - n + 1;
    if (t < 1) throw BadInput("family e with n = m needs d >= n");
    w.quiver = cycle_with_parallels(n, t);
    Word b;
    for (int j = 0; j < n - 1; ++j) b.push_back(t + j);
    Word h;
    if (d <= n + 1) {
      for (int rep = 0; rep < 2; ++rep) {
        h.push_back(0);
        h.insert(h.end(), b.begin(), b.end());
      }
      w.claimed_degree = 2LL * n;
    } else {
      if (t < 3) throw BadInput("family e with n = m, d > n+1 needs t >= 3");
      for (int i = 0; i < 3; ++i) {
        h.push_back(i);
        h.insert(h.end(), b.begin(), b.end());
      }
      w.claimed_degree = 3LL * n;
    }
    w.word = h;
    return w;
  }

  if (!(n > m && m >= 2)) throw BadInput("family e needs m = 1, n = m, or n > m >= 2");
  const int l = (n - 1) / m;
  const int r = (n - 1) % m;
  if (d < n + 2 * l + m) throw BadInput("family e needs d >= n + 2*floor((n-1)/m) + m");
  if (m != 2 || r != 1)
    throw Inconclusive("family e: validated construction known for m = 2, odd n - 1 only");

  // Chain of 2-cycles over u_0..u_{n-1}; loop a at u_0, loop c1 at u_{n-1}; every
  // vertex is passed three times by the witness (flows alternate 2,1,2,...,2).
  const int s = d - n - 2 * l - r - 1;
  Quiver q;
  for (int v = 0; v < n; ++v) q.vertices.push_back("u" + std::to_string(v));
  std::vector<int> dv;
  for (int k = 1; k <= n - 1; ++k) {
    int flow = k % 2 == 1 ? 2 : 1;
    q.arrows.push_back({"f" + std::to_string(k), k - 1, k});
    dv.push_back(flow);
    q.arrows.push_back({"g" + std::to_string(k), k, k - 1});
    dv.push_back(flow);
  }
  q.arrows.push_back({"a", 0, 0});
  dv.push_back(1);
  q.arrows.push_back({"c1", n - 1, n - 1});
  dv.push_back(1);
  for (int i = 1; i <= s; ++i) {
    q.arrows.push_back({"b" + std::to_string(i), 0, 0});
    dv.push_back(0);
  }
  q.finalize();
  Multidegree delta(q.d());
  for (int i = 0; i < q.d(); ++i) delta[i] = dv[static_cast<std::size_t>(i)];

  if (q.n() != n || q.d() != d || !is_strongly_connected(q) || max_primitive_degree(q) != m)
    throw Inconclusive("family e: construction failed validation");
  for (int v = 0; v < n; ++v) {
    long long heads = 0;
    for (int a = 0; a < q.d(); ++a)
      if (q.arrows[static_cast<std::size_t>(a)].head == v) heads += delta[a];
    if (heads != 3) throw Inconclusive("family e: deg_w(h) = 3 fails at a vertex");
  }
  w.quiver = q;
  w.word = euler_word(q, delta);
  w.claimed_degree = 3LL * n;
  // Reduction step constants: loop a -> I, the first forward arrow -> J, its partner -> E.
  w.substitution[q.arrow_index("a")] = ConstMat::I;
  w.substitution[q.arrow_index("f1")] = ConstMat::J;
  w.substitution[q.arrow_index("g1")] = ConstMat::E;
  return w;
}

}  // namespace

ExtremalWitness build_extremal(Family f, const ExtremalParams& p) {
  switch (f) {
    case Family::loop_bouquet: return build_a(p);
    case Family::cycle_parallel: return build_b(p);
    case Family::rhombus_chain: return build_c(p);
    case Family::rhombus_cycle: return build_d(p);
    case Family::char_not2_family: break;
  }
  return build_e(p);
}

WitnessReport verify_witness(const ExtremalWitness& w, Char chi, const EngineConfig& ecfg,
                             const OracleConfig& ocfg) {
  WitnessReport rep;
  auto pass = [&](const std::string& s) { rep.checks.push_back(s); };
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

  int n = w.quiver.n(), d = w.quiver.d();
  int m = 0;
  try {
    m = max_primitive_degree(w.quiver);
  } catch (const BadInput&) {
    fail("quiver has no closed path");
    rep.ok = false;
    return rep;
  }
  if (!is_strongly_connected(w.quiver))
    fail("quiver is not strongly connected");
  else
    pass("strongly connected");
  if (!q_class_nonempty(n, d, m))
    fail("class criterion rejects (n,d,m) = (" + std::to_string(n) + "," + std::to_string(d) + "," +
         std::to_string(m) + ")");
  else
    pass("class (" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(m) + ") admissible");

  long long deg = 0;
  if (w.word) {
    deg = static_cast<long long>(w.word->size());
    if (!is_closed_word(w.quiver, *w.word)) fail("witness word is not closed");
  } else if (w.delta) {
    deg = w.delta->total();
  } else {
    fail("witness carries neither a word nor a multidegree");
  }
  if (deg == w.claimed_degree)
    pass("degree " + std::to_string(deg) + " matches the family formula");
  else
    fail("degree " + std::to_string(deg) + " != claimed " + std::to_string(w.claimed_degree));

  // Non-vanishing.
  if (w.word) {
    auto res = equiv_zero(w.quiver, *w.word, chi, ecfg);
    if (res.equiv_zero)
      fail("witness word is equivalent to zero");
    else
      pass("witness word is not equivalent to zero (certificate: " + certificate_str(res.certificate) + ")");
  } else if (w.delta) {
    if (!support_in_omega2(w.quiver, *w.delta))
      fail("witness multidegree is not in Omega_2");
    else
      pass("witness multidegree lies in Omega_2");
    try {
      Word h = euler_word(w.quiver, *w.delta);
      auto res = equiv_zero(w.quiver, h, Char::two, ecfg);
      if (res.equiv_zero)
        fail("realized word is equivalent to zero despite the Omega_2 certificate");
      else
        pass("realized word " + word_str(w.quiver, h) + " is not equivalent to zero");
    } catch (const Inconclusive&) {
      pass("realized word check skipped (engine cap)");
    }
  }

  // Degree-gap comparison against the class formula.
  long long M = m_formula(n, d, m, chi);
  if (chi == Char::two) {
    long long gap = M - w.claimed_degree;
    if (gap < 0 || gap > m)
      fail("gap M - deg = " + std::to_string(gap) + " outside [0, m]");
    else
      pass("gap M - deg = " + std::to_string(gap) + " within [0, m]");
  } else {
    if (w.claimed_degree != M)
      fail("degree " + std::to_string(w.claimed_degree) + " != M = " + std::to_string(M));
    else
      pass("degree attains M = " + std::to_string(M));
  }

  // Family e: matrix-substitution reduction certificate.
  if (w.family == Family::char_not2_family && !w.substitution.empty() && w.word) {
    auto sub = substitution_certificate(w.quiver, *w.word, w.substitution, field_for(chi));
    if (!sub.nonzero)
      fail("substitution certificate vanished");
    else
      pass("substitution certificate is a nonzero polynomial");
  }
  // Opportunistic oracle cross-check when the degree fits under the cap.
  if (w.word && static_cast<long long>(w.word->size()) <= ocfg.degree_cap) {
    bool dec = decomposable(w.quiver, *w.word, 1, field_for(chi), ocfg);
    if (dec)
      fail("oracle says the witness trace is decomposable");
    else
      pass("oracle confirms the witness trace is indecomposable");
  }

  rep.ok = rep.failures.empty();
  return rep;
}

nlohmann::json witness_json(const ExtremalWitness& w, const WitnessReport& r) {
  nlohmann::json doc;
  doc["family"] = family_str(w.family);
  doc["char"] = char_str(w.chi);
  doc["quiver"] = w.quiver.to_json();
  doc["claimed_degree"] = w.claimed_degree;
  if (w.word) doc["word"] = word_to_json(w.quiver, *w.word)["word"];
  if (w.delta) doc["delta"] = multidegree_to_json(w.quiver, *w.delta);
  doc["verified"] = r.ok;
  doc["checks"] = r.checks;
  doc["failures"] = r.failures;
  return doc;
}

}  // namespace quivar
