#include "quivar/omega.hpp"

#include "quivar/util.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace quivar {

std::string ynu_str(YesNoUnknown v) {
  switch (v) {
    case YesNoUnknown::yes: return "yes";
    case YesNoUnknown::no: return "no";
    case YesNoUnknown::unknown: break;
  }
  return "unknown";
}

namespace {

std::vector<Word> double_paths(const Quiver& q, const Multidegree& delta) {
  std::vector<Word> out;
  for (const auto& cyc : enumerate_primitive_cycles(q)) {
    bool dbl = true;
    for (int a : cyc)
      if (delta[a] < 2) {
        dbl = false;
        break;
      }
    if (dbl) out.push_back(cyc);
  }
  return out;
}

bool is_primitive(const Quiver& q, const Word& w) {
  for (int v : word_vertices(q, w))
    if (deg_vertex(q, w, v) != 1) return false;
  return true;
}

bool vertex_sets_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return true;
  return false;
}

}  // namespace

OmegaMembership omega_membership(const Quiver& q, const Multidegree& delta, Char chi,
                                 const EngineConfig& cfg) {
  if (delta.size() != q.d()) throw BadInput("multidegree does not match the quiver's arrows");
  if (!is_strongly_connected(q)) throw BadInput("omega sets are defined over a strongly connected quiver");
  OmegaMembership m;
  if (delta.is_zero()) return m;
  m.in_omega0 = closed_path_exists(q, delta);

  auto doubles = double_paths(q, delta);
  if (!doubles.empty()) m.double_path_witness = doubles.front();
  if (m.in_omega0) {
    m.in_omega3 = doubles.empty();
    m.in_omega2 = true;
    for (const auto& dp : doubles) {
      Multidegree resid = delta.minus(mdeg(q, dp).scaled(2));
      if (resid.is_zero() || classify_multidegree(q, resid).kind != VectorKind::decomposable) {
        m.in_omega2 = false;
        m.omega2_failure = dp;
        break;
      }
    }
    // Omega_equiv: the realizing words form a finite class; engine caps or a class too
    // large to enumerate leave the answer open instead of guessing.
    if (delta.total() > 20) {
      m.in_omega_equiv = YesNoUnknown::unknown;
      return m;
    }
    bool unknown = false;
    EquivMemo memo(q, chi, cfg);
    for (const auto& w : enumerate_closed_words_exact(q, delta)) {
      check_interrupt();
      try {
        if (!memo.is_zero(w)) {
          m.in_omega_equiv = YesNoUnknown::yes;
          m.equiv_witness = w;
          break;
        }
      } catch (const Inconclusive&) {
        unknown = true;
      }
    }
    if (m.in_omega_equiv != YesNoUnknown::yes && unknown) m.in_omega_equiv = YesNoUnknown::unknown;
  }
  return m;
}

nlohmann::json omega_report_json(const Quiver& q, const Multidegree& delta, const OmegaMembership& m) {
  nlohmann::json doc;
  doc["delta"] = multidegree_to_json(q, delta);
  doc["omega0"] = m.in_omega0;
  doc["omega3"] = m.in_omega3;
  doc["omega2"] = m.in_omega2;
  doc["omega_equiv"] = ynu_str(m.in_omega_equiv);
  doc["witness"] = m.equiv_witness ? word_to_json(q, *m.equiv_witness)["word"] : nlohmann::json();
  return doc;
}

std::vector<std::string> validate_complete_chain(const Quiver& q, const Multidegree& delta,
                                                 const CompleteChain& chain) {
  std::vector<std::string> errs;
  auto fail = [&](const std::string& s) { errs.push_back(s); };

  if (!support_in_omega2(q, delta)) fail("delta is not in Omega_2 of its support");

  std::vector<int> amap;
  Quiver sup = support_quiver(q, delta, &amap);
  Multidegree ds(sup.d());
  for (int i = 0; i < sup.d(); ++i) ds[i] = delta[amap[static_cast<std::size_t>(i)]];

  if (chain.paths.empty()) {
    if (!double_paths(sup, ds).empty()) fail("empty chain but a delta-double path exists");
    if (!(chain.residual == delta)) fail("empty chain must carry residual = delta");
    return errs;
  }

  std::set<Word> distinct;
  std::vector<std::vector<int>> verts;
  Multidegree twice(q.d());
  for (const auto& p : chain.paths) {
    if (!is_closed_word(q, p) || !is_primitive(q, p)) fail("chain path is not a primitive closed path");
    for (int a : p)
      if (delta[a] < 2) fail("chain path is not delta-double");
    if (!distinct.insert(canonicalize(q, p)).second) fail("chain paths are not pairwise different");
    verts.push_back(word_vertices(q, p));
    twice = twice.plus(mdeg(q, p).scaled(2));
  }
  const int t = static_cast<int>(chain.paths.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      bool meet = vertex_sets_intersect(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
      if (j == i + 1 && !meet) fail("consecutive chain paths must share a vertex");
      if (j > i + 1 && meet) fail("non-consecutive chain paths must be vertex-disjoint");
    }

  Multidegree theta = delta.minus(twice);
  for (int a = 0; a < q.d(); ++a)
    if (theta[a] < 0) fail("residual has a negative coordinate");
  if (theta.total() <= 0) fail("residual must be non-zero");
  if (!(chain.residual == theta)) fail("stored residual disagrees with delta - 2*sum");
  if (!errs.empty()) return errs;

  auto cls = classify_multidegree(q, theta);
  if (cls.kind != VectorKind::decomposable) {
    fail("residual is not decomposable");
    return errs;
  }
  if (cls.components.size() != chain.decomposition.size())
    fail("stored decomposition has the wrong number of components");
  for (std::size_t i = 0; i < cls.components.size() && i < chain.decomposition.size(); ++i)
    if (!(cls.components[i].delta == chain.decomposition[i].delta))
      fail("stored decomposition disagrees with the residual's decomposition");
  for (const auto& comp : cls.components)
    if (!support_in_omega2(q, comp.delta)) fail("a residual component is not in Omega_2 of its support");

  if (t >= 2) {
    if (cls.components.size() != 2) {
      fail("chains with t >= 2 need exactly two residual components");
      return errs;
    }
    auto touches = [&](const Component& c, int j) {
      std::vector<int> cv = c.vertex_set;
      std::sort(cv.begin(), cv.end());
      return vertex_sets_intersect(verts[static_cast<std::size_t>(j)], cv);
    };
    auto attachment_ok = [&](const Component& first, const Component& last) {
      for (int j = 0; j < t; ++j) {
        if (touches(first, j) != (j == 0)) return false;
        if (touches(last, j) != (j == t - 1)) return false;
      }
      return true;
    };
    if (!attachment_ok(cls.components[0], cls.components[1]) &&
        !attachment_ok(cls.components[1], cls.components[0]))
      fail("end-attachment condition fails for t >= 2");
  }
  return errs;
}

CompleteChain build_complete_chain(const Quiver& q, const Multidegree& delta) {
  if (!support_in_omega2(q, delta)) throw BadInput("delta is not in Omega_2 of its support");
  std::vector<int> amap;
  Quiver sup = support_quiver(q, delta, &amap);
  Multidegree ds(sup.d());
  for (int i = 0; i < sup.d(); ++i) ds[i] = delta[amap[static_cast<std::size_t>(i)]];

  auto doubles_sup = double_paths(sup, ds);
  // translate to ambient arrow indices
  std::vector<Word> doubles;
  for (const auto& w : doubles_sup) {
    Word amb;
    for (int a : w) amb.push_back(amap[static_cast<std::size_t>(a)]);
    doubles.push_back(canonicalize(q, amb));
  }
  std::sort(doubles.begin(), doubles.end(), [&](const Word& a, const Word& b) { return word_less(q, a, b); });

  if (doubles.empty()) {
    CompleteChain c;
    c.residual = delta;
    auto cls = classify_multidegree(q, delta);
    c.decomposition = cls.components;
    return c;
  }

  CompleteChain best;
  std::vector<Word> chain;

  auto finish = [&]() {
    Multidegree twice(q.d());
    for (const auto& p : chain) twice = twice.plus(mdeg(q, p).scaled(2));
    CompleteChain c;
    c.paths = chain;
    c.residual = delta.minus(twice);
    for (int a = 0; a < q.d(); ++a)
      if (c.residual[a] < 0) return false;
    if (c.residual.total() <= 0) return false;
    auto cls = classify_multidegree(q, c.residual);
    if (cls.kind != VectorKind::decomposable) return false;
    c.decomposition = cls.components;
    if (!validate_complete_chain(q, delta, c).empty()) return false;
    best = std::move(c);
    return true;
  };

  std::function<bool()> dfs = [&]() -> bool {
    check_interrupt();
    if (!chain.empty() && finish()) return true;
    if (static_cast<long long>(chain.size()) > delta.total() / 2) return false;
    std::set<Word> used(chain.begin(), chain.end());
    for (const auto& cand : doubles) {
      if (used.count(cand)) continue;
      auto cand_verts = word_vertices(q, cand);
      // residual feasibility
      Multidegree twice(q.d());
      for (const auto& p : chain) twice = twice.plus(mdeg(q, p).scaled(2));
      twice = twice.plus(mdeg(q, cand).scaled(2));
      bool ok = true;
      for (int a = 0; a < q.d(); ++a)
        if (delta[a] < twice[a]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // append at the back
      bool back_ok = true;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        bool meet = vertex_sets_intersect(word_vertices(q, chain[i]), cand_verts);
        bool want = i + 1 == chain.size();
        if (meet != want) {
          back_ok = false;
          break;
        }
      }
      if (back_ok) {
        chain.push_back(cand);
        if (dfs()) return true;
        chain.pop_back();
      }
      if (!chain.empty()) {
        bool front_ok = true;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          bool meet = vertex_sets_intersect(word_vertices(q, chain[i]), cand_verts);
          bool want = i == 0;
          if (meet != want) {
            front_ok = false;
            break;
          }
        }
        if (front_ok) {
          chain.insert(chain.begin(), cand);
          if (dfs()) return true;
          chain.erase(chain.begin());
        }
      }
    }
    return false;
  };

  if (dfs()) return best;
  throw PropertyViolation("no complete chain found for a multidegree in Omega_2 (chain existence fails at this instance)");
}

DeltaTree build_delta_tree(const Quiver& q, const Multidegree& delta) {
  DeltaTree tree;
  std::function<int(const Multidegree&, int)> build = [&](const Multidegree& dv, int parent) -> int {
    DeltaTreeNode node;
    node.delta = dv;
    node.chain = build_complete_chain(q, dv);
    node.parent = parent;
    int idx = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(std::move(node));
    if (!tree.nodes[static_cast<std::size_t>(idx)].chain.paths.empty()) {
      auto comps = tree.nodes[static_cast<std::size_t>(idx)].chain.decomposition;
      for (const auto& comp : comps) {
        int child = build(comp.delta, idx);
        tree.nodes[static_cast<std::size_t>(idx)].children.push_back(child);
      }
    }
    return idx;
  };
  build(delta, -1);
  return tree;
}

std::vector<std::string> validate_delta_tree(const Quiver& q, const Multidegree& delta,
                                             const DeltaTree& tree) {
  std::vector<std::string> errs;
  if (tree.nodes.empty()) {
    errs.push_back("empty tree");
    return errs;
  }
  if (!(tree.nodes[0].delta == delta)) errs.push_back("root multidegree mismatch");
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    auto sub = validate_complete_chain(q, node.delta, node.chain);
    for (auto& e : sub) errs.push_back("node " + std::to_string(i) + ": " + e);
    bool leaf = node.children.empty();
    if (leaf != node.chain.paths.empty())
      errs.push_back("node " + std::to_string(i) + ": leaf iff empty chain violated");
    if (!leaf) {
      if (node.children.size() != node.chain.decomposition.size())
        errs.push_back("node " + std::to_string(i) + ": children do not enumerate the decomposition");
      for (std::size_t c = 0; c < node.children.size() && c < node.chain.decomposition.size(); ++c) {
        const auto& child = tree.nodes[static_cast<std::size_t>(node.children[c])];
        if (!(child.delta == node.chain.decomposition[c].delta))
          errs.push_back("node " + std::to_string(i) + ": child multidegree mismatch");
      }
    } else {
      // leaf: delta in Omega_3 of its support
      std::vector<int> amap;
      Quiver sup = support_quiver(q, node.delta, &amap);
      Multidegree ds(sup.d());
      for (int a = 0; a < sup.d(); ++a) ds[a] = node.delta[amap[static_cast<std::size_t>(a)]];
      if (!double_paths(sup, ds).empty())
        errs.push_back("node " + std::to_string(i) + ": leaf carries a double path");
    }
  }
  return errs;
}

nlohmann::json delta_tree_json(const Quiver& q, const DeltaTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : tree.nodes) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& p : node.chain.paths) chain.push_back(word_to_json(q, p)["word"]);
    nodes.push_back({{"delta", multidegree_to_json(q, node.delta)},
                     {"chain", chain},
                     {"parent", node.parent},
                     {"children", node.children}});
  }
  return nlohmann::json{{"nodes", nodes}};
}

GoodDecomposition good_component_decomposition(const Quiver& q, const Word& a, const Word& h) {
  require_closed_word(q, a);
  require_closed_word(q, h);
  if (a.size() < 2) throw BadInput("good components need deg(a) >= 2");
  if (!is_primitive(q, a)) throw BadInput("a must be a primitive closed path");
  std::set<int> arr_a(a.begin(), a.end());
  for (int arrow : arr_a)
    if (deg_arrow(h, arrow) != 2)
      throw BadInput("standing assumption deg_{a_i}(h) = 2 violated");

  auto va = word_vertices(q, a);
  std::set<int> vset(va.begin(), va.end());

  const int n = static_cast<int>(h.size());
  int start = -1;
  for (int p = 0; p < n; ++p)
    if (vset.count(word_tail_vertex(q, h, p))) {
      start = p;
      break;
    }
  if (start < 0) throw BadInput("h never visits Ver(a)");

  GoodDecomposition out;
  std::vector<std::pair<int, Word>> segments;
  Word current;
  int seg_start = start;
  for (int k = 0; k < n; ++k) {
    int i = (start + k) % n;
    if (k > 0 && vset.count(word_tail_vertex(q, h, i))) {
      segments.emplace_back(seg_start, current);
      current.clear();
      seg_start = i;
    }
    current.push_back(h[static_cast<std::size_t>(i)]);
  }
  segments.emplace_back(seg_start, current);

  // union-find over Ver(a)
  std::map<int, int> parent;
  for (int v : va) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::set<int> touched;

  for (const auto& [pos, seg] : segments) {
    bool good = !(seg.size() == 1 && arr_a.count(seg.front()));
    if (!good) continue;
    out.good_subpaths.push_back({pos, seg});
    int u = q.arrows[static_cast<std::size_t>(seg.front())].tail;
    int w = q.arrows[static_cast<std::size_t>(seg.back())].head;
    touched.insert(u);
    touched.insert(w);
    parent[find(u)] = find(w);
  }

  std::map<int, std::vector<int>> groups;
  for (int v : va) {
    if (touched.count(v))
      groups[find(v)].push_back(v);
    else
      out.null_component.push_back(v);
  }
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.good_components.push_back(members);
  }
  std::sort(out.good_components.begin(), out.good_components.end());
  std::sort(out.null_component.begin(), out.null_component.end());
  return out;
}

PathDecomposition find_path_decomposition(const Quiver& q, const Word& h, bool check_nonzero) {
  require_closed_word(q, h);
  if (check_nonzero && equiv_zero(q, h, Char::two).equiv_zero)
    throw BadInput("find_path_decomposition requires h not equivalent to zero (char 2)");

  Multidegree target_amb = mdeg(q, h);
  std::vector<int> amap;
  Quiver sup = support_quiver(q, target_amb, &amap);
  Multidegree target(sup.d());
  for (int i = 0; i < sup.d(); ++i) target[i] = target_amb[amap[static_cast<std::size_t>(i)]];

  auto cycles_sup = enumerate_primitive_cycles(sup);
  std::vector<Word> cycles;  // ambient indexing
  for (const auto& c : cycles_sup) {
    Word amb;
    for (int a : c) amb.push_back(amap[static_cast<std::size_t>(a)]);
    cycles.push_back(canonicalize(q, amb));
  }
  const int bound = sup.d() - sup.n() + 1;

  PathDecomposition result;
  result.support_n = sup.n();
  result.support_d = sup.d();
  std::vector<Word> bs, cs;
  Multidegree remaining = target_amb;

  auto assign_arrows = [&]() -> bool {
    // choose y_j != z_j in Arr(c_j) with deg in h == 2, x_i in Arr(b_i) with
    // deg_{x}(h) - 2 sum_k deg_x(c_k) == 1, all pairwise distinct
    std::set<int> used;
    std::vector<int> xs, ys, zs;
    std::function<bool(std::size_t)> pick_c = [&](std::size_t j) -> bool {
      if (j == cs.size()) {
        std::function<bool(std::size_t)> pick_b = [&](std::size_t i) -> bool {
          if (i == bs.size()) return true;
          for (int cand : word_arrows(bs[i])) {
            if (used.count(cand)) continue;
            int excess = deg_arrow(h, cand);
            for (const auto& ck : cs) excess -= 2 * deg_arrow(ck, cand);
            if (excess != 1) continue;
            used.insert(cand);
            xs.push_back(cand);
            if (pick_b(i + 1)) return true;
            xs.pop_back();
            used.erase(cand);
          }
          return false;
        };
        return pick_b(0);
      }
      auto arrows = word_arrows(cs[j]);
      for (int y : arrows) {
        if (used.count(y) || deg_arrow(h, y) != 2) continue;
        used.insert(y);
        for (int z : arrows) {
          if (z == y || used.count(z) || deg_arrow(h, z) != 2) continue;
          used.insert(z);
          ys.push_back(y);
          zs.push_back(z);
          if (pick_c(j + 1)) return true;
          zs.pop_back();
          ys.pop_back();
          used.erase(z);
        }
        used.erase(y);
      }
      return false;
    };
    if (!pick_c(0)) return false;
    result.b_paths = bs;
    result.c_paths = cs;
    result.x_arrows = xs;
    result.y_arrows = ys;
    result.z_arrows = zs;
    return true;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
    if (remaining.is_zero()) {
      if (bs.empty() || static_cast<int>(bs.size() + cs.size()) > bound) return false;
      return assign_arrows();
    }
    if (idx == cycles.size()) return false;
    Multidegree m1 = mdeg(q, cycles[idx]);
    // role b
    if (remaining.geq(m1)) {
      remaining = remaining.minus(m1);
      bs.push_back(cycles[idx]);
      if (dfs(idx + 1)) return true;
      bs.pop_back();
      remaining = remaining.plus(m1);
    }
    // role c
    Multidegree m2 = m1.scaled(2);
    if (remaining.geq(m2)) {
      remaining = remaining.minus(m2);
      cs.push_back(cycles[idx]);
      if (dfs(idx + 1)) return true;
      cs.pop_back();
      remaining = remaining.plus(m2);
    }
    return dfs(idx + 1);  // skip
  };

  if (!dfs(0))
    throw PropertyViolation("no path decomposition found for a nonzero word (decomposition existence fails at this instance): " +
                            word_str(q, h));
  return result;
}

}  // namespace quivar
