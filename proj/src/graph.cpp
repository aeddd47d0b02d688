#include "quivar/graph.hpp"

#include "quivar/util.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace quivar {

std::vector<std::vector<int>> strongly_connected_components(const Quiver& q) {
  // Tarjan, iterative-friendly sizes here so plain recursion is fine.
  int n = q.n();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int a : q.out[static_cast<std::size_t>(v)]) {
      int w = q.arrows[static_cast<std::size_t>(a)].head;
      if (index[static_cast<std::size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      std::vector<int> comp;
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };

  for (int v = 0; v < n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) strongconnect(v);
  std::sort(comps.begin(), comps.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return comps;
}

bool is_strongly_connected(const Quiver& q) {
  if (q.n() == 0) return false;
  if (strongly_connected_components(q).size() != 1) return false;
  return q.n() > 1 || q.d() >= 1;  // lone vertex needs a loop to carry a closed path
}

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& vertex_set) {
  Quiver sub;
  std::vector<int> vmap(static_cast<std::size_t>(q.n()), -1);
  for (int v : vertex_set) {
    vmap[static_cast<std::size_t>(v)] = static_cast<int>(sub.vertices.size());
    sub.vertices.push_back(q.vertices[static_cast<std::size_t>(v)]);
  }
  for (const auto& a : q.arrows) {
    int t = vmap[static_cast<std::size_t>(a.tail)], h = vmap[static_cast<std::size_t>(a.head)];
    if (t >= 0 && h >= 0) sub.arrows.push_back({a.id, t, h});
  }
  sub.finalize();
  return sub;
}

std::vector<Word> enumerate_primitive_cycles(const Quiver& q) {
  std::vector<Word> out;
  int n = q.n();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Word path;

  // Cycles are rooted at their smallest vertex; interior vertices must stay above it.
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int a : q.out[static_cast<std::size_t>(v)]) {
      int w = q.arrows[static_cast<std::size_t>(a)].head;
      if (w == start) {
        path.push_back(a);
        out.push_back(canonicalize(q, path));
        path.pop_back();
      } else if (w > start && !used[static_cast<std::size_t>(w)]) {
        used[static_cast<std::size_t>(w)] = true;
        path.push_back(a);
        dfs(start, w);
        path.pop_back();
        used[static_cast<std::size_t>(w)] = false;
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    used.assign(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(s)] = true;
    dfs(s, s);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(q, a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int max_primitive_degree(const Quiver& q) {
  auto cycles = enumerate_primitive_cycles(q);
  if (cycles.empty()) throw BadInput("quiver has no closed path");
  std::size_t best = 0;
  for (const auto& c : cycles) best = std::max(best, c.size());
  return static_cast<int>(best);
}

bool closed_path_exists(const Quiver& q, const Multidegree& delta) {
  if (delta.size() != q.d()) throw BadInput("multidegree references unknown arrow set");
  for (int a = 0; a < q.d(); ++a)
    if (delta[a] < 1) return false;
  for (int v = 0; v < q.n(); ++v) {
    long long in = 0, out_flow = 0;
    for (int a = 0; a < q.d(); ++a) {
      if (q.arrows[static_cast<std::size_t>(a)].head == v) in += delta[a];
      if (q.arrows[static_cast<std::size_t>(a)].tail == v) out_flow += delta[a];
    }
    if (in != out_flow) return false;
  }
  return true;
}

Quiver support_quiver(const Quiver& q, const Multidegree& delta, std::vector<int>* arrow_map) {
  std::set<int> verts;
  for (int a = 0; a < q.d(); ++a) {
    if (delta[a] >= 1) {
      verts.insert(q.arrows[static_cast<std::size_t>(a)].tail);
      verts.insert(q.arrows[static_cast<std::size_t>(a)].head);
    }
  }
  Quiver sup;
  std::vector<int> vmap(static_cast<std::size_t>(q.n()), -1);
  for (int v : verts) {
    vmap[static_cast<std::size_t>(v)] = static_cast<int>(sup.vertices.size());
    sup.vertices.push_back(q.vertices[static_cast<std::size_t>(v)]);
  }
  if (arrow_map) arrow_map->clear();
  for (int a = 0; a < q.d(); ++a) {
    if (delta[a] >= 1) {
      const auto& arr = q.arrows[static_cast<std::size_t>(a)];
      if (arrow_map) arrow_map->push_back(a);
      sup.arrows.push_back({arr.id, vmap[static_cast<std::size_t>(arr.tail)], vmap[static_cast<std::size_t>(arr.head)]});
    }
  }
  sup.finalize();
  return sup;
}

VectorClassification classify_multidegree(const Quiver& q, const Multidegree& delta) {
  if (delta.is_zero()) throw BadInput("classify_multidegree: zero vector");
  std::vector<int> arrow_map;
  Quiver sup = support_quiver(q, delta, &arrow_map);
  auto comps = strongly_connected_components(sup);

  // Map each support vertex to its component.
  std::vector<int> comp_of(static_cast<std::size_t>(sup.n()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

  VectorClassification result;
  for (const auto& a : sup.arrows) {
    if (comp_of[static_cast<std::size_t>(a.tail)] != comp_of[static_cast<std::size_t>(a.head)]) {
      result.kind = VectorKind::neither;
      return result;  // an arrow crosses components: no decomposition exists
    }
  }
  // Every component must itself carry a closed path (it does: each support vertex has
  // in- and out-arrows inside its component since crossing arrows are absent).
  result.kind = comps.size() == 1 ? VectorKind::indecomposable : VectorKind::decomposable;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Component piece;
    piece.delta = Multidegree(q.d());
    for (std::size_t i = 0; i < arrow_map.size(); ++i) {
      if (comp_of[static_cast<std::size_t>(sup.arrows[i].tail)] == static_cast<int>(c))
        piece.delta[arrow_map[i]] = delta[arrow_map[i]];
    }
    // translate component vertex indices back to the ambient quiver
    for (int v : comps[c]) piece.vertex_set.push_back(q.vertex_index(sup.vertices[static_cast<std::size_t>(v)]));
    piece.subquiver = support_quiver(q, piece.delta, nullptr);
    result.components.push_back(std::move(piece));
  }
  return result;
}

std::vector<Word> enumerate_closed_words_exact(const Quiver& q, const Multidegree& delta) {
  std::vector<Word> out;
  if (delta.size() != q.d()) throw BadInput("multidegree references unknown arrow set");
  if (delta.is_zero()) return out;
  // Every word of this class can be rotated to start with the least-rank arrow in the
  // support, so it suffices to root the search there and dedupe.
  int first = -1;
  for (int a = 0; a < q.d(); ++a)
    if (delta[a] >= 1 && (first < 0 || q.rank[static_cast<std::size_t>(a)] < q.rank[static_cast<std::size_t>(first)]))
      first = a;
  long long total = delta.total();
  std::vector<int> budget = delta.c;
  Word path{first};
  --budget[static_cast<std::size_t>(first)];
  int start_vertex = q.arrows[static_cast<std::size_t>(first)].tail;
  std::set<Word> seen;

  std::function<void(int)> dfs = [&](int v) {
    if (static_cast<long long>(path.size()) == total) {
      if (v == start_vertex) {
        Word c = canonicalize(q, path);
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
      return;
    }
    for (int a : q.out[static_cast<std::size_t>(v)]) {
      if (budget[static_cast<std::size_t>(a)] > 0) {
        --budget[static_cast<std::size_t>(a)];
        path.push_back(a);
        dfs(q.arrows[static_cast<std::size_t>(a)].head);
        path.pop_back();
        ++budget[static_cast<std::size_t>(a)];
      }
    }
  };
  dfs(q.arrows[static_cast<std::size_t>(first)].head);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(q, a, b); });
  return out;
}

std::vector<Word> enumerate_closed_words(const Quiver& q, int degree_cutoff) {
  std::vector<Word> out;
  std::set<Word> seen;
  // Root each class at its least-rank arrow: later arrows must not rank below it.
  for (int first = 0; first < q.d(); ++first) {
    int base_rank = q.rank[static_cast<std::size_t>(first)];
    int start_vertex = q.arrows[static_cast<std::size_t>(first)].tail;
    Word path{first};
    std::function<void(int)> dfs = [&](int v) {
      if (v == start_vertex) {
        Word c = canonicalize(q, path);
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
      if (static_cast<int>(path.size()) == degree_cutoff) return;
      for (int a : q.out[static_cast<std::size_t>(v)]) {
        if (q.rank[static_cast<std::size_t>(a)] < base_rank) continue;
        path.push_back(a);
        dfs(q.arrows[static_cast<std::size_t>(a)].head);
        path.pop_back();
      }
    };
    if (degree_cutoff >= 1) dfs(q.arrows[static_cast<std::size_t>(first)].head);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(q, a, b); });
  return out;
}

Word euler_word(const Quiver& q, const Multidegree& delta) {
  std::vector<int> amap;
  Quiver sup = support_quiver(q, delta, &amap);
  Multidegree ds(sup.d());
  for (int i = 0; i < sup.d(); ++i) ds[i] = delta[amap[static_cast<std::size_t>(i)]];
  if (!is_strongly_connected(sup) || !closed_path_exists(sup, ds))
    throw BadInput("multidegree is not realizable by a closed path on its support");

  // Hierholzer on the multigraph with ds[a] copies of each arrow.
  std::vector<int> budget = ds.c;
  std::vector<std::size_t> next_arrow(static_cast<std::size_t>(sup.n()), 0);
  std::vector<int> circuit;     // arrow indices into sup
  std::vector<int> stack_v{0};  // vertex stack
  std::vector<int> stack_a;
  while (!stack_v.empty()) {
    int v = stack_v.back();
    std::size_t& cursor = next_arrow[static_cast<std::size_t>(v)];
    bool advanced = false;
    while (cursor < sup.out[static_cast<std::size_t>(v)].size()) {
      int a = sup.out[static_cast<std::size_t>(v)][cursor];
      if (budget[static_cast<std::size_t>(a)] > 0) {
        --budget[static_cast<std::size_t>(a)];
        stack_v.push_back(sup.arrows[static_cast<std::size_t>(a)].head);
        stack_a.push_back(a);
        advanced = true;
        break;
      }
      ++cursor;
    }
    if (!advanced) {
      stack_v.pop_back();
      if (!stack_a.empty() && !stack_v.empty()) {
        circuit.push_back(stack_a.back());
        stack_a.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  Word w;
  for (int a : circuit) w.push_back(amap[static_cast<std::size_t>(a)]);
  require_closed_word(q, w);
  if (!(mdeg(q, w) == delta)) throw PropertyViolation("euler_word produced a wrong multidegree");
  return w;
}

Restriction restriction(const Quiver& q, const Word& h, const std::vector<int>& vertex_set) {
  if (vertex_set.empty()) throw BadInput("restriction: empty vertex set");
  require_closed_word(q, h);
  std::set<int> vset(vertex_set.begin(), vertex_set.end());
  auto hverts = word_vertices(q, h);
  for (int v : vset)
    if (!std::binary_search(hverts.begin(), hverts.end(), v))
      throw BadInput("restriction: vertex " + q.vertices[static_cast<std::size_t>(v)] + " not visited by the word");

  // Rotate h to start at an occurrence of a vertex in V, then split at V-hits.
  std::size_t n = h.size(), start = 0;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (vset.count(word_tail_vertex(q, h, static_cast<int>(i)))) {
      start = i;
      found = true;
      break;
    }
  }
  if (!found) throw BadInput("restriction: word never enters the vertex set");

  std::vector<Word> segments;
  Word current;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = (start + k) % n;
    if (k > 0 && vset.count(word_tail_vertex(q, h, static_cast<int>(i)))) {
      segments.push_back(current);
      current.clear();
    }
    current.push_back(h[i]);
  }
  segments.push_back(current);

  Restriction res;
  for (int v : vset) res.quiver.vertices.push_back(q.vertices[static_cast<std::size_t>(v)]);
  std::map<Word, int> arrow_of_segment;
  for (const auto& seg : segments) {
    auto it = arrow_of_segment.find(seg);
    if (it == arrow_of_segment.end()) {
      int tail = q.arrows[static_cast<std::size_t>(seg.front())].tail;
      int head = q.arrows[static_cast<std::size_t>(seg.back())].head;
      std::string id = seg.size() == 1 ? q.arrows[static_cast<std::size_t>(seg.front())].id
                                       : "~(" + word_str(q, seg) + ")";
      Arrow arr{id, res.quiver.vertex_index(q.vertices[static_cast<std::size_t>(tail)]),
                res.quiver.vertex_index(q.vertices[static_cast<std::size_t>(head)])};
      it = arrow_of_segment.emplace(seg, static_cast<int>(res.quiver.arrows.size())).first;
      res.quiver.arrows.push_back(arr);
      res.arrow_paths.push_back(seg);
    }
    res.image.push_back(it->second);
  }
  res.quiver.finalize();
  return res;
}

}  // namespace quivar
