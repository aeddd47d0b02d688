#include "quivar/quiver.hpp"

#include "quivar/util.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quivar {

void Quiver::finalize() {
  out.assign(vertices.size(), {});
  for (int i = 0; i < d(); ++i) out[static_cast<std::size_t>(arrows[static_cast<std::size_t>(i)].tail)].push_back(i);
  std::vector<int> order(arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return arrows[static_cast<std::size_t>(a)].id < arrows[static_cast<std::size_t>(b)].id;
  });
  rank.assign(arrows.size(), 0);
  for (int r = 0; r < d(); ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
}

int Quiver::vertex_index(const std::string& v) const {
  for (int i = 0; i < n(); ++i)
    if (vertices[static_cast<std::size_t>(i)] == v) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& a) const {
  for (int i = 0; i < d(); ++i)
    if (arrows[static_cast<std::size_t>(i)].id == a) return i;
  return -1;
}

Quiver Quiver::parse(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("arrows"))
    throw BadInput("quiver document needs \"vertices\" and \"arrows\"");
  Quiver q;
  std::set<std::string> seen_v;
  for (const auto& v : doc.at("vertices")) {
    std::string name = v.get<std::string>();
    if (!seen_v.insert(name).second) throw BadInput("duplicate vertex id: " + name);
    q.vertices.push_back(name);
  }
  std::set<std::string> seen_a;
  for (const auto& a : doc.at("arrows")) {
    Arrow arr;
    arr.id = a.at("id").get<std::string>();
    if (!seen_a.insert(arr.id).second) throw BadInput("duplicate arrow id: " + arr.id);
    std::string tail = a.at("tail").get<std::string>();
    std::string head = a.at("head").get<std::string>();
    arr.tail = q.vertex_index(tail);
    arr.head = q.vertex_index(head);
    if (arr.tail < 0) throw BadInput("arrow " + arr.id + ": dangling vertex " + tail);
    if (arr.head < 0) throw BadInput("arrow " + arr.id + ": dangling vertex " + head);
    q.arrows.push_back(arr);
  }
  q.finalize();
  return q;
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json doc;
  doc["vertices"] = vertices;
  doc["arrows"] = nlohmann::json::array();
  for (const auto& a : arrows) {
    doc["arrows"].push_back({{"id", a.id},
                             {"tail", vertices[static_cast<std::size_t>(a.tail)]},
                             {"head", vertices[static_cast<std::size_t>(a.head)]}});
  }
  return doc;
}

bool is_closed_word(const Quiver& q, const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int a = w[i];
    if (a < 0 || a >= q.d()) return false;
    int b = w[(i + 1) % w.size()];
    if (q.arrows[static_cast<std::size_t>(a)].head != q.arrows[static_cast<std::size_t>(b)].tail) return false;
  }
  return true;
}

void require_closed_word(const Quiver& q, const Word& w) {
  if (!is_closed_word(q, w)) throw BadInput("word is not a closed composable path in the quiver");
}

Word parse_word(const Quiver& q, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("word")) throw BadInput("word document needs \"word\"");
  Word w;
  for (const auto& id : doc.at("word")) {
    int a = q.arrow_index(id.get<std::string>());
    if (a < 0) throw BadInput("word references unknown arrow: " + id.get<std::string>());
    w.push_back(a);
  }
  require_closed_word(q, w);
  return w;
}

nlohmann::json word_to_json(const Quiver& q, const Word& w) {
  nlohmann::json ids = nlohmann::json::array();
  for (int a : w) ids.push_back(q.arrows[static_cast<std::size_t>(a)].id);
  return nlohmann::json{{"word", ids}};
}

int word_tail_vertex(const Quiver& q, const Word& w, int pos) {
  return q.arrows[static_cast<std::size_t>(w[static_cast<std::size_t>(pos) % w.size()])].tail;
}

int deg_arrow(const Word& w, int arrow) {
  return static_cast<int>(std::count(w.begin(), w.end(), arrow));
}

int deg_vertex(const Quiver& q, const Word& w, int v) {
  int heads = 0, tails = 0;
  for (int a : w) {
    heads += q.arrows[static_cast<std::size_t>(a)].head == v;
    tails += q.arrows[static_cast<std::size_t>(a)].tail == v;
  }
  return std::max(heads, tails);
}

int deg_vertex_second(const Quiver& q, const Word& w, int v) {
  int heads = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    heads += q.arrows[static_cast<std::size_t>(w[i])].head == v;
  return heads;
}

std::vector<int> word_vertices(const Quiver& q, const Word& w) {
  std::set<int> s;
  for (int a : w) {
    s.insert(q.arrows[static_cast<std::size_t>(a)].tail);
    s.insert(q.arrows[static_cast<std::size_t>(a)].head);
  }
  return {s.begin(), s.end()};
}

std::vector<int> word_arrows(const Word& w) {
  std::set<int> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

// Least rotation of the id-rank sequence (two-pointer algorithm).
Word canonicalize(const Quiver& q, const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return w;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = q.rank[static_cast<std::size_t>(w[i])];
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  std::size_t best = std::min(i, j);
  Word out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = w[(best + t) % n];
  return out;
}

bool word_less(const Quiver& q, const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = q.rank[static_cast<std::size_t>(a[i])], rb = q.rank[static_cast<std::size_t>(b[i])];
    if (ra != rb) return ra < rb;
  }
  return false;
}

long long Multidegree::total() const {
  long long s = 0;
  for (int x : c) s += x;
  return s;
}

bool Multidegree::is_zero() const {
  for (int x : c)
    if (x != 0) return false;
  return true;
}

bool Multidegree::geq(const Multidegree& o) const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < o.c[i]) return false;
  return true;
}

Multidegree Multidegree::minus(const Multidegree& o) const {
  Multidegree r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Multidegree Multidegree::plus(const Multidegree& o) const {
  Multidegree r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Multidegree Multidegree::scaled(int k) const {
  Multidegree r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

Multidegree mdeg(const Quiver& q, const Word& w) {
  Multidegree m(q.d());
  for (int a : w) ++m[a];
  return m;
}

Multidegree parse_multidegree(const Quiver& q, const nlohmann::json& doc) {
  if (!doc.is_object()) throw BadInput("multidegree document must be an object {arrow: count}");
  Multidegree m(q.d());
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    int a = q.arrow_index(it.key());
    if (a < 0) throw BadInput("multidegree references unknown arrow: " + it.key());
    int v = it.value().get<int>();
    if (v < 0) throw BadInput("multidegree entries must be non-negative");
    m[a] = v;
  }
  return m;
}

nlohmann::json multidegree_to_json(const Quiver& q, const Multidegree& m) {
  nlohmann::json doc = nlohmann::json::object();
  for (int a = 0; a < m.size(); ++a)
    if (m[a] != 0) doc[q.arrows[static_cast<std::size_t>(a)].id] = m[a];
  return doc;
}

std::string word_str(const Quiver& q, const Word& w) {
  std::string s;
  for (int a : w) {
    if (!s.empty()) s += '.';
    s += q.arrows[static_cast<std::size_t>(a)].id;
  }
  return s;
}

}  // namespace quivar
