#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace quivar {

// Head/tail convention: an arrow goes tail -> head. Paths compose left to right:
// head(word[i]) == tail(word[i+1]).
struct Arrow {
  std::string id;
  int tail = 0;
  int head = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  // derived, filled by finalize()
  std::vector<std::vector<int>> out;  // arrow indices grouped by tail vertex
  std::vector<int> rank;              // rank of arrow id in lexicographic id order

  int n() const { return static_cast<int>(vertices.size()); }
  int d() const { return static_cast<int>(arrows.size()); }

  void finalize();

  int vertex_index(const std::string& v) const;  // -1 if absent
  int arrow_index(const std::string& a) const;   // -1 if absent

  static Quiver parse(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

// Closed cyclic word: sequence of arrow indices, word[0] traversed first.
using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int a : w) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool is_closed_word(const Quiver& q, const Word& w);
void require_closed_word(const Quiver& q, const Word& w);  // throws BadInput

Word parse_word(const Quiver& q, const nlohmann::json& doc);
nlohmann::json word_to_json(const Quiver& q, const Word& w);

int word_tail_vertex(const Quiver& q, const Word& w, int pos);  // vertex before step pos

int deg_arrow(const Word& w, int arrow);
// deg_v: max of head-count and tail-count at v (they agree on closed words).
int deg_vertex(const Quiver& q, const Word& w, int v);
// deg''_v: heads at v among the first (len-1) arrows.
int deg_vertex_second(const Quiver& q, const Word& w, int v);

std::vector<int> word_vertices(const Quiver& q, const Word& w);  // sorted unique
std::vector<int> word_arrows(const Word& w);                     // sorted unique

// Lexicographically least rotation of the arrow-id sequence (Booth).
Word canonicalize(const Quiver& q, const Word& w);
bool word_less(const Quiver& q, const Word& a, const Word& b);  // graded-lex on id ranks

// Arrow-indexed multidegree, aligned with q.arrows.
struct Multidegree {
  std::vector<int> c;

  Multidegree() = default;
  explicit Multidegree(int d) : c(static_cast<std::size_t>(d), 0) {}

  int& operator[](int a) { return c[static_cast<std::size_t>(a)]; }
  int operator[](int a) const { return c[static_cast<std::size_t>(a)]; }
  int size() const { return static_cast<int>(c.size()); }

  long long total() const;
  bool is_zero() const;
  bool operator==(const Multidegree& o) const = default;
  bool geq(const Multidegree& o) const;  // componentwise >=

  Multidegree minus(const Multidegree& o) const;
  Multidegree plus(const Multidegree& o) const;
  Multidegree scaled(int k) const;
};

Multidegree mdeg(const Quiver& q, const Word& w);
Multidegree parse_multidegree(const Quiver& q, const nlohmann::json& doc);
nlohmann::json multidegree_to_json(const Quiver& q, const Multidegree& m);

std::string word_str(const Quiver& q, const Word& w);

}  // namespace quivar
