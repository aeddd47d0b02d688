#pragma once

#include "quivar/quiver.hpp"

#include <optional>
#include <vector>

namespace quivar {

// Strongly connected components, each listed as a sorted vertex set; components in
// deterministic order (by smallest vertex).
std::vector<std::vector<int>> strongly_connected_components(const Quiver& q);

// "Strongly connected" means a closed path through all vertices exists, so a single
// vertex without a loop does not qualify.
bool is_strongly_connected(const Quiver& q);

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& vertex_set);

// All primitive closed paths (deg_v = 1 on every visited vertex), one canonical
// representative per rotation class, graded-lex sorted.
std::vector<Word> enumerate_primitive_cycles(const Quiver& q);

// m(Q); throws BadInput if the quiver has no closed path.
int max_primitive_degree(const Quiver& q);

// Euler-type realizability criterion on a strongly connected quiver: a closed path h
// with mdeg(h) = delta and Arr(h) = Arr(Q) exists iff delta >= 1 everywhere and
// head-flow equals tail-flow at every vertex.
bool closed_path_exists(const Quiver& q, const Multidegree& delta);

enum class VectorKind { indecomposable, decomposable, neither };

struct Component {
  Multidegree delta;
  Quiver subquiver;
  std::vector<int> vertex_set;  // indices into the ambient quiver
};

struct VectorClassification {
  VectorKind kind = VectorKind::neither;
  std::vector<Component> components;  // filled unless kind == neither
};

// Support subquiver of a non-zero multidegree: arrows with delta >= 1 plus endpoints.
Quiver support_quiver(const Quiver& q, const Multidegree& delta, std::vector<int>* arrow_map = nullptr);

VectorClassification classify_multidegree(const Quiver& q, const Multidegree& delta);

// Closed-word enumeration, one canonical representative per rotation class,
// graded-lex deterministic order.
std::vector<Word> enumerate_closed_words_exact(const Quiver& q, const Multidegree& delta);
std::vector<Word> enumerate_closed_words(const Quiver& q, int degree_cutoff);

// One closed word with mdeg = delta (Hierholzer); requires the realizability criterion.
Word euler_word(const Quiver& q, const Multidegree& delta);

struct Restriction {
  Quiver quiver;
  std::vector<Word> arrow_paths;  // for each arrow of quiver, the underlying path in q
  Word image;                     // h rewritten over the restriction's arrows
};

// h-restriction of Q to V: collapsed V-to-V subpaths of h become arrows; arrows of h
// with both endpoints in V keep their id. Equal-content segments collapse to one arrow.
Restriction restriction(const Quiver& q, const Word& h, const std::vector<int>& vertex_set);

}  // namespace quivar
