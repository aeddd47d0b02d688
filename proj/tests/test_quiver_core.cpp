#include <doctest.h>

#include "quivar/acceptance.hpp"
#include "quivar/bounds.hpp"
#include "quivar/graph.hpp"
#include "quivar/quiver.hpp"
#include "quivar/util.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace quivar;

TEST_CASE("quiver parsing accepts the documented schema and rejects malformed input") {
  auto doc = nlohmann::json::parse(R"({
    "vertices": ["u", "v"],
    "arrows": [{"id": "a", "tail": "u", "head": "v"}, {"id": "b", "tail": "v", "head": "u"}]
  })");
  Quiver q = Quiver::parse(doc);
  CHECK(q.n() == 2);
  CHECK(q.d() == 2);
  CHECK(q.to_json() == doc);

  auto loop = nlohmann::json::parse(R"({"vertices":["v"],"arrows":[{"id":"x","tail":"v","head":"v"}]})");
  Quiver lq = Quiver::parse(loop);
  CHECK(lq.n() == 1);
  CHECK(lq.d() == 1);

  auto dangling = nlohmann::json::parse(R"({"vertices":["v"],"arrows":[{"id":"x","tail":"v","head":"q"}]})");
  CHECK_THROWS_AS(Quiver::parse(dangling), BadInput);

  auto dup = nlohmann::json::parse(
      R"({"vertices":["v"],"arrows":[{"id":"x","tail":"v","head":"v"},{"id":"x","tail":"v","head":"v"}]})");
  CHECK_THROWS_AS(Quiver::parse(dup), BadInput);
}

TEST_CASE("example quiver parses to n=3, d=6") {
  Quiver q = fixture_example31();
  CHECK(q.n() == 3);
  CHECK(q.d() == 6);
  CHECK(is_strongly_connected(q));
  CHECK(strongly_connected_components(q).size() == 1);
}

TEST_CASE("strongly connected components") {
  Quiver c2 = fixture_c2();
  auto comps = strongly_connected_components(c2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<int>{0, 1});

  Quiver oneway;
  oneway.vertices = {"u", "v"};
  oneway.arrows.push_back({"a", 0, 1});
  oneway.finalize();
  CHECK(strongly_connected_components(oneway).size() == 2);
  CHECK_FALSE(is_strongly_connected(oneway));

  // a lone vertex without a loop carries no closed path
  Quiver lone;
  lone.vertices = {"v"};
  lone.finalize();
  CHECK_FALSE(is_strongly_connected(lone));
}

TEST_CASE("primitive cycles and m(Q)") {
  Quiver loop = fixture_loops(1);
  auto pc = enumerate_primitive_cycles(loop);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0] == Word{0});
  CHECK(max_primitive_degree(loop) == 1);

  Quiver c2 = fixture_c2();
  pc = enumerate_primitive_cycles(c2);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].size() == 2);
  CHECK(max_primitive_degree(c2) == 2);

  Quiver ex = fixture_example31();
  pc = enumerate_primitive_cycles(ex);
  CHECK(pc.size() == 5);  // xa, cz, yb, xyz, cba as rotation classes
  CHECK(max_primitive_degree(ex) == 3);
  for (const auto& c : pc)
    for (int v : word_vertices(ex, c)) CHECK(deg_vertex(ex, c, v) == 1);

  Quiver none;
  none.vertices = {"u", "v"};
  none.arrows.push_back({"a", 0, 1});
  none.finalize();
  CHECK_THROWS_AS(max_primitive_degree(none), BadInput);
}

TEST_CASE("degree accessors follow the conventions") {
  Quiver ex = fixture_example31();
  Word h2 = fixture_h2(ex);
  CHECK(deg_arrow(h2, ex.arrow_index("c")) == 2);
  CHECK(deg_arrow(h2, ex.arrow_index("x")) == 1);
  // u is hit three times by h2
  CHECK(deg_vertex(ex, h2, ex.vertex_index("u")) == 3);
  CHECK(deg_vertex(ex, h2, ex.vertex_index("v")) == 2);
  // heads at u among the first seven arrows of h2: z twice
  CHECK(deg_vertex_second(ex, h2, ex.vertex_index("u")) == 2);
}

TEST_CASE("canonical rotation is the least rotation and is idempotent") {
  Quiver c2 = fixture_c2();
  Word ba{1, 0};
  Word ab{0, 1};
  CHECK(canonicalize(c2, ba) == ab);
  CHECK(canonicalize(c2, ab) == ab);

  Quiver loop = fixture_loops(1);
  CHECK(canonicalize(loop, Word{0}) == Word{0});

  Quiver ex = fixture_example31();
  Word h2 = fixture_h2(ex);
  Word rot = h2;
  std::rotate(rot.begin(), rot.begin() + 3, rot.end());
  CHECK(canonicalize(ex, rot) == canonicalize(ex, h2));
}

TEST_CASE("closed_path_exists implements the flow criterion") {
  Quiver c2 = fixture_c2();
  Multidegree ok(2);
  ok[0] = 1;
  ok[1] = 1;
  CHECK(closed_path_exists(c2, ok));
  Multidegree bad(2);
  bad[0] = 2;
  bad[1] = 1;
  CHECK_FALSE(closed_path_exists(c2, bad));

  Quiver ex = fixture_example31();
  CHECK(closed_path_exists(ex, mdeg(ex, fixture_h2(ex))));
}

TEST_CASE("flow criterion agrees with brute-force word search on small quivers") {
  // Strongly connected quivers with n <= 3, d <= 3, full-support vectors of size <= 6:
  // the criterion holds iff some closed word realizes the vector.
  long long checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for_each_labelled_quiver(n, d, [&](const Quiver& q) {
        if (!is_strongly_connected(q)) return;
        Multidegree delta(q.d());
        std::function<void(int)> rec = [&](int idx) {
          if (idx == q.d()) {
            bool crit = closed_path_exists(q, delta);
            bool brute = !enumerate_closed_words_exact(q, delta).empty();
            ++checked;
            CHECK(crit == brute);
            return;
          }
          long long used = delta.total();
          for (int v = 1; used + v + (q.d() - idx - 1) <= 6; ++v) {
            delta[idx] = v;
            rec(idx + 1);
          }
          delta[idx] = 0;
        };
        rec(0);
      });
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("classify_multidegree follows the support trichotomy") {
  Quiver ex = fixture_example31();
  // mdeg(h1) - 2 mdeg(cz) = x + y + b + a: strongly connected support on u, v, w
  Multidegree delta(ex.d());
  delta[ex.arrow_index("x")] = 1;
  delta[ex.arrow_index("y")] = 1;
  delta[ex.arrow_index("b")] = 1;
  delta[ex.arrow_index("a")] = 1;
  auto cls = classify_multidegree(ex, delta);
  CHECK(cls.kind == VectorKind::indecomposable);
  REQUIRE(cls.components.size() == 1);
  CHECK(cls.components[0].delta == delta);

  // one loop: indecomposable
  Quiver loops = fixture_loops(2);
  Multidegree one(2);
  one[0] = 3;
  CHECK(classify_multidegree(loops, one).kind == VectorKind::indecomposable);

  // two loops at different vertices: decomposable with two components
  Quiver two;
  two.vertices = {"u", "v"};
  two.arrows.push_back({"p", 0, 0});
  two.arrows.push_back({"q", 1, 1});
  two.finalize();
  Multidegree both(2);
  both[0] = 1;
  both[1] = 2;
  auto split = classify_multidegree(two, both);
  CHECK(split.kind == VectorKind::decomposable);
  CHECK(split.components.size() == 2);

  // a crossing arrow makes the vector neither
  Quiver cross;
  cross.vertices = {"u", "v"};
  cross.arrows.push_back({"p", 0, 0});
  cross.arrows.push_back({"q", 1, 1});
  cross.arrows.push_back({"e", 0, 1});
  cross.finalize();
  Multidegree nei(3);
  nei[0] = 1;
  nei[1] = 1;
  nei[2] = 1;
  CHECK(classify_multidegree(cross, nei).kind == VectorKind::neither);

  CHECK_THROWS_AS(classify_multidegree(cross, Multidegree(3)), BadInput);
}

TEST_CASE("closed word enumeration is deterministic and rotation-free") {
  Quiver loop = fixture_loops(1);
  auto words = enumerate_closed_words(loop, 3);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == Word{0});
  CHECK(words[1] == Word{0, 0});
  CHECK(words[2] == Word{0, 0, 0});

  Quiver c2 = fixture_c2();
  Multidegree d22(2);
  d22[0] = 2;
  d22[1] = 2;
  auto exact = enumerate_closed_words_exact(c2, d22);
  REQUIRE(exact.size() == 1);  // abab is the only composable rotation class
  CHECK(exact[0].size() == 4);

  Quiver loops2 = fixture_loops(2);
  auto small = enumerate_closed_words(loops2, 2);
  REQUIRE(small.size() == 5);  // x, y, xx, xy, yy
  CHECK(small[0].size() == 1);
  CHECK(small[1].size() == 1);
  std::set<Word> unique(small.begin(), small.end());
  CHECK(unique.size() == 5);
}

TEST_CASE("euler_word realizes a balanced vector") {
  Quiver ex = fixture_example31();
  Multidegree delta = mdeg(ex, fixture_h2(ex));
  Word w = euler_word(ex, delta);
  CHECK(mdeg(ex, w) == delta);
  CHECK(is_closed_word(ex, w));
}

TEST_CASE("restriction collapses subpaths between marked vertices") {
  Quiver c2 = fixture_c2();
  Word ab{0, 1};
  auto res = restriction(c2, ab, {0});
  CHECK(res.quiver.n() == 1);
  REQUIRE(res.quiver.d() == 1);
  CHECK(res.quiver.arrows[0].tail == res.quiver.arrows[0].head);
  CHECK(res.arrow_paths[0] == ab);

  // V = Ver(h): arrows of h survive as themselves
  auto full = restriction(c2, ab, {0, 1});
  CHECK(full.quiver.d() == 2);
  CHECK(full.quiver.arrows[0].id == "a");

  Quiver ex = fixture_example31();
  Word h2 = fixture_h2(ex);
  auto at_u = restriction(ex, h2, {ex.vertex_index("u")});
  CHECK(at_u.quiver.n() == 1);
  CHECK(at_u.quiver.d() == 3);  // loops cz, cbyz, xa
  for (const auto& arr : at_u.quiver.arrows) CHECK(arr.tail == arr.head);
  CHECK(at_u.image.size() == 3);

  CHECK_THROWS_AS(restriction(c2, ab, {}), BadInput);
}

TEST_CASE("subquiver arrow-count inequality on strongly connected pairs") {
  // #Arr(Q2) - #Arr(Q1) >= #Ver(Q2) - #Ver(Q1) + 1 for strict SC subquivers.
  long long pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_labelled_quiver(n, 3, [&](const Quiver& q2) {
      if (!is_strongly_connected(q2)) return;
      for (unsigned mask = 1; mask + 1 < (1u << q2.d()); ++mask) {
        Multidegree sub(q2.d());
        for (int a = 0; a < q2.d(); ++a) sub[a] = (mask >> a) & 1;
        std::vector<int> amap;
        Quiver q1 = support_quiver(q2, sub, &amap);
        if (q1.d() == 0 || !is_strongly_connected(q1)) continue;
        ++pairs;
        CHECK(q2.d() - q1.d() >= q2.n() - q1.n() + 1);
      }
    });
  }
  CHECK(pairs >= 40);
}

TEST_CASE("m(Q) never exceeds n on the sweep") {
  for (int n = 1; n <= 3; ++n)
    for_each_labelled_quiver(n, 3, [&](const Quiver& q) {
      if (!is_strongly_connected(q)) return;
      CHECK(max_primitive_degree(q) <= q.n());
    });
}

TEST_CASE("indecomposable means exactly: strongly connected support") {
  for (int n = 1; n <= 3; ++n)
    for_each_labelled_quiver(n, 3, [&](const Quiver& q) {
      // all 0/1/2-valued vectors over up to three arrows
      int patterns = 1;
      for (int a = 0; a < q.d(); ++a) patterns *= 3;
      for (int code = 1; code < patterns; ++code) {
        Multidegree delta(q.d());
        int c = code;
        for (int a = 0; a < q.d(); ++a) {
          delta[a] = c % 3;
          c /= 3;
        }
        if (delta.is_zero()) continue;
        auto cls = classify_multidegree(q, delta);
        bool sc = is_strongly_connected(support_quiver(q, delta));
        CHECK((cls.kind == VectorKind::indecomposable) == sc);
      }
    });
}

TEST_CASE("multidegree JSON round-trip") {
  Quiver ex = fixture_example31();
  Multidegree delta = mdeg(ex, fixture_h2(ex));
  auto doc = multidegree_to_json(ex, delta);
  CHECK(doc["c"] == 2);
  CHECK(parse_multidegree(ex, doc) == delta);
  CHECK_THROWS_AS(parse_multidegree(ex, nlohmann::json{{"nope", 1}}), BadInput);
}
