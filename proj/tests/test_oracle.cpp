#include <doctest.h>

#include "quivar/acceptance.hpp"
#include "quivar/bounds.hpp"
#include "quivar/graph.hpp"
#include "quivar/oracle.hpp"
#include "quivar/util.hpp"

using namespace quivar;

TEST_CASE("trace and determinant of a generic loop matrix") {
  Quiver loop = fixture_loops(1);
  RatCtx ctx;
  auto tr = invariant_polynomial_t(ctx, loop, Word{0}, 1);
  CHECK(tr.terms.size() == 2);  // x11 + x22
  auto det = invariant_polynomial_t(ctx, loop, Word{0}, 2);
  CHECK(det.terms.size() == 2);  // x11 x22 - x12 x21

  // trace is rotation invariant
  Quiver c2 = fixture_c2();
  CHECK(invariant_polynomial_t(ctx, c2, Word{0, 1}, 1) == invariant_polynomial_t(ctx, c2, Word{1, 0}, 1));
}

TEST_CASE("determinant along a word is the product of arrow determinants") {
  Quiver c2 = fixture_c2();
  RatCtx ctx;
  auto lhs = invariant_polynomial_t(ctx, c2, Word{0, 1}, 2);
  auto da = mat_det(generic_matrix(ctx, 0));
  auto db = mat_det(generic_matrix(ctx, 1));
  CHECK(lhs == da * db);
}

TEST_CASE("Cayley-Hamilton at 2x2 holds symbolically") {
  Quiver loop = fixture_loops(1);
  RatCtx ctx;
  auto X = generic_matrix(ctx, 0);
  auto X2 = mat_mul(X, X);
  auto t = mat_trace(X);
  auto d = mat_det(X);
  Poly<Rat> one;
  one.add_term(Mon{}, ctx.from_int(1));
  for (int e = 0; e < 4; ++e) {
    Poly<Rat> expected = X2[static_cast<std::size_t>(e)] - t * X[static_cast<std::size_t>(e)];
    if (e == 0 || e == 3) expected = expected + d;
    CHECK(expected.is_zero());
  }
}

TEST_CASE("invariants are multihomogeneous of arrow-degree k*mdeg") {
  Quiver ex = fixture_example31();
  Word cz{ex.arrow_index("c"), ex.arrow_index("z")};
  RatCtx ctx;
  for (int k : {1, 2}) {
    auto p = invariant_polynomial_t(ctx, ex, cz, k);
    for (const auto& [mon, coeff] : p.terms) {
      std::vector<int> per_arrow(static_cast<std::size_t>(ex.d()), 0);
      for (const auto& [var, exp] : mon) per_arrow[static_cast<std::size_t>(var / 4)] += exp;
      for (int a = 0; a < ex.d(); ++a)
        CHECK(per_arrow[static_cast<std::size_t>(a)] == k * deg_arrow(cz, a));
    }
  }
}

TEST_CASE("decomposability of small powers, both fields") {
  Quiver loop = fixture_loops(1);
  Word x{0}, xx{0, 0}, xxx{0, 0, 0};
  // tr(X) generates in degree one
  CHECK_FALSE(decomposable(loop, x, 1, FieldChoice::rationals()));
  // tr(X^2) = tr(X)^2 - 2 det(X): det has degree 2 as well, so it does NOT decompose
  // over the rationals, while mod 2 the det term drops and it does.
  CHECK_FALSE(decomposable(loop, xx, 1, FieldChoice::rationals()));
  CHECK(decomposable(loop, xx, 1, FieldChoice::gf(2)));
  // tr(X^3) = tr(X)^3 - 3 tr(X) det(X) is decomposable over any field
  CHECK(decomposable(loop, xxx, 1, FieldChoice::rationals()));
  CHECK(decomposable(loop, xxx, 1, FieldChoice::gf(2)));
  CHECK(decomposable(loop, xxx, 1, FieldChoice::gf(3)));
  // det(X) itself is a fresh generator in degree two
  CHECK_FALSE(decomposable(loop, x, 2, FieldChoice::rationals()));
  CHECK_FALSE(decomposable(loop, x, 2, FieldChoice::gf(2)));
}

TEST_CASE("tr(XY) is a generator; four-letter products decompose") {
  Quiver loops = fixture_loops(2);
  Word xy{0, 1};
  CHECK_FALSE(decomposable(loops, xy, 1, FieldChoice::rationals()));
  CHECK_FALSE(decomposable(loops, xy, 1, FieldChoice::gf(2)));
  Word xyy{0, 1, 1};
  CHECK(decomposable(loops, xyy, 1, FieldChoice::rationals()));
  Word xyxy{0, 1, 0, 1};
  CHECK(decomposable(loops, xyxy, 1, FieldChoice::rationals()));
  CHECK(decomposable(loops, xyxy, 1, FieldChoice::gf(2)));
}

TEST_CASE("the example's nonvanishing word has an indecomposable trace over gf2") {
  Quiver ex = fixture_example31();
  CHECK_FALSE(decomposable(ex, fixture_h2(ex), 1, FieldChoice::gf(2)));
  CHECK(decomposable(ex, fixture_h1(ex), 1, FieldChoice::gf(2)));
}

TEST_CASE("det of the 2-cycle word is not a polynomial in its trace") {
  Quiver c2 = fixture_c2();
  CHECK_FALSE(decomposable(c2, Word{0, 1}, 2, FieldChoice::rationals()));
  // but tr((ab)^2) = tr(ab)^2 - 2 det(ab) is NOT decomposable either over Q,
  // since det(ab) itself is indecomposable of the same degree
  CHECK_FALSE(decomposable(c2, Word{0, 1, 0, 1}, 1, FieldChoice::rationals()));
  CHECK(decomposable(c2, Word{0, 1, 0, 1}, 1, FieldChoice::gf(2)));
}

TEST_CASE("the degree cap is an explicit inconclusive outcome") {
  Quiver loop = fixture_loops(1);
  OracleConfig tight;
  tight.degree_cap = 3;
  CHECK_THROWS_AS(decomposable(loop, Word{0, 0}, 2, FieldChoice::rationals(), tight), Inconclusive);
}

TEST_CASE("substitution certificates: the constant matrices annihilate traces") {
  Quiver loop = fixture_loops(1);
  auto r = substitution_certificate(loop, Word{0}, {{0, ConstMat::I}}, FieldChoice::rationals());
  CHECK_FALSE(r.nonzero);  // tr(I) = 0

  Quiver loops = fixture_loops(2);
  auto r2 = substitution_certificate(loops, Word{0, 1}, {{0, ConstMat::I}, {1, ConstMat::J}},
                                     FieldChoice::rationals());
  CHECK_FALSE(r2.nonzero);  // tr(IJ) = 0

  auto r3 = substitution_certificate(loops, Word{0, 1}, {{0, ConstMat::I}}, FieldChoice::rationals());
  CHECK(r3.nonzero);
}

TEST_CASE("the base fixture of the reduction argument has a nonzero generic trace") {
  // h0 = x1 y1 x2 y2 . x1 x2 on the 2-cycle with a loop at each vertex
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows.push_back({"x1", 0, 1});
  q.arrows.push_back({"x2", 1, 0});
  q.arrows.push_back({"y1", 1, 1});
  q.arrows.push_back({"y2", 0, 0});
  q.finalize();
  Word h0{0, 2, 1, 3, 0, 1};  // x1 y1 x2 y2 x1 x2
  require_closed_word(q, h0);
  auto r = substitution_certificate(q, h0, {}, FieldChoice::rationals());
  CHECK(r.nonzero);
  // and its trace is a fresh generator over Q
  CHECK_FALSE(decomposable(q, h0, 1, FieldChoice::rationals()));
}

TEST_CASE("determinants of non-primitive words decompose") {
  // sigma_2 along a repeated cycle is a product of lower determinants
  Quiver c2 = fixture_c2();
  CHECK(decomposable(c2, Word{0, 1, 0, 1}, 2, FieldChoice::rationals()));
  Quiver loop = fixture_loops(1);
  CHECK(decomposable(loop, Word{0, 0}, 2, FieldChoice::gf(2)));
}

TEST_CASE("cross validation finds no engine/oracle mismatches on tiny quivers") {
  Quiver loop = fixture_loops(1);
  CHECK(cross_validate(loop, 4, Char::two).empty());
  CHECK(cross_validate(loop, 4, Char::not_two).empty());
  Quiver c2 = fixture_c2();
  CHECK(cross_validate(c2, 4, Char::two).empty());
  CHECK(cross_validate(c2, 4, Char::not_two).empty());
}

TEST_CASE("gf(3) and rational decomposability agree on char-not-2 samples") {
  Quiver loops = fixture_loops(2);
  for (const auto& w : {Word{0, 1}, Word{0, 0}, Word{0, 1, 1}, Word{0, 0, 1, 1}}) {
    CHECK(decomposable(loops, w, 1, FieldChoice::rationals()) ==
          decomposable(loops, w, 1, FieldChoice::gf(3)));
  }
}

TEST_CASE("engine and oracle agree on every strongly connected quiver up to degree 5") {
  std::vector<Quiver> qs;
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d)
      for_each_labelled_quiver(n, d, [&](const Quiver& q) {
        if (is_strongly_connected(q)) qs.push_back(q);
      });
  std::vector<long long> mismatches(qs.size(), 0);
  parallel_for(qs.size(), [&](std::size_t i) {
    for (Char chi : {Char::two, Char::not_two})
      mismatches[i] += static_cast<long long>(cross_validate(qs[i], 5, chi).size());
  });
  long long total = 0;
  for (long long m : mismatches) total += m;
  CHECK(qs.size() == 578);
  CHECK(total == 0);
}

TEST_CASE("polynomial JSON dump is stable and ordered") {
  Quiver loop = fixture_loops(1);
  auto doc = invariant_polynomial_json(loop, Word{0}, 1, FieldChoice::rationals());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["coeff"] == "1");
  CHECK(doc[0]["monomial"].size() == 1);
}
