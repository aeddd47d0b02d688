#include "quivar/oracle.hpp"

#include "quivar/graph.hpp"

#include <algorithm>
#include <functional>

namespace quivar {

FieldChoice field_for(Char chi) {
  return chi == Char::two ? FieldChoice::gf(2) : FieldChoice::rationals();
}

FieldChoice parse_field(const std::string& s) {
  if (s == "q" || s == "rationals") return FieldChoice::rationals();
  if (s.rfind("gf", 0) == 0) {
    long p = std::atol(s.c_str() + 2);
    if (p < 2) throw BadInput("bad field: " + s);
    return FieldChoice::gf(p);
  }
  throw BadInput("field must be q, gf2, gf3, ..., got: " + s);
}

std::string field_str(FieldChoice f) {
  return f.kind == FieldKind::rationals ? "q" : "gf" + std::to_string(f.p);
}

namespace {

std::string var_name(const Quiver& q, int var) {
  int arrow = var / 4, rest = var % 4;
  return "x" + std::to_string(rest / 2 + 1) + std::to_string(rest % 2 + 1) + "(" +
         q.arrows[static_cast<std::size_t>(arrow)].id + ")";
}

template <class K>
nlohmann::json poly_json(const Quiver& q, const Poly<K>& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms) {
    nlohmann::json mon = nlohmann::json::object();
    for (const auto& [v, e] : m) mon[var_name(q, v)] = e;
    terms.push_back({{"monomial", mon}, {"coeff", c.str()}});
  }
  return terms;
}

struct Generator {
  Multidegree arrow_degree;  // k * mdeg(u)
  long long degree = 0;      // k * deg(u)
  Word word;
  int k = 1;
};

// Products of >= 2 generators, each of degree < D, with arrow-multidegree summing to
// delta, emitted through `sink`.
template <class Ctx>
void for_each_product(const Ctx& ctx, const Quiver& q, const std::vector<Generator>& gens,
                      const Multidegree& delta,
                      const std::function<void(const Poly<typename Ctx::K>&)>& sink) {
  using K = typename Ctx::K;
  std::vector<Poly<K>> gen_polys(gens.size());
  std::vector<bool> built(gens.size(), false);
  auto gen_poly = [&](std::size_t i) -> const Poly<K>& {
    if (!built[i]) {
      gen_polys[i] = invariant_polynomial_t(ctx, q, gens[i].word, gens[i].k);
      built[i] = true;
    }
    return gen_polys[i];
  };

  Poly<K> one;
  one.add_term(Mon{}, ctx.from_int(1));
  Multidegree remaining = delta;
  // Every generator has non-zero arrow-degree, so a zero remainder ends the product.
  std::function<void(std::size_t, int, const Poly<K>&)> rec = [&](std::size_t idx, int factors,
                                                                  const Poly<K>& acc) {
    if (remaining.is_zero()) {
      if (factors >= 2) sink(acc);
      return;
    }
    if (idx >= gens.size()) return;
    rec(idx + 1, factors, acc);
    const auto& g = gens[idx];
    Poly<K> cur = acc;
    int uses = 0;
    while (remaining.geq(g.arrow_degree)) {
      remaining = remaining.minus(g.arrow_degree);
      ++uses;
      cur = cur * gen_poly(idx);
      rec(idx + 1, factors + uses, cur);
    }
    for (int u = 0; u < uses; ++u) remaining = remaining.plus(g.arrow_degree);
  };
  rec(0, 0, one);
}

template <class Ctx>
bool decomposable_t(const Ctx& ctx, const Quiver& q, const Word& w, int k, const OracleConfig& cfg) {
  require_closed_word(q, w);
  long long D = static_cast<long long>(k) * static_cast<long long>(w.size());
  if (D > cfg.degree_cap)
    throw Inconclusive("invariant degree " + std::to_string(D) + " exceeds oracle cap " +
                       std::to_string(cfg.degree_cap));
  Multidegree delta = mdeg(q, w).scaled(k);

  std::vector<Generator> gens;
  for (const auto& u : enumerate_closed_words(q, static_cast<int>(D) - 1)) {
    Multidegree mu = mdeg(q, u);
    long long du = static_cast<long long>(u.size());
    if (du < D && delta.geq(mu)) gens.push_back({mu, du, u, 1});
    Multidegree mu2 = mu.scaled(2);
    if (2 * du < D && delta.geq(mu2)) gens.push_back({mu2, 2 * du, u, 2});
  }

  auto target = invariant_polynomial_t(ctx, q, w, k);
  SpanBasis<typename Ctx::K> basis;
  bool member = false;
  for_each_product<Ctx>(ctx, q, gens, delta, [&](const Poly<typename Ctx::K>& p) {
    if (member) return;
    basis.insert(p);
    if (basis.contains(target)) member = true;
  });
  return member || basis.contains(target);
}

template <class Ctx>
SubstitutionResult substitution_t(const Ctx& ctx, const Quiver& q, const Word& w,
                                  const std::map<int, ConstMat>& assignment) {
  require_closed_word(q, w);
  using K = typename Ctx::K;
  auto matrix_for = [&](int arrow) -> SymbolicMatrix<K> {
    auto it = assignment.find(arrow);
    ConstMat c = it == assignment.end() ? ConstMat::generic : it->second;
    switch (c) {
      case ConstMat::I: return constant_matrix(ctx, 1, 0, 0, -1);
      case ConstMat::J: return constant_matrix(ctx, 0, 1, -1, 0);
      case ConstMat::E: return constant_matrix(ctx, 1, 0, 0, 1);
      case ConstMat::generic: break;
    }
    return generic_matrix(ctx, arrow);
  };
  SymbolicMatrix<K> acc = matrix_for(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) acc = mat_mul(matrix_for(w[i]), acc);
  Poly<K> tr = mat_trace(acc);
  return {poly_json(q, tr), !tr.is_zero()};
}

}  // namespace

nlohmann::json invariant_polynomial_json(const Quiver& q, const Word& w, int k, FieldChoice f) {
  if (f.kind == FieldKind::rationals) return poly_json(q, invariant_polynomial_t(RatCtx{}, q, w, k));
  return poly_json(q, invariant_polynomial_t(FpCtx{f.p}, q, w, k));
}

bool decomposable(const Quiver& q, const Word& w, int k, FieldChoice f, const OracleConfig& cfg) {
  if (f.kind == FieldKind::rationals) return decomposable_t(RatCtx{}, q, w, k, cfg);
  return decomposable_t(FpCtx{f.p}, q, w, k, cfg);
}

SubstitutionResult substitution_certificate(const Quiver& q, const Word& w,
                                            const std::map<int, ConstMat>& assignment, FieldChoice f) {
  for (const auto& [a, c] : assignment)
    if (a < 0 || a >= q.d()) throw BadInput("assignment references unknown arrow");
  if (f.kind == FieldKind::rationals) return substitution_t(RatCtx{}, q, w, assignment);
  return substitution_t(FpCtx{f.p}, q, w, assignment);
}

std::vector<CrossMismatch> cross_validate(const Quiver& q, int cutoff, Char chi,
                                          const EngineConfig& ecfg, const OracleConfig& ocfg) {
  FieldChoice f = field_for(chi);
  auto words = enumerate_closed_words(q, cutoff);
  std::vector<CrossMismatch> rows(words.size());
  std::vector<char> mismatch(words.size(), 0);
  parallel_for(words.size(), [&](std::size_t i) {
    check_interrupt();
    bool engine = equiv_zero(q, words[i], chi, ecfg).equiv_zero;
    bool oracle = decomposable(q, words[i], 1, f, ocfg);
    if (engine != oracle) {
      rows[i] = {words[i], engine, oracle};
      mismatch[i] = 1;
    }
  });
  std::vector<CrossMismatch> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (mismatch[i]) out.push_back(rows[i]);
  return out;
}

}  // namespace quivar
