#pragma once

#include "quivar/equiv.hpp"
#include "quivar/quiver.hpp"
#include "quivar/util.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace quivar {

// ---------------------------------------------------------------------------
// Coefficient fields: exact rationals (GMP) and GF(p).
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(long x) : v_(x) {}
  explicit Rat(const mpq_class& v) : v_(v) {}

  bool is_zero() const { return v_ == 0; }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat neg() const { return Rat(mpq_class(-v_)); }
  Rat inv() const { return Rat(mpq_class(1 / v_)); }
  bool operator==(const Rat& o) const { return v_ == o.v_; }
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

class Fp {
 public:
  Fp() = default;
  Fp(long x, long p) : p_(p) { v_ = ((x % p) + p) % p; }

  bool is_zero() const { return v_ == 0; }
  Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, p_); }
  Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, p_); }
  Fp neg() const { return Fp(-v_, p_); }
  Fp inv() const {
    // p prime; extended Euclid
    long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      long t = a / b;
      a -= t * b;
      std::swap(a, b);
      x0 -= t * x1;
      std::swap(x0, x1);
    }
    return Fp(x0, p_);
  }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  std::string str() const { return std::to_string(v_); }
  long modulus() const { return p_; }

 private:
  long v_ = 0;
  long p_ = 2;
};

struct RatCtx {
  using K = Rat;
  Rat from_int(long x) const { return Rat(x); }
};
struct FpCtx {
  using K = Fp;
  long p = 2;
  Fp from_int(long x) const { return Fp(x, p); }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials; variables are x_ij(a) encoded as 4*arrow+2*i+j.
// ---------------------------------------------------------------------------

using Mon = std::vector<std::pair<int, int>>;  // sorted (var, exp>0)

inline int mon_total_degree(const Mon& m) {
  int s = 0;
  for (auto& [v, e] : m) s += e;
  return s;
}

struct MonLess {  // graded-lex over the fixed variable order
  bool operator()(const Mon& a, const Mon& b) const {
    int da = mon_total_degree(a), db = mon_total_degree(b);
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first != b[j].first) return a[i].first > b[j].first;  // earlier var, higher power wins
      if (a[i].second != b[j].second) return a[i].second < b[j].second;
      ++i;
      ++j;
    }
    return a.size() < b.size();
  }
};

inline Mon mon_mul(const Mon& a, const Mon& b) {
  Mon r;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      r.push_back(a[i++]);
    else if (a[i].first > b[j].first)
      r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

inline int var_id(int arrow, int i, int j) { return 4 * arrow + 2 * i + j; }

template <class K>
struct Poly {
  std::map<Mon, K, MonLess> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Mon& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c.neg());
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) r.add_term(mon_mul(m1, m2), c1 * c2);
    return r;
  }
  Poly scaled(const K& c) const {
    Poly r;
    for (const auto& [m, k] : terms) r.add_term(m, k * c);
    return r;
  }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

template <class K>
using SymbolicMatrix = std::array<Poly<K>, 4>;  // row-major 2x2

template <class Ctx>
SymbolicMatrix<typename Ctx::K> generic_matrix(const Ctx& ctx, int arrow) {
  SymbolicMatrix<typename Ctx::K> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m[static_cast<std::size_t>(2 * i + j)].add_term(Mon{{var_id(arrow, i, j), 1}}, ctx.from_int(1));
  return m;
}

template <class Ctx>
SymbolicMatrix<typename Ctx::K> constant_matrix(const Ctx& ctx, long a, long b, long c, long d) {
  SymbolicMatrix<typename Ctx::K> m;
  long entries[4] = {a, b, c, d};
  for (int e = 0; e < 4; ++e) m[static_cast<std::size_t>(e)].add_term(Mon{}, ctx.from_int(entries[e]));
  return m;
}

template <class K>
SymbolicMatrix<K> mat_mul(const SymbolicMatrix<K>& a, const SymbolicMatrix<K>& b) {
  SymbolicMatrix<K> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[static_cast<std::size_t>(2 * i + j)] =
          a[static_cast<std::size_t>(2 * i)] * b[static_cast<std::size_t>(j)] +
          a[static_cast<std::size_t>(2 * i + 1)] * b[static_cast<std::size_t>(2 + j)];
  return r;
}

template <class K>
Poly<K> mat_trace(const SymbolicMatrix<K>& m) {
  return m[0] + m[3];
}
template <class K>
Poly<K> mat_det(const SymbolicMatrix<K>& m) {
  return m[0] * m[3] - m[1] * m[2];
}

// Product X_{a_s} ... X_{a_1} along a path (note the reversed multiplication order).
template <class Ctx>
SymbolicMatrix<typename Ctx::K> path_matrix(const Ctx& ctx, const Word& w) {
  SymbolicMatrix<typename Ctx::K> acc = generic_matrix(ctx, w.front());
  for (std::size_t i = 1; i < w.size(); ++i) acc = mat_mul(generic_matrix(ctx, w[i]), acc);
  return acc;
}

// sigma_1 = trace, sigma_2 = determinant of the path product; homogeneous of
// arrow-multidegree k*mdeg(w).
template <class Ctx>
Poly<typename Ctx::K> invariant_polynomial_t(const Ctx& ctx, const Quiver& q, const Word& w, int k) {
  require_closed_word(q, w);
  if (k != 1 && k != 2) throw BadInput("k must be 1 or 2 for dimension (2,...,2)");
  auto m = path_matrix(ctx, w);
  return k == 1 ? mat_trace(m) : mat_det(m);
}

// Incremental echelon basis over K with graded-lex pivots.
template <class K>
struct SpanBasis {
  std::map<Mon, Poly<K>, MonLess> rows;  // pivot monomial -> row with unit pivot

  Poly<K> reduce(Poly<K> p) const {
    while (!p.is_zero()) {
      auto lead = p.terms.rbegin();
      auto it = rows.find(lead->first);
      if (it == rows.end()) break;
      p = p - it->second.scaled(lead->second);
    }
    return p;
  }

  void insert(const Poly<K>& p) {
    Poly<K> r = reduce(p);
    if (r.is_zero()) return;
    auto lead = r.terms.rbegin();
    K inv = lead->second.inv();
    rows.emplace(lead->first, r.scaled(inv));
  }

  bool contains(const Poly<K>& p) const { return reduce(p).is_zero(); }
};

// ---------------------------------------------------------------------------
// Type-erased front end.
// ---------------------------------------------------------------------------

enum class FieldKind { rationals, gf };
struct FieldChoice {
  FieldKind kind = FieldKind::rationals;
  long p = 0;
  static FieldChoice rationals() { return {FieldKind::rationals, 0}; }
  static FieldChoice gf(long prime) { return {FieldKind::gf, prime}; }
};

FieldChoice field_for(Char chi);
FieldChoice parse_field(const std::string& s);  // "q" | "gf2" | "gf3" | "gf<p>"
std::string field_str(FieldChoice f);

struct OracleConfig {
  int degree_cap = 8;  // exceeding it is Inconclusive
};

nlohmann::json invariant_polynomial_json(const Quiver& q, const Word& w, int k, FieldChoice f);

// Membership of sigma_k(w) in the span of products of >= 2 lower-degree generators
// with matching arrow-multidegree, by exact elimination.
bool decomposable(const Quiver& q, const Word& w, int k, FieldChoice f, const OracleConfig& cfg = {});

enum class ConstMat { I, J, E, generic };  // diag(1,-1), [[0,1],[-1,0]], identity

struct SubstitutionResult {
  nlohmann::json polynomial;
  bool nonzero = false;
};
SubstitutionResult substitution_certificate(const Quiver& q, const Word& w,
                                            const std::map<int, ConstMat>& assignment, FieldChoice f);

struct CrossMismatch {
  Word word;
  bool engine_zero = false;
  bool oracle_decomposable = false;
};
// For every necklace of degree <= cutoff: equiv_zero must agree with trace
// decomposability. The returned list is expected to be empty.
std::vector<CrossMismatch> cross_validate(const Quiver& q, int cutoff, Char chi,
                                          const EngineConfig& ecfg = {}, const OracleConfig& ocfg = {});

}  // namespace quivar
