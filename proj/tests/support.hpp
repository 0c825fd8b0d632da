// Hand-rolled random generators shared by the unit and acceptance tests.
#pragma once

#include <random>
#include <vector>

#include "zc/cubic.hpp"
#include "zc/linalg.hpp"

namespace zc::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rand_rational(Rng& rng, long bound = 9) {
  long den = rand_int(rng, 1, 4);
  return Rational(BigInt(rand_int(rng, -bound, bound)), BigInt(den));
}

inline Rational rand_nonzero(Rng& rng, long bound = 9) {
  for (;;) {
    Rational r = rand_rational(rng, bound);
    if (!r.is_zero()) return r;
  }
}

inline Poly rand_poly(Rng& rng, int degree, long bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(rand_rational(rng, bound));
  c.push_back(rand_nonzero(rng, bound));
  return Poly(std::move(c));
}

inline Poly rand_monic(Rng& rng, int degree, long bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(rand_rational(rng, bound));
  c.push_back(Rational(1));
  return Poly(std::move(c));
}

inline AlgElement rand_element(Rng& rng, const EtaleAlgebra& a, long bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < a.degree(); ++i) c.push_back(rand_rational(rng, bound));
  return AlgElement(a, Poly(std::move(c)));
}

/// Product of distinct linear factors (t - r_i) with integer roots.
inline Poly rand_split_squarefree(Rng& rng, int degree) {
  std::vector<long> roots;
  while (static_cast<int>(roots.size()) < degree) {
    long r = rand_int(rng, -20, 20);
    bool dup = false;
    for (long s : roots) dup = dup || s == r;
    if (!dup) roots.push_back(r);
  }
  Poly f{Rational(1)};
  for (long r : roots) f = f * Poly{Rational(-r), Rational(1)};
  return f;
}

inline const std::vector<Exponent>& cubic_monomials() {
  static const std::vector<Exponent> mons = [] {
    std::vector<Exponent> m;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b)
        for (int c = 3 - a - b; c >= 0; --c) m.push_back({a, b, c, 3 - a - b - c});
    return m;
  }();
  return mons;
}

inline Rational monomial_value(const Exponent& e, const std::array<Rational, 4>& x) {
  Rational v(1);
  for (std::size_t i = 0; i < 4; ++i)
    for (int k = 0; k < e[i]; ++k) v *= x[i];
  return v;
}

inline std::array<Rational, 4> rand_point_coords(Rng& rng, long bound = 5) {
  for (;;) {
    std::array<Rational, 4> p;
    bool nonzero = false;
    for (auto& c : p) {
      c = Rational(rand_int(rng, -bound, bound));
      nonzero = nonzero || !c.is_zero();
    }
    if (nonzero) return p;
  }
}

/// Random cubic form (all 20 monomials, small integer coefficients) forced to
/// vanish at the given rational points by solving for as many coefficients.
/// Returns nullopt if the linear conditions are degenerate.
inline std::optional<CubicForm> rand_cubic_through(Rng& rng, const std::vector<std::array<Rational, 4>>& pts,
                                                   long bound = 5) {
  const auto& mons = cubic_monomials();
  std::vector<Rational> coeff(mons.size());
  for (auto& c : coeff) c = Rational(rand_int(rng, -bound, bound));
  const std::size_t k = pts.size();
  // Pick k distinct random monomials to solve for.
  std::vector<std::size_t> free_idx;
  while (free_idx.size() < k) {
    auto i = static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(mons.size()) - 1));
    bool dup = false;
    for (auto j : free_idx) dup = dup || i == j;
    if (!dup) free_idx.push_back(i);
  }
  for (auto i : free_idx) coeff[i] = Rational(0);
  RatMatrix a(static_cast<int>(k), static_cast<int>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a(static_cast<int>(r), static_cast<int>(c)) = monomial_value(mons[free_idx[c]], pts[r]);
    Rational s;
    for (std::size_t m = 0; m < mons.size(); ++m) s += coeff[m] * monomial_value(mons[m], pts[r]);
    rhs[r] = -s;
  }
  auto inv = a.inverse();
  if (!inv) return std::nullopt;
  auto sol = inv->apply(rhs);
  for (std::size_t c = 0; c < k; ++c) coeff[free_idx[c]] = sol[c];
  std::map<Exponent, Rational> m;
  bool any = false;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeff[i].is_zero()) continue;
    m[mons[i]] = coeff[i];
    any = true;
  }
  if (!any) return std::nullopt;
  return CubicForm(m);
}

/// Independent evaluation oracle over Q: sum of coefficient times monomial.
inline Rational naive_eval(const CubicForm& S, const std::array<Rational, 4>& x) {
  Rational s;
  for (const auto& [e, c] : S.coefficients()) s += c * monomial_value(e, x);
  return s;
}

inline bool proportional(const std::array<Rational, 4>& a, const std::array<Rational, 4>& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace zc::testing
