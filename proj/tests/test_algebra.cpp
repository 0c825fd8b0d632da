#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zc/json_io.hpp"

using namespace zc;
using namespace zc::testing;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

// Schoolbook product and long division on raw coefficient vectors.
std::vector<Rational> oracle_mulmod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    const std::vector<Rational>& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  const std::size_t n = m.size() - 1;
  for (std::size_t top = prod.size(); top-- > n;) {
    Rational q = prod[top] / m[n];
    for (std::size_t k = 0; k <= n; ++k) prod[top - n + k] -= q * m[k];
  }
  prod.resize(std::min(prod.size(), n));
  while (!prod.empty() && prod.back().is_zero()) prod.pop_back();
  return prod;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
  CHECK(Rational::parse("-6/-4").str() == "3/2");
  CHECK_THROWS_AS(Rational::parse("  7 "), InvalidInput);
  CHECK(Rational(BigInt(4), BigInt(-8)).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
  CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  Poly f = P({4, 0, 2});
  CHECK(poly_gcd(f, Poly{}) == f.monic());
  CHECK(poly_gcd(Poly{}, Poly{}).is_zero());

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Poly g = rand_poly(rng, static_cast<int>(rand_int(rng, 0, 3)));
    // h and k coprime: distinct integer roots shifted apart.
    Poly hk = rand_split_squarefree(rng, 4);
    Poly h = P({0, 1}) - Poly(Rational(rand_int(rng, 100, 120)));
    Poly k = hk;
    Poly gcd = poly_gcd(g * h, g * k);
    CHECK(gcd == g.monic());
    CHECK((g * h % gcd).is_zero());
    CHECK((g * k % gcd).is_zero());
  }
}

TEST_CASE("poly_xgcd gives a Bezout identity") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = rand_poly(rng, static_cast<int>(rand_int(rng, 0, 5)));
    Poly b = rand_poly(rng, static_cast<int>(rand_int(rng, 0, 5)));
    Bezout r = poly_xgcd(a, b);
    CHECK(r.s * a + r.t * b == r.g);
    CHECK(r.g == poly_gcd(a, b));
  }
}

TEST_CASE("alg_mul examples and long-division oracle") {
  EtaleAlgebra sqrt2(P({-2, 0, 1}));
  AlgElement t = AlgElement::generator(sqrt2);
  CHECK(t * t == AlgElement(sqrt2, Rational(2)));
  AlgElement a(sqrt2, P({3, 5}));
  CHECK(alg_mul(a, AlgElement::one(sqrt2)) == a);

  EtaleAlgebra cubic(P({-1, -1, 0, 1}));
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    AlgElement x = rand_element(rng, cubic), y = rand_element(rng, cubic);
    auto expect = oracle_mulmod(x.rep().coeffs(), y.rep().coeffs(), cubic.modulus().coeffs());
    CHECK(alg_mul(x, y).rep() == Poly(expect));
  }
}

TEST_CASE("parent mismatch is rejected") {
  EtaleAlgebra a(P({-2, 0, 1})), b(P({-3, 0, 1}));
  try {
    (void)(AlgElement::one(a) + AlgElement::one(b));
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == "ParentMismatch");
  }
}

TEST_CASE("alg_invert") {
  EtaleAlgebra sqrt2(P({-2, 0, 1}));
  CHECK(alg_invert(AlgElement::one(sqrt2)) == AlgElement::one(sqrt2));
  CHECK(alg_invert(AlgElement::generator(sqrt2)) == AlgElement(sqrt2, Poly{Rational(0), Rational(BigInt(1), BigInt(2))}));
  try {
    (void)alg_invert(AlgElement::zero(sqrt2));
    FAIL("expected DivisionByZero");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == "DivisionByZero");
  }

  EtaleAlgebra split(P({-1, 0, 1}));
  try {
    (void)alg_invert(AlgElement(split, P({-1, 1})));
    FAIL("expected ZeroDivisorFound");
  } catch (const ZeroDivisorFound& z) {
    CHECK(z.factor() == P({-1, 1}));
  }
}

TEST_CASE("property: ring axioms, inverses and zero-divisor factors") {
  Rng rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(rand_int(rng, 1, 4));
    Poly m = trial % 2 == 0 ? rand_split_squarefree(rng, n) : rand_monic(rng, n);
    if (!is_squarefree(m)) continue;
    EtaleAlgebra A(m);
    AlgElement a = rand_element(rng, A), b = rand_element(rng, A), c = rand_element(rng, A);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (a.is_zero()) continue;
    std::optional<AlgElement> inv;
    try {
      inv = alg_invert(a);
    } catch (const ZeroDivisorFound& z) {
      const Poly& g = z.factor();
      CHECK(g.lead() == Rational(1));
      CHECK(g.degree() >= 1);
      CHECK(g.degree() < m.degree());
      CHECK((m % g).is_zero());
    }
    if (inv) CHECK(*inv * a == AlgElement::one(A));
  }
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(P({-1, 0, 1})));
  CHECK_FALSE(is_squarefree(P({1, -2, 1})));
  CHECK_THROWS(is_squarefree(Poly{}));
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    // Distinct irreducibles: distinct linear factors times t^2 + c with c > 0 large.
    Poly f = rand_split_squarefree(rng, static_cast<int>(rand_int(rng, 1, 4))) *
             Poly{Rational(rand_int(rng, 1000, 2000)), Rational(0), Rational(1)};
    CHECK(is_squarefree(f));
    Poly r{Rational(-rand_int(rng, 50, 60)), Rational(1)};
    CHECK_FALSE(is_squarefree(f * r * r));
    CHECK(squarefree_part(f * r * r) == (f * r).monic());
  }
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(P({-2, 0, 0, 1})).empty());
  auto r = rational_roots(Poly{Rational(0), Rational(-1), Rational(1)});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rational(0));
  CHECK(r[1] == Rational(1));
  // 6t^2 - 5t + 1 = (2t - 1)(3t - 1)
  auto q = rational_roots(P({1, -5, 6}));
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Rational(BigInt(1), BigInt(3)));
  CHECK(q[1] == Rational(BigInt(1), BigInt(2)));
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    Poly f = rand_split_squarefree(rng, 3);
    CHECK(rational_roots(f).size() == 3);
  }
}

TEST_CASE("ideal_gcd and all_zero_or_split") {
  EtaleAlgebra A(P({0, -1, 0, 1}));  // t^3 - t = t(t-1)(t+1)
  std::vector<AlgElement> zeros{AlgElement::zero(A), AlgElement::zero(A)};
  CHECK(all_zero_or_split(zeros));
  std::vector<AlgElement> unit{AlgElement::zero(A), AlgElement::one(A)};
  CHECK_FALSE(all_zero_or_split(unit));
  std::vector<AlgElement> partial{AlgElement(A, P({0, 1})), AlgElement(A, P({0, -1, 1}))};
  CHECK(ideal_gcd(partial) == P({0, 1}));
  CHECK_THROWS_AS(all_zero_or_split(partial), ZeroDivisorFound);
}

TEST_CASE("json round trips") {
  EtaleAlgebra A(P({-2, 0, 0, 1}));
  AlgElement x(A, Poly{Rational(BigInt(1), BigInt(3)), Rational(-2)});
  Json j = to_json(x);
  CHECK(j.dump() == R"({"modulus":["-2","0","0","1"],"rep":["1/3","-2"]})");
  CHECK(alg_from_json(j) == x);
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InvalidInput);
  CHECK_THROWS_AS(EtaleAlgebra(P({1, -2, 1})), InvalidInput);
  CHECK_THROWS_AS(EtaleAlgebra(P({1, 2})), InvalidInput);
}
