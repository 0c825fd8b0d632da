#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zc/rational.hpp"

namespace zc {

/// Dense univariate polynomial over Q. Index i holds the coefficient of t^i;
/// trailing zeros are always stripped, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const Rational& constant) : c_{constant} { trim(); }

  static Poly monomial(const Rational& coeff, int degree);
  static Poly t() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lead() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(const char* var = "t") const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b. Throws std::domain_error if b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
Bezout poly_xgcd(const Poly& a, const Poly& b);

/// True iff gcd(f, f') is constant. Throws std::domain_error on f == 0.
bool is_squarefree(const Poly& f);

/// f / gcd(f, f'), monic.
Poly squarefree_part(const Poly& f);

/// Rational roots of f (f != 0), ascending, without multiplicity. Uses the
/// rational root test on the primitive integer form; candidates are found by
/// trial division, so the search is only attempted when the constant and
/// leading integer coefficients have at most `max_digits` decimal digits.
/// Returns false in `complete` when the search was skipped.
std::vector<Rational> rational_roots(const Poly& f, bool* complete = nullptr, int max_digits = 12);

}  // namespace zc
