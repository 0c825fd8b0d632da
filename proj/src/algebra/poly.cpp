#include "zc/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zc {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& coeff, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return Poly(std::move(c));
}

const Rational& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || mag != Rational(1)) os << mag << (i > 0 ? "*" : "");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1);
  Rational inv_lead = Rational(1) / b.lead();
  for (int i = da; i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (q.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout poly_xgcd(const Poly& a, const Poly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {};
  Rational k = Rational(1) / r0.lead();
  return {r0 * k, s0 * k, t0 * k};
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_squarefree of zero polynomial");
  return poly_gcd(f, f.derivative()).degree() <= 0;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  Poly g = poly_gcd(f, f.derivative());
  return (f / g).monic();
}

namespace {

// n must fit in 64 bits; callers bound it by digit count.
std::vector<BigInt> positive_divisors(const BigInt& value) {
  unsigned long long n = BigInt(abs(value)).get_ui();
  std::vector<BigInt> small, large;
  for (unsigned long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.emplace_back(static_cast<unsigned long>(d));
      if (d * d != n) large.emplace_back(static_cast<unsigned long>(n / d));
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f, bool* complete, int max_digits) {
  if (f.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  if (complete) *complete = true;
  std::set<Rational> roots;
  // Strip the factor t^k first so the constant term is nonzero.
  std::size_t shift = 0;
  while (f.coeffs()[shift].is_zero()) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  std::vector<Rational> rest(f.coeffs().begin() + static_cast<long>(shift), f.coeffs().end());
  if (rest.size() > 1) {
    BigInt lcm_den = 1;
    for (const auto& c : rest) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& c : rest) ints.push_back(c.num() * (lcm_den / c.den()));
    const BigInt& a0 = ints.front();
    const BigInt& an = ints.back();
    auto digits = [](const BigInt& v) { return static_cast<int>(BigInt(abs(v)).get_str().size()); };
    if (digits(a0) > max_digits || digits(an) > max_digits) {
      if (complete) *complete = false;
    } else {
      Poly g(std::move(rest));
      for (const auto& p : positive_divisors(a0))
        for (const auto& q : positive_divisors(an))
          for (int sgn : {1, -1}) {
            Rational cand(BigInt(sgn * p), q);
            if (g.eval(cand).is_zero()) roots.insert(cand);
          }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace zc
