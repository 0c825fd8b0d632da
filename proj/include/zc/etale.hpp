#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zc/error.hpp"
#include "zc/poly.hpp"

namespace zc {

/// Raised when an operation needs to invert an element that is a nonzero
/// zero divisor. `factor` is a monic proper factor of the modulus; the caller
/// may split the algebra along it and retry componentwise.
class ZeroDivisorFound : public Error {
 public:
  explicit ZeroDivisorFound(Poly factor)
      : Error("ZeroDivisorFound", "zero divisor found; modulus factor " + factor.str()),
        factor_(std::move(factor)) {}
  const Poly& factor() const { return factor_; }

 private:
  Poly factor_;
};

/// Inverting zero, or mixing elements of different algebras.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Q[t]/(f) with f monic and squarefree. Shares its modulus, so copies are cheap.
class EtaleAlgebra {
 public:
  /// Validates and stores `modulus`. Non-monic input is rejected rather than
  /// rescaled so that the stored modulus is exactly what the caller passed.
  explicit EtaleAlgebra(Poly modulus);

  /// Q itself, presented as Q[t]/(t).
  static EtaleAlgebra rationals();

  const Poly& modulus() const { return *modulus_; }
  int degree() const { return modulus_->degree(); }

  friend bool operator==(const EtaleAlgebra& a, const EtaleAlgebra& b) {
    return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
  }

 private:
  std::shared_ptr<const Poly> modulus_;
};

class AlgElement {
 public:
  AlgElement(EtaleAlgebra parent, const Poly& rep);
  AlgElement(EtaleAlgebra parent, const Rational& value) : AlgElement(std::move(parent), Poly(value)) {}

  static AlgElement zero(const EtaleAlgebra& a) { return AlgElement(a, Poly{}); }
  static AlgElement one(const EtaleAlgebra& a) { return AlgElement(a, Rational(1)); }
  /// The class of t.
  static AlgElement generator(const EtaleAlgebra& a) { return AlgElement(a, Poly::t()); }

  const EtaleAlgebra& parent() const { return parent_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// gcd(rep, modulus) == 1.
  bool is_unit() const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const AlgElement& o);
  AlgElement& operator*=(const Rational& s);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const AlgElement& b) { return a *= b; }
  friend AlgElement operator*(AlgElement a, const Rational& s) { return a *= s; }
  friend AlgElement operator*(const Rational& s, AlgElement a) { return a *= s; }
  friend AlgElement operator-(const AlgElement& a) { return a * Rational(-1); }

  /// Structural equality; throws AlgebraError on parent mismatch.
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  /// Image in the factor algebra Q[t]/(g) for g dividing the modulus.
  AlgElement reduce_to(const EtaleAlgebra& factor) const;
  /// Substitute t = root, where root is a rational root of the modulus.
  Rational evaluate_at(const Rational& root) const;

 private:
  EtaleAlgebra parent_;
  Poly rep_;
};

AlgElement alg_mul(const AlgElement& a, const AlgElement& b);

/// Inverse of a. Throws AlgebraError("DivisionByZero") for a == 0 and
/// ZeroDivisorFound carrying gcd(rep, modulus) for other non-units.
AlgElement alg_invert(const AlgElement& a);

/// Monic generator of the ideal (modulus, rep_1, ..., rep_k). Degree 0 means
/// the elements generate the unit ideal; equal to the modulus means all of
/// them are zero; anything in between is a proper factor to split along.
Poly ideal_gcd(std::span<const AlgElement> elems);

/// Tri-state test used by the geometry layer for conditions such as
/// "all minors vanish": true if every element is zero, false if together
/// they generate the unit ideal, and throws ZeroDivisorFound otherwise.
bool all_zero_or_split(std::span<const AlgElement> elems);

}  // namespace zc
