#include "zc/etale.hpp"

namespace zc {

EtaleAlgebra::EtaleAlgebra(Poly modulus) {
  if (modulus.degree() < 1) throw InvalidInput("etale modulus must have degree >= 1");
  if (modulus.lead() != Rational(1)) throw InvalidInput("etale modulus must be monic: " + modulus.str());
  if (!is_squarefree(modulus)) throw InvalidInput("etale modulus must be squarefree: " + modulus.str());
  modulus_ = std::make_shared<const Poly>(std::move(modulus));
}

EtaleAlgebra EtaleAlgebra::rationals() {
  static const EtaleAlgebra q(Poly::t());
  return q;
}

AlgElement::AlgElement(EtaleAlgebra parent, const Poly& rep)
    : parent_(std::move(parent)),
      rep_(rep.degree() < parent_.degree() ? rep : rep % parent_.modulus()) {}

bool AlgElement::is_unit() const {
  return !rep_.is_zero() && poly_gcd(rep_, parent_.modulus()).degree() == 0;
}

namespace {

void check_parent(const AlgElement& a, const AlgElement& b) {
  if (!(a.parent() == b.parent()))
    throw AlgebraError("ParentMismatch", "elements of different algebras: " + a.parent().modulus().str() +
                                             " vs " + b.parent().modulus().str());
}

}  // namespace

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  check_parent(*this, o);
  rep_ += o.rep_;
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  check_parent(*this, o);
  rep_ -= o.rep_;
  return *this;
}

AlgElement& AlgElement::operator*=(const AlgElement& o) {
  check_parent(*this, o);
  rep_ = (rep_ * o.rep_) % parent_.modulus();
  return *this;
}

AlgElement& AlgElement::operator*=(const Rational& s) {
  rep_ *= s;
  return *this;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  check_parent(a, b);
  return a.rep_ == b.rep_;
}

AlgElement AlgElement::reduce_to(const EtaleAlgebra& factor) const {
  if (!(parent_.modulus() % factor.modulus()).is_zero())
    throw AlgebraError("ParentMismatch", factor.modulus().str() + " does not divide " + parent_.modulus().str());
  return AlgElement(factor, rep_ % factor.modulus());
}

Rational AlgElement::evaluate_at(const Rational& root) const {
  if (!parent_.modulus().eval(root).is_zero())
    throw AlgebraError("ParentMismatch", root.str() + " is not a root of " + parent_.modulus().str());
  return rep_.eval(root);
}

AlgElement alg_mul(const AlgElement& a, const AlgElement& b) { return a * b; }

AlgElement alg_invert(const AlgElement& a) {
  if (a.is_zero()) throw AlgebraError("DivisionByZero", "inverse of zero");
  Bezout b = poly_xgcd(a.rep(), a.parent().modulus());
  if (b.g.degree() > 0) throw ZeroDivisorFound(b.g);
  return AlgElement(a.parent(), b.s);
}

Poly ideal_gcd(std::span<const AlgElement> elems) {
  if (elems.empty()) throw std::invalid_argument("ideal_gcd of no elements");
  Poly g = elems.front().parent().modulus();
  for (const auto& e : elems) {
    check_parent(elems.front(), e);
    g = poly_gcd(g, e.rep());
    if (g.degree() == 0) break;
  }
  return g;
}

bool all_zero_or_split(std::span<const AlgElement> elems) {
  Poly g = ideal_gcd(elems);
  if (g.degree() == 0) return false;
  if (g.degree() == elems.front().parent().degree()) return true;
  throw ZeroDivisorFound(g);
}

}  // namespace zc
