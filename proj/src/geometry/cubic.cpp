#include "zc/cubic.hpp"

#include <numeric>

namespace zc {

namespace {

AlgElement power(const AlgElement& x, int e) {
  AlgElement r = AlgElement::one(x.parent());
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_same_algebra(const ProjPoint& a, const ProjPoint& b) {
  if (!(a.algebra() == b.algebra()))
    throw InvalidInput("points over different algebras: " + a.algebra().modulus().str() + " vs " +
                       b.algebra().modulus().str());
}

std::vector<AlgElement> minors2(const Coords& a, const Coords& b) {
  std::vector<AlgElement> m;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m.push_back(a[i] * b[j] - a[j] * b[i]);
  return m;
}

AlgElement det3(const AlgElement& a0, const AlgElement& a1, const AlgElement& a2, const AlgElement& b0,
                const AlgElement& b1, const AlgElement& b2, const AlgElement& c0, const AlgElement& c1,
                const AlgElement& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

AlgElement dot(const Coords& a, const Coords& b) {
  AlgElement s = a[0] * b[0];
  for (std::size_t i = 1; i < 4; ++i) s += a[i] * b[i];
  return s;
}

Coords combine(const AlgElement& a, const Coords& x, const AlgElement& b, const Coords& y) {
  return {a * x[0] + b * y[0], a * x[1] + b * y[1], a * x[2] + b * y[2], a * x[3] + b * y[3]};
}

void require_on_surface(const CubicForm& S, const ProjPoint& x, const char* what) {
  if (!evaluate(S, x).is_zero())
    throw GeometryError("NotOnSurface", std::string(what) + " does not lie on the surface");
}

void require_smooth(const CubicForm& S, const ProjPoint& x, const char* what) {
  Coords g = S.gradient(x.coords());
  if (all_zero_or_split(g)) throw GeometryError("SingularPoint", std::string("surface is singular at ") + what);
}

}  // namespace

// ---------------------------------------------------------------- CubicForm

CubicForm::CubicForm(const std::map<Exponent, Rational>& coeffs) {
  for (const auto& [e, c] : coeffs) {
    int total = 0;
    for (int k : e) {
      if (k < 0) throw InvalidInput("negative exponent in cubic form");
      total += k;
    }
    if (total != 3) throw InvalidInput("monomial of total degree " + std::to_string(total) + " in cubic form");
    if (!c.is_zero()) coeffs_[e] = c;
  }
  if (coeffs_.empty()) throw InvalidInput("cubic form is identically zero");
}

CubicForm CubicForm::fermat() {
  return CubicForm({{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}, {{0, 0, 0, 3}, 1}});
}

AlgElement CubicForm::evaluate(const Coords& x) const {
  const EtaleAlgebra& A = x[0].parent();
  std::array<std::array<std::optional<AlgElement>, 4>, 4> pw;
  auto pow_of = [&](int i, int e) -> const AlgElement& {
    auto& slot = pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
    if (!slot) slot = power(x[static_cast<std::size_t>(i)], e);
    return *slot;
  };
  AlgElement sum = AlgElement::zero(A);
  for (const auto& [e, c] : coeffs_) {
    AlgElement term(A, c);
    for (int i = 0; i < 4; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) term *= pow_of(i, e[static_cast<std::size_t>(i)]);
    sum += term;
  }
  return sum;
}

Coords CubicForm::gradient(const Coords& x) const {
  const EtaleAlgebra& A = x[0].parent();
  Coords g{AlgElement::zero(A), AlgElement::zero(A), AlgElement::zero(A), AlgElement::zero(A)};
  for (const auto& [e, c] : coeffs_) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      AlgElement term(A, c * Rational(e[i]));
      for (std::size_t k = 0; k < 4; ++k) {
        int ek = e[k] - (k == i ? 1 : 0);
        if (ek > 0) term *= power(x[k], ek);
      }
      g[i] += term;
    }
  }
  return g;
}

Json CubicForm::to_json() const {
  Json mons = Json::array();
  for (const auto& [e, c] : coeffs_) mons.push_back({{"exp", e}, {"coeff", c.str()}});
  return {{"vars", 4}, {"degree", 3}, {"monomials", mons}};
}

CubicForm CubicForm::from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("surface must be a JSON object");
  if (j.value("vars", 0) != 4) throw InvalidInput("surface must have \"vars\": 4");
  if (j.value("degree", 0) != 3) throw InvalidInput("surface must have \"degree\": 3");
  if (!j.contains("monomials") || !j.at("monomials").is_array())
    throw InvalidInput("surface needs a \"monomials\" array");
  std::map<Exponent, Rational> coeffs;
  for (const auto& m : j.at("monomials")) {
    if (!m.contains("exp") || !m.at("exp").is_array() || m.at("exp").size() != 4)
      throw InvalidInput("monomial needs a 4-entry \"exp\" array");
    Exponent e{};
    for (std::size_t i = 0; i < 4; ++i) e[i] = m.at("exp")[i].get<int>();
    coeffs[e] += rational_from_json(m.at("coeff"));
  }
  return CubicForm(coeffs);
}

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(Coords coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (!(c.parent() == coords_[0].parent())) throw InvalidInput("point coordinates over different algebras");
  Poly g = ideal_gcd(coords_);
  if (g.degree() == algebra().degree()) throw InvalidInput("zero vector is not a projective point");
  if (g.degree() > 0) throw ZeroDivisorFound(g);
}

ProjPoint ProjPoint::rational(const std::array<Rational, 4>& c) {
  const EtaleAlgebra q = EtaleAlgebra::rationals();
  return ProjPoint(Coords{AlgElement(q, c[0]), AlgElement(q, c[1]), AlgElement(q, c[2]), AlgElement(q, c[3])});
}

int ProjPoint::pivot() const {
  for (int i = 3; i >= 0; --i)
    if (coords_[static_cast<std::size_t>(i)].is_unit()) return i;
  for (const auto& c : coords_)
    if (!c.is_zero()) throw ZeroDivisorFound(poly_gcd(c.rep(), algebra().modulus()));
  throw InvalidInput("zero vector is not a projective point");
}

ProjPoint ProjPoint::normalized() const {
  AlgElement inv = alg_invert(coords_[static_cast<std::size_t>(pivot())]);
  return ProjPoint(Coords{coords_[0] * inv, coords_[1] * inv, coords_[2] * inv, coords_[3] * inv});
}

std::array<Rational, 4> ProjPoint::rational_coords() const {
  if (!is_rational()) throw InvalidInput("point is not rational");
  std::array<Rational, 4> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = coords_[i].rep().coeff(0);
  return r;
}

ProjPoint ProjPoint::reduce_to(const EtaleAlgebra& factor) const {
  return ProjPoint(Coords{coords_[0].reduce_to(factor), coords_[1].reduce_to(factor), coords_[2].reduce_to(factor),
                          coords_[3].reduce_to(factor)});
}

ProjPoint ProjPoint::specialize(const Rational& root) const {
  return rational({coords_[0].evaluate_at(root), coords_[1].evaluate_at(root), coords_[2].evaluate_at(root),
                   coords_[3].evaluate_at(root)});
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (!(a.algebra() == b.algebra())) return false;
  ProjPoint na = a.normalized(), nb = b.normalized();
  for (std::size_t i = 0; i < 4; ++i)
    if (!(na.coords_[i] == nb.coords_[i])) return false;
  return true;
}

Json ProjPoint::to_json() const {
  Json arr = Json::array();
  for (const auto& c : coords_) {
    if (is_rational())
      arr.push_back(c.rep().coeff(0).str());
    else
      arr.push_back(zc::to_json(c));
  }
  return arr;
}

ProjPoint ProjPoint::from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput("point must be an array of 4 coordinates: " + j.dump());
  bool all_rational = true;
  for (const auto& e : j) all_rational = all_rational && !e.is_object();
  if (all_rational)
    return rational({rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                     rational_from_json(j[3])});
  return ProjPoint(Coords{alg_from_json(j[0]), alg_from_json(j[1]), alg_from_json(j[2]), alg_from_json(j[3])});
}

std::string canonical_key(const ProjPoint& p) { return p.to_json().dump(); }

// ---------------------------------------------------------------- Line

Line::Line(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
  check_same_algebra(p_, q_);
  if (all_zero_or_split(minors2(p_.coords(), q_.coords())))
    throw GeometryError("DegenerateLine", "line basepoints coincide");
}

Json Line::to_json() const { return Json::array({p_.to_json(), q_.to_json()}); }

Line Line::from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("line must be an array of two points");
  return Line(ProjPoint::from_json(j[0]), ProjPoint::from_json(j[1]));
}

// ---------------------------------------------------------------- constructions

Coords cross3(const Coords& a, const Coords& b, const Coords& c) {
  // Cofactor expansion of det[a; b; c; w] along w.
  auto minor = [&](int skip) {
    std::array<std::size_t, 3> k{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (static_cast<int>(i) != skip) k[n++] = i;
    return det3(a[k[0]], a[k[1]], a[k[2]], b[k[0]], b[k[1]], b[k[2]], c[k[0]], c[k[1]], c[k[2]]);
  };
  return {-minor(0), minor(1), -minor(2), minor(3)};
}

AlgElement evaluate(const CubicForm& S, const ProjPoint& p) { return S.evaluate(p.coords()); }

bool on_surface(const CubicForm& S, const ProjPoint& p) { return evaluate(S, p).is_zero(); }

Poly BinaryCubic::dehomogenized() const {
  std::vector<Rational> r;
  for (const auto& x : c) {
    if (x.parent().degree() != 1) throw InvalidInput("dehomogenized form requires a rational line");
    r.push_back(x.rep().coeff(0));
  }
  return Poly(std::move(r));
}

BinaryCubic restrict_to_line(const CubicForm& S, const Line& L) {
  // Polarization: S(sp + tq) = S(p) s^3 + (grad S(p).q) s^2 t + (grad S(q).p) s t^2 + S(q) t^3.
  const Coords& p = L.p().coords();
  const Coords& q = L.q().coords();
  BinaryCubic g{{S.evaluate(p), dot(S.gradient(p), q), dot(S.gradient(q), p), S.evaluate(q)}};
  g.identically_zero = g.c[0].is_zero() && g.c[1].is_zero() && g.c[2].is_zero() && g.c[3].is_zero();
  g.root_at_infinity = g.c[3].is_zero();
  return g;
}

ProjPoint third_point(const CubicForm& S, const ProjPoint& x, const ProjPoint& y) {
  check_same_algebra(x, y);
  require_on_surface(S, x, "x");
  require_on_surface(S, y, "y");
  if (all_zero_or_split(minors2(x.coords(), y.coords())))
    throw GeometryError("EqualPoints", "third_point needs two distinct points; use tangent_residual");
  require_smooth(S, x, "x");
  require_smooth(S, y, "y");
  // With S(x) = S(y) = 0 the restricted form is s t (c1 s + c2 t); the third
  // root is (s : t) = (c2 : -c1).
  AlgElement c1 = dot(S.gradient(x.coords()), y.coords());
  AlgElement c2 = dot(S.gradient(y.coords()), x.coords());
  std::array<AlgElement, 2> cs{c1, c2};
  if (all_zero_or_split(cs)) throw GeometryError("LineInSurface", "the line through x and y lies in the surface");
  return ProjPoint(combine(c2, x.coords(), -c1, y.coords())).normalized();
}

LinearForm fiber_plane(const PlanePencil& W, const ProjPoint& x) {
  check_same_algebra(W.axis.p(), x);
  Coords plane = cross3(W.axis.p().coords(), W.axis.q().coords(), x.coords());
  if (all_zero_or_split(plane)) throw GeometryError("PointOnAxis", "point lies on the pencil axis");
  return ProjPoint(plane).normalized().coords();
}

ProjPoint tangent_residual(const CubicForm& S, const PlanePencil& W, const ProjPoint& x) {
  require_on_surface(S, x, "x");
  require_smooth(S, x, "x");
  LinearForm plane = fiber_plane(W, x);
  Coords grad = S.gradient(x.coords());
  if (all_zero_or_split(minors2(plane, grad)))
    throw GeometryError("SingularSectionPoint", "the fiber plane is tangent to the surface at x");
  // Second point of the tangent line: where it meets the coordinate plane
  // X_k = 0, with x_k a unit so that the two points differ.
  ProjPoint xn = x.normalized();
  const EtaleAlgebra& A = x.algebra();
  Coords ek{AlgElement::zero(A), AlgElement::zero(A), AlgElement::zero(A), AlgElement::zero(A)};
  ek[static_cast<std::size_t>(xn.pivot())] = AlgElement::one(A);
  Coords n = cross3(plane, grad, ek);
  // S(sx + tn) = t^2 (c2 s + c3 t): x is a double root.
  AlgElement c2 = dot(S.gradient(n), xn.coords());
  AlgElement c3 = S.evaluate(n);
  std::array<AlgElement, 2> cs{c2, c3};
  if (all_zero_or_split(cs)) throw GeometryError("TangentLineInSurface", "the tangent line lies in the surface");
  return ProjPoint(combine(c3, xn.coords(), -c2, n)).normalized();
}

bool collinear(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) {
  check_same_algebra(x, y);
  check_same_algebra(x, z);
  return all_zero_or_split(cross3(x.coords(), y.coords(), z.coords()));
}

std::vector<SchemeComponent> componentwise(const ProjPoint& point,
                                           const std::function<ProjPoint(const ProjPoint&)>& f) {
  std::vector<SchemeComponent> out;
  std::function<void(const ProjPoint&)> run = [&](const ProjPoint& pt) {
    std::optional<Poly> factor;
    try {
      out.push_back({pt.algebra(), f(pt)});
    } catch (const ZeroDivisorFound& z) {
      factor = z.factor();
    }
    if (!factor) return;
    const Poly& m = pt.algebra().modulus();
    if (factor->degree() <= 0 || factor->degree() >= m.degree() || !(m % *factor).is_zero())
      throw ZeroDivisorFound(*factor);
    EtaleAlgebra left(factor->monic());
    EtaleAlgebra right((m / *factor).monic());
    run(pt.reduce_to(left));
    run(pt.reduce_to(right));
  };
  run(point);
  return out;
}

const ProjPoint& LengthThreeScheme::point() const {
  if (components.size() != 1) throw InvalidInput("scheme has been split into several components");
  return components.front().point;
}

Json LengthThreeScheme::to_json() const {
  Json comps = Json::array();
  for (const auto& c : components) comps.push_back({{"modulus", zc::to_json(c.algebra.modulus())}, {"point", c.point.to_json()}});
  Json rps = Json::array();
  for (const auto& p : rational_points) rps.push_back(p.to_json());
  Json j;
  j["modulus"] = zc::to_json(algebra.modulus());
  j["degree"] = algebra.degree();
  j["non_reduced"] = non_reduced;
  j["split"] = split;
  j["components"] = comps;
  j["rational_points"] = rps;
  if (line) j["line"] = line->to_json();
  return j;
}

LengthThreeScheme delta_point(const CubicForm& S, const Line& L) {
  if (!L.p().is_rational() || !L.q().is_rational()) throw InvalidInput("delta_point needs a rational line");
  BinaryCubic g = restrict_to_line(S, L);
  if (g.identically_zero) throw GeometryError("LineInSurface", "the line lies in the surface");
  Line chart = L;
  const EtaleAlgebra Q = EtaleAlgebra::rationals();
  // Move the chart until its point at infinity is off S (at most 3 k fail).
  for (int k = 1; g.root_at_infinity; ++k) {
    chart = Line(L.p(), ProjPoint(combine(AlgElement(Q, Rational(k)), L.p().coords(), AlgElement::one(Q), L.q().coords())));
    g = restrict_to_line(S, chart);
  }
  Poly f = g.dehomogenized().monic();
  Poly reduced = squarefree_part(f);
  EtaleAlgebra A(reduced);
  AlgElement t = AlgElement::generator(A);
  auto lift = [&](std::size_t i) {
    return AlgElement(A, chart.p().coords()[i].rep()) + t * AlgElement(A, chart.q().coords()[i].rep());
  };
  Coords pt{lift(0), lift(1), lift(2), lift(3)};

  LengthThreeScheme out{A, {{A, ProjPoint(pt)}}, L, false, false, {}};
  out.non_reduced = reduced.degree() < f.degree();
  for (const auto& r : rational_roots(reduced)) out.rational_points.push_back(out.point().specialize(r).normalized());
  out.split = !out.rational_points.empty() && A.degree() > 1;
  return out;
}

LengthThreeScheme psi_minus_one(const CubicForm& S, const PlanePencil& W, const Line& Wp) {
  LengthThreeScheme delta = delta_point(S, Wp);
  const EtaleAlgebra& A = delta.algebra;
  // Lift the (rational) axis into the algebra of the tautological point.
  auto lift = [](const ProjPoint& p, const EtaleAlgebra& B) {
    auto r = p.rational_coords();
    return ProjPoint(Coords{AlgElement(B, r[0]), AlgElement(B, r[1]), AlgElement(B, r[2]), AlgElement(B, r[3])});
  };
  if (!W.axis.p().is_rational() || !W.axis.q().is_rational()) throw InvalidInput("pencil axis must be rational");
  auto comps = componentwise(delta.point(), [&](const ProjPoint& x) {
    PlanePencil Wx{Line(lift(W.axis.p(), x.algebra()), lift(W.axis.q(), x.algebra()))};
    return tangent_residual(S, Wx, x);
  });
  LengthThreeScheme out{A, std::move(comps), std::nullopt, false, false, {}};
  out.non_reduced = delta.non_reduced;
  out.split = delta.split;
  for (const auto& c : out.components)
    for (const auto& r : rational_roots(c.algebra.modulus()))
      out.rational_points.push_back(c.point.specialize(r).normalized());
  return out;
}

}  // namespace zc
