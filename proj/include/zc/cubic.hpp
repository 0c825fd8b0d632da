#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zc/etale.hpp"
#include "zc/json_io.hpp"

namespace zc {

/// Genericity failures and contract violations of the constructions on a
/// cubic surface. `code()` is one of: NotOnSurface, SingularPoint,
/// EqualPoints, LineInSurface, PointOnAxis, SingularSectionPoint,
/// TangentLineInSurface, DegenerateLine.
class GeometryError : public Error {
 public:
  using Error::Error;
};

using Exponent = std::array<int, 4>;
using Coords = std::array<AlgElement, 4>;

/// Homogeneous cubic in X0..X3 with rational coefficients.
class CubicForm {
 public:
  /// Zero coefficients are dropped. Throws InvalidInput if an exponent is not
  /// of total degree 3 or the form is identically zero.
  explicit CubicForm(const std::map<Exponent, Rational>& coeffs);

  static CubicForm fermat();

  const std::map<Exponent, Rational>& coefficients() const { return coeffs_; }

  AlgElement evaluate(const Coords& x) const;
  Coords gradient(const Coords& x) const;

  Json to_json() const;
  static CubicForm from_json(const Json& j);

 private:
  std::map<Exponent, Rational> coeffs_;
};

/// Point of P^3 with coordinates in an etale algebra. The coordinates must
/// generate the unit ideal (nonzero on every factor of the algebra).
class ProjPoint {
 public:
  /// Throws InvalidInput for the zero vector or mixed algebras, and
  /// ZeroDivisorFound when the vector vanishes on a proper factor only.
  explicit ProjPoint(Coords coords);
  static ProjPoint rational(const std::array<Rational, 4>& coords);

  const EtaleAlgebra& algebra() const { return coords_[0].parent(); }
  const Coords& coords() const { return coords_; }
  const AlgElement& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  bool is_rational() const { return algebra().degree() == 1; }

  /// Scales so the last unit coordinate is 1. Throws ZeroDivisorFound when
  /// no single coordinate is a unit.
  ProjPoint normalized() const;
  /// Index of the coordinate set to 1 by normalized().
  int pivot() const;

  /// Rational coordinates (requires a degree-1 algebra).
  std::array<Rational, 4> rational_coords() const;
  /// Image in a factor algebra.
  ProjPoint reduce_to(const EtaleAlgebra& factor) const;
  /// Rational point obtained by substituting a rational root of the modulus.
  ProjPoint specialize(const Rational& root) const;

  /// Equality of normalized coordinates.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

  /// Array of 4 rational strings (degree 1) or 4 algebra-element objects.
  Json to_json() const;
  static ProjPoint from_json(const Json& j);

 private:
  Coords coords_;
};

/// Line spanned by two points over a common algebra.
class Line {
 public:
  /// Throws GeometryError(DegenerateLine) when the points coincide.
  Line(ProjPoint p, ProjPoint q);
  const ProjPoint& p() const { return p_; }
  const ProjPoint& q() const { return q_; }
  Json to_json() const;
  static Line from_json(const Json& j);

 private:
  ProjPoint p_;
  ProjPoint q_;
};

/// The pencil of planes through an axis line.
struct PlanePencil {
  Line axis;
};

/// Linear form a0 X0 + ... + a3 X3.
using LinearForm = Coords;

/// g(s, t) = S(s p + t q) = c[0] s^3 + c[1] s^2 t + c[2] s t^2 + c[3] t^3.
struct BinaryCubic {
  std::array<AlgElement, 4> c;
  bool identically_zero = false;
  /// c[3] == 0, i.e. the second basepoint q lies on S.
  bool root_at_infinity = false;

  /// g(1, t) as a polynomial; rational lines only.
  Poly dehomogenized() const;
};

struct SchemeComponent {
  EtaleAlgebra algebra;
  ProjPoint point;
};

/// A length-3 subscheme of S, represented by a point over an etale algebra of
/// degree <= 3. `components` is a product decomposition of `algebra`: a single
/// entry unless a zero divisor forced a split during a construction.
struct LengthThreeScheme {
  EtaleAlgebra algebra;
  std::vector<SchemeComponent> components;
  std::optional<Line> line;
  /// The intersection was non-reduced; `algebra` is its reduction.
  bool non_reduced = false;
  /// The modulus has a rational root (the algebra is not a field).
  bool split = false;
  /// Rational points of the scheme found from rational roots of the modulus.
  std::vector<ProjPoint> rational_points;

  /// The point of the single component; throws if the scheme was split.
  const ProjPoint& point() const;
  Json to_json() const;
};

AlgElement evaluate(const CubicForm& S, const ProjPoint& p);
bool on_surface(const CubicForm& S, const ProjPoint& p);

BinaryCubic restrict_to_line(const CubicForm& S, const Line& L);

/// Residual intersection of the secant line through x and y.
ProjPoint third_point(const CubicForm& S, const ProjPoint& x, const ProjPoint& y);

/// The plane spanned by the pencil axis and x, normalized like a point.
LinearForm fiber_plane(const PlanePencil& W, const ProjPoint& x);

/// Residual intersection with S of the tangent line at x to the plane
/// section through x of the pencil; on that elliptic section this is x -> -2x.
ProjPoint tangent_residual(const CubicForm& S, const PlanePencil& W, const ProjPoint& x);

/// Intersection scheme of a rational line with S, as the tautological point
/// p + t q over Q[t]/(g). If q lies on S the chart is moved to q + k p.
LengthThreeScheme delta_point(const CubicForm& S, const Line& L);

/// tangent_residual applied to the tautological point of delta_point(S, Wp)
/// over its algebra, splitting the algebra on zero divisors.
LengthThreeScheme psi_minus_one(const CubicForm& S, const PlanePencil& W, const Line& Wp);

/// All 3x3 minors of the coordinate matrix vanish.
bool collinear(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z);

/// Runs f on `point`; whenever f raises ZeroDivisorFound the algebra is split
/// along the factor and f is retried on each part. Results are ordered by the
/// factor in which they were found.
std::vector<SchemeComponent> componentwise(const ProjPoint& point,
                                           const std::function<ProjPoint(const ProjPoint&)>& f);

/// Vector v with v . w = det[a; b; c; w] for every w.
Coords cross3(const Coords& a, const Coords& b, const Coords& c);

/// Lexicographic order on the canonical JSON dump; used for deterministic output.
std::string canonical_key(const ProjPoint& p);

}  // namespace zc
