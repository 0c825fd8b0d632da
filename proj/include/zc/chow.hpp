#pragma once

#include <array>
#include <string>
#include <vector>

#include "zc/json_io.hpp"
#include "zc/linalg.hpp"
#include "zc/rational.hpp"

namespace zc {

/// Element of Z[alpha, beta, gamma]/(alpha^2, beta^2, gamma^2). Coefficients are
/// indexed by the subset bitmask of generators: bit 0 alpha, bit 1 beta, bit 2 gamma.
class TriClass {
 public:
  static constexpr unsigned kAlpha = 1, kBeta = 2, kGamma = 4;

  TriClass() = default;
  static TriClass one() { return monomial(0); }
  static TriClass monomial(unsigned mask, const BigInt& coeff = 1);
  static TriClass alpha() { return monomial(kAlpha); }
  static TriClass beta() { return monomial(kBeta); }
  static TriClass gamma() { return monomial(kGamma); }

  const BigInt& coeff(unsigned mask) const { return c_.at(mask); }
  /// Part supported on subsets of size k.
  TriClass codim_part(int k) const;
  /// All nonzero coefficients sit on subsets of size k (the zero class counts).
  bool is_homogeneous(int k) const;
  bool is_zero() const;

  TriClass& operator+=(const TriClass& o);
  TriClass& operator-=(const TriClass& o);
  friend TriClass operator+(TriClass a, const TriClass& b) { return a += b; }
  friend TriClass operator-(TriClass a, const TriClass& b) { return a -= b; }
  friend TriClass operator-(const TriClass& a) { return TriClass() - a; }
  friend TriClass operator*(const TriClass& a, const TriClass& b);
  friend TriClass operator*(const BigInt& k, TriClass a);
  friend bool operator==(const TriClass&, const TriClass&) = default;

  /// e.g. "1 + alpha + alpha*beta", "0" for the zero class.
  std::string str() const;
  Json to_json() const;

 private:
  std::array<BigInt, 8> c_{};
};

TriClass tri_mul(const TriClass& a, const TriClass& b);

/// deg O_{C_x}(1), deg O_{C_y}(1), deg O_{C_z}(1).
struct CurveDegrees {
  long x = 6, y = 6, z = 6;
};

/// Total Segre class of a sum of line bundles with the given first Chern classes:
/// the product over the summands of 1 - c + c^2 - c^3.
TriClass segre_total(const std::array<TriClass, 3>& c1);
/// Codimension-2 part of segre_total.
TriClass segre_s2(const std::array<TriClass, 3>& c1);

/// First Chern classes of pr_x^* O(-1) + pr_y^* O(-1) + pr_z^* O(-1).
std::array<TriClass, 3> dual_tautological_bundle();

/// deg(alpha * c) with alpha*beta*gamma of degree x*y*z. Throws InvalidInput
/// unless c is homogeneous of codimension 2.
BigInt degree_wrt_Hx(const TriClass& c, const CurveDegrees& degs);

/// The intersection number C_y . C_z used for the diagonal locus; a pinned constant.
inline constexpr long kCyCzIntersection = 12;

/// Degree of the diagonal-locus curve against H_x: (C_y . C_z) * deg_x.
BigInt diagonal_locus_degree(const CurveDegrees& degs, long cy_cz = kCyCzIntersection);

/// JSON report with both degrees and the strict inequality.
Json chow_report(const CurveDegrees& degs = {});

// ---------------------------------------------------------------- pencils

/// A line in P^3 given by two spanning rational vectors.
using RatVec4 = std::array<Rational, 4>;
struct RatLine {
  RatVec4 a, b;
};

/// X0 = X1 = 0, X2 = X3 = 0, X0 - X2 = X1 - X3 = 0.
std::array<RatLine, 3> standard_skew_lines();

/// Projective transformation M (acting on column vectors) taking the three
/// pairwise skew lines to the standard triple. Throws InvalidInput if two of
/// the lines meet or a line is degenerate.
RatMatrix normalize_skew_triple(const std::array<RatLine, 3>& lines);

/// Coefficient rows of u0 X0 + u1 X1, v2 X2 + v3 X3 and w (X0 - X2) + w' (X1 - X3).
RatMatrix pencil_planes(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v,
                        const std::array<Rational, 2>& w);
/// Rank of the 3x4 matrix above; the three planes lie in a pencil iff it is 2.
int pencil_rank(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v, const std::array<Rational, 2>& w);

struct PencilSolution {
  std::array<Rational, 2> u, v, w;
  int rank = 0;
  /// (u0:u1) = (v2:v3) = (w:w').
  bool diagonal = false;
};

/// For the standard triple and a parameter u, solves exactly for the planes
/// through the other two lines completing a pencil. Throws InvalidInput when
/// `lines` is not the standard triple (as sets of points) or u = 0.
PencilSolution pencil_condition_solve(const std::array<RatLine, 3>& lines, const std::array<Rational, 2>& u);

}  // namespace zc
