#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zc/cubic.hpp"

namespace zc {

enum class PointSource { Enumerated, LineIntersection, ThirdPoint, TangentProcess };

std::string to_string(PointSource s);
PointSource point_source_from_string(const std::string& s);

struct PointRecord {
  ProjPoint point;
  /// Degree of the coordinate algebra.
  int degree = 1;
  /// Max |coordinate| of the primitive integer representative; rational points only.
  std::optional<BigInt> height;
  PointSource source = PointSource::Enumerated;

  /// Rational points are stored by their primitive integer representative
  /// with first nonzero coordinate positive.
  static PointRecord make(const ProjPoint& p, PointSource source);

  Json to_json() const;
  static PointRecord from_json(const Json& j);
};

/// Primitive integer representative of a rational point, first nonzero entry > 0.
std::array<BigInt, 4> primitive_coords(const ProjPoint& p);

/// Rational points of height <= bound, sorted by (height, coordinates).
/// The box is sharded by the first coordinate over `threads` workers
/// (0 means hardware concurrency).
std::vector<PointRecord> enumerate_rational(const CubicForm& S, long height_bound, unsigned threads = 0);

/// The intersection of a rational line with S as one record. When both
/// spanning points lie on S the residual rational point is returned instead.
/// Throws GeometryError(LineInSurface).
PointRecord degree3_from_line(const CubicForm& S, const Line& L);

struct SaturateOptions {
  std::size_t cap = 400;
  /// Pencil axes for the tangent process; empty means the six coordinate lines.
  std::vector<Line> axes;
};

/// Closes the seeds under secants (third_point on pairs of rational points)
/// and tangent residuals (tangent_residual along every axis) for `rounds`
/// rounds. Output keeps insertion order: seeds first, then each round's new
/// points, stopping at the cap. Points over larger algebras are kept but not
/// combined. Genericity failures of single steps are skipped.
/// Throws GeometryError(NotOnSurface) for a seed off S.
std::vector<PointRecord> saturate(const CubicForm& S, const std::vector<PointRecord>& seeds, int rounds,
                                  const SaturateOptions& options = {});

}  // namespace zc
