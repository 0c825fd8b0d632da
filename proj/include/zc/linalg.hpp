#pragma once

#include <optional>
#include <vector>

#include "zc/rational.hpp"

namespace zc {

/// Small dense matrix over Q for exact rank/solve/inverse computations.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  explicit RatMatrix(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  int rank() const;
  /// Square matrices only.
  Rational determinant() const;
  std::optional<RatMatrix> inverse() const;
  /// Basis of the right kernel, as column vectors.
  std::vector<std::vector<Rational>> kernel() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

 private:
  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

}  // namespace zc
