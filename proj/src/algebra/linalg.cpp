#include "zc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace zc {

RatMatrix::RatMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  a_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = Rational(1) / m(row, col);
    for (int c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

Rational RatMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = *this;
  Rational det(1);
  for (int col = 0; col < cols_; ++col) {
    int p = col;
    while (p < rows_ && m(p, col).is_zero()) ++p;
    if (p == rows_) return Rational(0);
    if (p != col) {
      for (int c = 0; c < cols_; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(col, col);
      for (int c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Rational(1);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<std::vector<Rational>> RatMatrix::kernel() const {
  RatMatrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(free)] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[static_cast<std::size_t>(piv[i])] = -m(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

}  // namespace zc
