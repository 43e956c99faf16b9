#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "driverset/rational.hpp"

namespace driverset {

// Dense matrix over the rationals.  Indices are 0-based here; vertex-facing
// interfaces translate from 1-based vertex labels at their boundary.
class ExactMatrix {
 public:
  ExactMatrix() = default;

  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols)) {}

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  ExactMatrix transposed() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Rational trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  ExactMatrix operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("matrix product: inner dimensions differ");
    ExactMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
      }
    return out;
  }

  ExactMatrix operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("matrix sum: shapes differ");
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
  }

  // Keeps the listed rows (0-based), in the given order.
  ExactMatrix select_rows(const std::vector<int>& keep) const {
    ExactMatrix out(static_cast<int>(keep.size()), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_row(keep[i]);
      for (int j = 0; j < cols_; ++j) out.at(static_cast<int>(i), j) = at(keep[i], j);
    }
    return out;
  }

  ExactMatrix select_cols(const std::vector<int>& keep) const {
    ExactMatrix out(rows_, static_cast<int>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
      check_col(keep[j]);
      for (int i = 0; i < rows_; ++i) out.at(i, static_cast<int>(j)) = at(i, keep[j]);
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  void check_row(int i) const {
    if (i < 0 || i >= rows_) throw std::invalid_argument("row index out of range");
  }
  void check_col(int j) const {
    if (j < 0 || j >= cols_) throw std::invalid_argument("column index out of range");
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Clears denominators row by row.  det(result) = det(input) * row_scale.
inline std::vector<std::vector<BigInt>> rows_to_integers(const ExactMatrix& m,
                                                         BigInt* row_scale) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  if (row_scale) *row_scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < m.cols(); ++j)
      out[i][j] = m.at(i, j).get_num() * exact_div(l, m.at(i, j).get_den());
    if (row_scale) *row_scale *= l;
  }
  return out;
}

}  // namespace detail

// Rank over the rationals via fraction-free (Bareiss) elimination on the
// denominator-cleared matrix.  Division by the previous pivot is exact:
// every intermediate entry is a minor of the scaled matrix.
inline int rank_exact(const ExactMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  auto a = detail::rows_to_integers(m, nullptr);
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = detail::exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline Rational det_exact(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rational(1);
  BigInt scale = 1;
  auto a = detail::rows_to_integers(m, &scale);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a[i][k]) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Rational(0);
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = detail::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  Rational out(d, scale);
  out.canonicalize();
  return out;
}

}  // namespace driverset
