#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qhyp/quaternion.hpp"

namespace qhyp {

/// Column vector of quaternions; scalars act on the right.
using QVector = std::vector<Quaternion>;

/// Dense row-major quaternionic matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zeros(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix diagonal(std::span<const Quaternion> d);
  /// Columns given as vectors of equal length.
  static QMatrix from_columns(std::span<const QVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  void set_column(std::size_t c, const QVector& v);

  /// Conjugate transpose.
  QMatrix adjoint() const;
  /// Rows and columns restricted to `idx` (0-based, any order).
  QMatrix principal_submatrix(std::span<const std::size_t> idx) const;

  double frobenius_norm() const;
  double max_abs() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, double s);
QVector operator*(const QMatrix& a, const QVector& v);

/// v * s (right scalar multiplication).
QVector scale_right(const QVector& v, const Quaternion& s);
QVector add(const QVector& a, const QVector& b);
/// Euclidean norm of a quaternionic vector.
double euclidean_norm(const QVector& v);

/// blockdiag(a, b).
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

/// Inverse by Gauss-Jordan elimination with partial pivoting (left row
/// operations only). Throws PreconditionViolation on a singular input.
QMatrix inverse(const QMatrix& a);

}  // namespace qhyp
