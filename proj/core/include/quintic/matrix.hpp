#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quintic/scalar.hpp"

namespace quintic {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Builds from rows; all entries must share `f`.
  static Matrix from_rows(Field f, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix reduce(Field target) const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space; size cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Determinant of a square scalar matrix.
Scalar determinant(const Matrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace quintic
