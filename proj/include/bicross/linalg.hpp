#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bicross/scalar.hpp"

namespace bicross {

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace bicross
