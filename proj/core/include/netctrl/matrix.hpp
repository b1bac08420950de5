#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace netctrl {

/// Dense row-major matrix of doubles. The only numeric storage type used
/// across the library; column vectors are N x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::size_t n, double value);
  static Matrix column(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix m);

Matrix transpose(const Matrix& m);

/// Frobenius inner product sum_ij a_ij b_ij.
double dot(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& m);
double max_abs(const Matrix& m);
bool is_symmetric(const Matrix& m, double tol);

/// Lower Cholesky factor of a symmetric positive definite matrix.
/// Throws std::runtime_error if a pivot is not strictly positive.
Matrix cholesky(const Matrix& m);

/// Solves m * x = rhs for SPD m through its Cholesky factor.
Matrix cholesky_solve(const Matrix& m, const Matrix& rhs);

}  // namespace netctrl
