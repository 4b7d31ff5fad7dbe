#pragma once

#include <span>
#include <vector>

namespace ptctl {

/// Minimal square dense matrix, row-major. Everything in this library is
/// n <= 10 companion-form algebra, so no external linear algebra package is
/// pulled in.
struct Matrix {
  int n = 0;
  std::vector<double> a;  // row-major, size n*n

  Matrix() = default;
  explicit Matrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }

  static Matrix identity(int dim);
};

/// C = A*B. Dimensions must agree.
Matrix matmul(const Matrix& A, const Matrix& B);

/// y = A*x.
std::vector<double> matvec(const Matrix& A, std::span<const double> x);

/// max_{i,j} |A(i,j) - B(i,j)|.
double max_abs_diff(const Matrix& A, const Matrix& B);

}  // namespace ptctl
