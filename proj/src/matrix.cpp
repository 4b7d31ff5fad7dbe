#include "ptctl/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ptctl {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
  if (A.n != B.n) throw std::invalid_argument("matmul: dimension mismatch");
  Matrix C(A.n);
  for (int i = 0; i < A.n; ++i) {
    for (int k = 0; k < A.n; ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < A.n; ++j) {
        C(i, j) += aik * B(k, j);
      }
    }
  }
  return C;
}

std::vector<double> matvec(const Matrix& A, std::span<const double> x) {
  if (static_cast<int>(x.size()) != A.n) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  std::vector<double> y(A.n, 0.0);
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < A.n; ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double max_abs_diff(const Matrix& A, const Matrix& B) {
  if (A.n != B.n) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (size_t i = 0; i < A.a.size(); ++i) {
    m = std::max(m, std::fabs(A.a[i] - B.a[i]));
  }
  return m;
}

}  // namespace ptctl
