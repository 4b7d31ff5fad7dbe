#include "ptctl/gain_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace ptctl {

namespace {

/// One multiplication by (J - alpha*D) from the right, acting on a row
/// vector: row' = row * (J - alpha*D). Since J upshifts and D is diagonal,
///   row'[c] = alpha*(rho - c)*row[c] + row[c-1].
std::vector<double> step_row(const std::vector<double>& row, double rho,
                             double alpha) {
  std::vector<double> out(row.size(), 0.0);
  for (size_t c = 0; c < row.size(); ++c) {
    out[c] = alpha * (rho - static_cast<double>(c)) * row[c];
    if (c > 0) out[c] += row[c - 1];
  }
  return out;
}

}  // namespace

GainBasis build_basis(int n, double rho, double alpha) {
  if (n < 1) throw std::invalid_argument("chain order must be at least 1");
  if (!(rho >= 0.0) || !(rho <= static_cast<double>(n)) ||
      !std::isfinite(rho)) {
    throw std::invalid_argument("weight exponent must satisfy 0 <= rho <= n");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("growth rate must be nonnegative and finite");
  }

  GainBasis basis;
  basis.n = n;
  basis.rho = rho;
  basis.alpha = alpha;
  basis.Q = Matrix(n);
  basis.d_exponents.resize(n);
  for (int i = 0; i < n; ++i) {
    basis.d_exponents[i] = static_cast<double>(i) - rho;
  }

  // Rows of Q are b1^T (J - alpha*D)^i; the extra step gives feedback_row.
  std::vector<double> row(n, 0.0);
  row[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) basis.Q(i, j) = row[j];
    row = step_row(row, rho, alpha);
  }
  basis.feedback_row = row;

  // Q is unit lower triangular, so its inverse comes from forward
  // substitution column by column.
  basis.Q_inv = Matrix(n);
  for (int j = 0; j < n; ++j) {
    basis.Q_inv(j, j) = 1.0;
    for (int i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (int k = j; k < i; ++k) s += basis.Q(i, k) * basis.Q_inv(k, j);
      basis.Q_inv(i, j) = -s;
    }
  }
  return basis;
}

GainDiagonal k_diag(const GainBasis& basis, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("gain must be positive and finite");
  }
  GainDiagonal d;
  d.entries.resize(basis.n);
  d.inverse.resize(basis.n);
  for (int i = 0; i < basis.n; ++i) {
    d.entries[i] = std::pow(kappa, basis.d_exponents[i]);
    d.inverse[i] = std::pow(kappa, -basis.d_exponents[i]);
  }
  return d;
}

std::vector<double> z_from_x(const GainBasis& basis, double beta, double kappa,
                             std::span<const double> x) {
  if (static_cast<int>(x.size()) != basis.n) {
    throw std::invalid_argument("z_from_x: state dimension mismatch");
  }
  const GainDiagonal d = k_diag(basis, kappa);
  std::vector<double> z(basis.n, 0.0);
  for (int i = 0; i < basis.n; ++i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) {  // Q is lower triangular
      s += basis.Q(i, j) * d.inverse[j] * x[j];
    }
    z[i] = s / beta;
  }
  return z;
}

std::vector<double> x_from_z(const GainBasis& basis, double beta, double kappa,
                             std::span<const double> z) {
  if (static_cast<int>(z.size()) != basis.n) {
    throw std::invalid_argument("x_from_z: state dimension mismatch");
  }
  const GainDiagonal d = k_diag(basis, kappa);
  std::vector<double> x(basis.n, 0.0);
  for (int i = 0; i < basis.n; ++i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) {
      s += basis.Q_inv(i, j) * z[j];
    }
    x[i] = beta * d.entries[i] * s;
  }
  return x;
}

}  // namespace ptctl
