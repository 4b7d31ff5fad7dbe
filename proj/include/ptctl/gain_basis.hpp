#pragma once

#include <span>
#include <vector>

#include "ptctl/matrix.hpp"

namespace ptctl {

/// Companion-form change-of-basis data for an integrator chain of order n
/// with state-weight exponent rho and growth rate alpha.
///
/// J is the n x n upshift (Jordan) matrix, b1/bn the first/last canonical
/// basis vectors, and D = diag(-rho, 1-rho, ..., n-1-rho). The rows of Q are
/// b1^T (J - alpha*D)^i for i = 0..n-1, which makes Q unit lower triangular
/// (determinant one, always invertible). feedback_row is the next power,
/// b1^T (J - alpha*D)^n: the row that closes the chain when the auxiliary
/// controller is pulled back to plant coordinates.
struct GainBasis {
  int n = 1;
  double rho = 0.0;
  double alpha = 1.0;
  Matrix Q;
  Matrix Q_inv;
  std::vector<double> feedback_row;  ///< b1^T (J - alpha*D)^n
  std::vector<double> d_exponents;   ///< diagonal of D: i-1-rho, i = 1..n
};

/// The gain scaling diagonal K = diag(kappa^(i-1-rho)) and its inverse,
/// evaluated at a concrete gain value.
struct GainDiagonal {
  std::vector<double> entries;
  std::vector<double> inverse;
};

/// Builds the basis. Requires n >= 1 and 0 <= rho <= n; alpha >= 0.
GainBasis build_basis(int n, double rho, double alpha);

/// Evaluates K and K^-1 at gain kappa > 0.
GainDiagonal k_diag(const GainBasis& basis, double kappa);

/// Auxiliary coordinates from plant coordinates: z = (1/beta) Q K^-1 x.
std::vector<double> z_from_x(const GainBasis& basis, double beta, double kappa,
                             std::span<const double> x);

/// Plant coordinates from auxiliary coordinates: x = beta K Q^-1 z.
std::vector<double> x_from_z(const GainBasis& basis, double beta, double kappa,
                             std::span<const double> z);

}  // namespace ptctl
