#pragma once

#include <Eigen/Core>
#include <functional>

namespace tennis {

/// Scalar minimizer on a bracket [a, b] by golden-section search.
/// The bracket must contain a single local minimum; returns the abscissa
/// refined to within `tol`.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-10);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12);

/// Smallest eigenvalue of the symmetric tridiagonal matrix with diagonal
/// `diag` (size n) and off-diagonal `off` (size n-1), located by bisection
/// on the Sturm sequence sign-count.  Exact to ~1e-13 times the Gerschgorin
/// scale of the matrix.
double tridiag_min_eigenvalue(const Eigen::VectorXd& diag,
                              const Eigen::VectorXd& off);

/// Number of eigenvalues of the tridiagonal matrix strictly below `sigma`.
int tridiag_count_below(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                        double sigma);

}  // namespace tennis
