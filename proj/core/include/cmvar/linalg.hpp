#pragma once

#include <Eigen/Dense>

#include <vector>

namespace cmvar::linalg {

/// Threshold below which an eigenvalue or singular value counts as zero:
/// tol * max(1, scale).
inline double zero_threshold(double tol, double scale) {
  return tol * (scale > 1.0 ? scale : 1.0);
}

double spectral_norm_symmetric(const Eigen::MatrixXd& a);

/// Eigenvalues of a symmetric matrix, ascending.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a);

/// Count of eigenvalues with |lambda| > tol * max(1, ||a||_2).
int numerical_rank_symmetric(const Eigen::MatrixXd& a, double tol);

/// Count of singular values above tol * max(1, sigma_max).
int numerical_rank(const Eigen::MatrixXd& a, double tol);
int numerical_rank(const Eigen::MatrixXcd& a, double tol);

/// Singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

/// Determinant by LU with partial pivoting.
double determinant(const Eigen::MatrixXd& a);

}  // namespace cmvar::linalg
