#include "cmvar/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

namespace cmvar::linalg {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double spectral_norm_symmetric(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  return symmetric_eigenvalues(a).cwiseAbs().maxCoeff();
}

int numerical_rank_symmetric(const Eigen::MatrixXd& a, double tol) {
  if (a.size() == 0) return 0;
  const Eigen::VectorXd ev = symmetric_eigenvalues(a);
  const double threshold = zero_threshold(tol, ev.cwiseAbs().maxCoeff());
  int r = 0;
  for (double v : ev)
    if (std::abs(v) > threshold) ++r;
  return r;
}

namespace {

template <class M>
int rank_from_svd(const M& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(a);
  const auto& sv = svd.singularValues();
  const double threshold = zero_threshold(tol, sv.size() ? sv(0) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXd& a, double tol) { return rank_from_svd(a, tol); }
int numerical_rank(const Eigen::MatrixXcd& a, double tol) { return rank_from_svd(a, tol); }

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues();
}

double determinant(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
}

}  // namespace cmvar::linalg
