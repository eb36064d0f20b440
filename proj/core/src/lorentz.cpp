#include "cmvar/lorentz.hpp"

#include "cmvar/errors.hpp"
#include "cmvar/linalg.hpp"

#include <cmath>

namespace cmvar {

std::string to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::NegativeCone: return "NegativeCone";
    case ConeRegion::LightCone: return "LightCone";
    case ConeRegion::PositiveRegion: return "PositiveRegion";
  }
  return "?";
}

double lorentz_L(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("Lorentz form needs square matrices of equal size");
  // Tr(AB) without forming the product
  return (a.array() * b.transpose().array()).sum() - a.trace() * b.trace();
}

double lorentz_L(const GramForm& a, const GramForm& b) { return lorentz_L(a.matrix(), b.matrix()); }

double lorentz_hermitian(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("Lorentz form needs square matrices of equal size");
  if (!is_self_adjoint(a, tol) || !is_self_adjoint(b, tol))
    throw SelfAdjointnessViolation("Hermitian Lorentz form needs self-adjoint inputs");
  const Eigen::MatrixXcd bstar = b.adjoint();
  const std::complex<double> v = (a * bstar).trace() - a.trace() * bstar.trace();
  return v.real();
}

double lorentz_quaternionic(const QuatMatrix& a, const QuatMatrix& b, double tol) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("Lorentz form needs square matrices of equal size");
  if (!is_self_adjoint(a, tol) || !is_self_adjoint(b, tol))
    throw SelfAdjointnessViolation("quaternionic Lorentz form needs self-adjoint inputs");
  const double sym = 0.5 * ((a * b).trace() + (b * a).trace());
  return sym - a.trace() * b.trace();
}

LorentzReport cone_classify(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw InputError("cone classification needs a square matrix");
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  const double norm = linalg::spectral_norm_symmetric(sym);
  LorentzReport r;
  r.value = lorentz_L(sym, sym);
  const double threshold = tol * norm * norm;
  if (r.value < -threshold) {
    r.region = ConeRegion::NegativeCone;
  } else if (r.value > threshold) {
    r.region = ConeRegion::PositiveRegion;
  } else {
    r.region = ConeRegion::LightCone;
  }
  r.is_extremal_candidate = linalg::numerical_rank_symmetric(sym, tol) <= 1;
  return r;
}

LorentzReport cone_classify(const GramForm& a, double tol) { return cone_classify(a.matrix(), tol); }

Eigen::MatrixXd lorentz_form_matrix(int n) {
  if (n < 2) throw DomainError("Lorentz form needs n >= 2");
  const int m = n - 1;
  std::vector<Eigen::MatrixXd> basis;
  for (int i = 0; i < m; ++i) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(m, m);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
    for (int j = i + 1; j < m; ++j) {
      Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m, m);
      f(i, j) = f(j, i) = 1.0 / std::sqrt(2.0);
      basis.push_back(std::move(f));
    }
  }
  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd g(size, size);
  for (Eigen::Index p = 0; p < size; ++p)
    for (Eigen::Index q = 0; q < size; ++q)
      g(p, q) = lorentz_L(basis[static_cast<std::size_t>(p)], basis[static_cast<std::size_t>(q)]);
  return g;
}

double hyperbolic_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double laa = lorentz_L(a, a);
  const double lbb = lorentz_L(b, b);
  const double lab = lorentz_L(a, b);
  if (!(laa < 0.0) || !(lbb < 0.0)) throw DomainError("points must lie in the open negative cone");
  if (!(lab < 0.0)) throw DomainError("points lie on opposite sheets of the negative cone");
  const double c = -lab / std::sqrt(laa * lbb);
  return std::acosh(std::max(1.0, c));
}

}  // namespace cmvar
