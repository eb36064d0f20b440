#include "cmvar/algebras.hpp"

#include "cmvar/errors.hpp"
#include "cmvar/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cmvar {

using cd = std::complex<double>;

Eigen::Matrix2cd quat_to_complex_block(const Quaternion& x) {
  const cd u(x.a, x.b);
  const cd v(x.c, -x.d);
  Eigen::Matrix2cd m;
  m << u, -std::conj(v), v, std::conj(u);
  return m;
}

Quaternion sigma(const Quaternion& x) {
  // (u, v) -> (conj v, -conj u) with u = a + bi, v = c - di; the block of
  // sigma(x) is the block of x times [[0, 1], [-1, 0]]
  const cd u(x.a, x.b);
  const cd v(x.c, -x.d);
  const cd u2 = std::conj(v);
  const cd v2 = -std::conj(u);
  return {u2.real(), u2.imag(), v2.real(), -v2.imag()};
}

QuatMatrix QuatMatrix::adjoint() const {
  QuatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

double QuatMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i).a;
  return t;
}

double QuatMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, norm(q));
  return m;
}

QuatMatrix operator*(const QuatMatrix& x, const QuatMatrix& y) {
  if (x.cols_ != y.rows_) throw InputError("quaternion matrix size mismatch");
  QuatMatrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t j = 0; j < y.cols_; ++j) {
      Quaternion acc;
      for (std::size_t k = 0; k < x.cols_; ++k) acc += x(i, k) * y(k, j);
      r(i, j) = acc;
    }
  return r;
}

QuatMatrix operator+(const QuatMatrix& x, const QuatMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InputError("quaternion matrix size mismatch");
  QuatMatrix r(x.rows_, x.cols_);
  for (std::size_t k = 0; k < x.data_.size(); ++k) r.data_[k] = x.data_[k] + y.data_[k];
  return r;
}

Eigen::MatrixXcd QuatMatrix::to_complex() const {
  Eigen::MatrixXcd m(2 * rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j)) =
          quat_to_complex_block((*this)(i, j));
  return m;
}

QuatMatrix QuatMatrix::identity(std::size_t n) {
  QuatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = Quaternion::real(1.0);
  return r;
}

QuatMatrix QuatMatrix::from_real(const Eigen::MatrixXd& m) {
  QuatMatrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Quaternion::real(m(i, j));
  return r;
}

QuatMatrix QuatMatrix::from_complex(const Eigen::MatrixXcd& m) {
  QuatMatrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = {m(i, j).real(), m(i, j).imag(), 0.0, 0.0};
  return r;
}

bool is_self_adjoint(const QuatMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double limit = tol * std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (norm(a(i, j) - a(j, i).conj()) > limit) return false;
  return true;
}

bool is_self_adjoint(const Eigen::MatrixXcd& a, double tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  const double limit = tol * std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= limit;
}

int quaternionic_rank(const QuatMatrix& a, double tol) {
  const int r = linalg::numerical_rank(a.to_complex(), tol);
  return (r + 1) / 2;
}

SkewForm::SkewForm(Eigen::MatrixXcd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
    throw InputError("a skew form must be square of even size");
  if (m_.size() > 0) {
    const double limit = tol * std::max(1.0, m_.cwiseAbs().maxCoeff());
    if ((m_ + m_.transpose()).cwiseAbs().maxCoeff() > limit)
      throw InputError("matrix is not skew-symmetric");
  }
}

HermitianGram hermitian_gram(const std::vector<Eigen::VectorXcd>& points) {
  if (points.size() < 2) throw InputError("a configuration needs at least two points");
  const Eigen::Index d = points.front().size();
  bool distinct = false;
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("points have differing dimensions");
    if (!p.allFinite()) throw InputError("coordinates must be finite");
    distinct = distinct || p != points.front();
  }
  if (!distinct) throw InputError("all points of the configuration coincide");
  const auto m = static_cast<Eigen::Index>(points.size() - 1);
  Eigen::MatrixXcd q(m, d);
  for (Eigen::Index i = 0; i < m; ++i)
    q.row(i) = (points[static_cast<std::size_t>(i + 1)] - points.front()).transpose();
  // alpha_ij = sum_k q_ik conj(q_jk)
  Eigen::MatrixXcd a = q * q.adjoint();
  a = 0.5 * (a + a.adjoint()).eval();
  return {std::move(a)};
}

HyperHermitianGram hyper_hermitian_gram(const std::vector<std::vector<Quaternion>>& points) {
  if (points.size() < 2) throw InputError("a configuration needs at least two points");
  const std::size_t d = points.front().size();
  if (d == 0) throw InputError("configuration dimension must be positive");
  bool distinct = false;
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("points have differing dimensions");
    distinct = distinct || p != points.front();
  }
  if (!distinct) throw InputError("all points of the configuration coincide");
  const std::size_t m = points.size() - 1;
  QuatMatrix q(m, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) q(i, k) = points[i + 1][k] - points[0][k];
  QuatMatrix a = q * q.adjoint();
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = Quaternion::real(a(i, i).a);
    for (std::size_t j = i + 1; j < m; ++j) a(j, i) = a(i, j).conj();
  }
  return {std::move(a)};
}

SkewForm sigma_map(const HyperHermitianGram& g, double tol) {
  const QuatMatrix& a = g.entries;
  if (a.rows() != a.cols()) throw SelfAdjointnessViolation("hyper-Hermitian matrix must be square");
  if (!is_self_adjoint(a, tol)) throw SelfAdjointnessViolation("matrix is not hyper-Hermitian");
  const auto m = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    // diagonal entries are real: sigma(r) blocks to [[0, r], [-r, 0]]
    const double r = a(ii, ii).a;
    out(2 * i, 2 * i + 1) = r;
    out(2 * i + 1, 2 * i) = -r;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Eigen::Matrix2cd b = quat_to_complex_block(sigma(a(ii, static_cast<std::size_t>(j))));
      out.block<2, 2>(2 * i, 2 * j) = b;
      out.block<2, 2>(2 * j, 2 * i) = -b.transpose();
    }
  }
  return SkewForm(std::move(out), SkewForm::Unchecked{});
}

int pfaffian_rank(const SkewForm& form, double tol) {
  const Eigen::VectorXd sv = linalg::singular_values(form.matrix());
  if (sv.size() == 0) return 0;
  const double scale = std::max(1.0, sv(0));
  const double threshold = tol * scale;
  // Singular values of a skew form come in equal pairs.
  const double pair_tol = std::sqrt(tol) * scale;
  for (Eigen::Index k = 0; k + 1 < sv.size(); k += 2) {
    if (std::abs(sv(k) - sv(k + 1)) > pair_tol) {
      throw OddRankAnomaly("singular values " + std::to_string(sv(k)) + " and " +
                           std::to_string(sv(k + 1)) + " do not pair up");
    }
  }
  int rank = 0;
  for (Eigen::Index k = 0; k + 1 < sv.size(); k += 2)
    if (0.5 * (sv(k) + sv(k + 1)) > threshold) rank += 2;
  return rank;
}

bool is_quaternionic_real(const SkewForm& form, double tol) {
  const Eigen::MatrixXcd& m = form.matrix();
  const double limit = tol * std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  for (Eigen::Index i = 0; i < m.rows(); i += 2)
    for (Eigen::Index j = 0; j < m.cols(); j += 2) {
      const cd p = m(i, j), q = m(i, j + 1), r = m(i + 1, j), s = m(i + 1, j + 1);
      if (std::abs(p - std::conj(s)) > limit || std::abs(q + std::conj(r)) > limit) return false;
    }
  return true;
}

double oct_herm_det2(double alpha, double beta, const Octonion& x) {
  return alpha * beta - x.norm2();
}

namespace detail {

void throw_not_self_adjoint() {
  throw SelfAdjointnessViolation("octonionic matrix is not self-adjoint");
}

}  // namespace detail

}  // namespace cmvar
