#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's own code paths.

#include <cmvar/algebras.hpp>
#include <cmvar/exact.hpp>

#include <Eigen/Dense>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T total(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const T term = m[0][c] * cofactor_det(minor);
    total = (c % 2 == 0) ? T(total + term) : T(total - term);
  }
  return total;
}

inline double cofactor_det(const Eigen::MatrixXd& a) {
  std::vector<std::vector<double>> m(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m[static_cast<std::size_t>(i)].push_back(a(i, j));
  return cofactor_det(m);
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Degree of the rank <= 2 symmetric locus via half the central binomial.
inline BigInt cm2_degree(long n) { return choose(2 * n - 4, n - 2) / 2; }

// Real symmetric determinantal degree: product over k of C(n-1+k, n-d-1-k) / C(2k+1, k).
inline Rational symmetric_degree(long d, long n) {
  Rational r = 1;
  for (long k = 0; k <= n - d - 2; ++k) r *= Rational(choose(n - 1 + k, n - d - 1 - k), choose(2 * k + 1, k));
  return r;
}

// Skew determinantal degree, ratio form: prod_{1<=i<=j<=m} (2d+i+j)/(i+j), m = 2n-2d-3.
inline Rational pfaffian_ratio_form(long d, long n) {
  const long m = 2 * n - 2 * d - 3;
  Rational r = 1;
  for (long i = 1; i <= m; ++i)
    for (long j = i; j <= m; ++j) r *= Rational(2 * d + i + j, i + j);
  return r;
}

// Laman test by brute force over every vertex subset.
inline bool laman_by_subsets(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<long>(edges.size()) != 2L * n - 3) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2) continue;
    int spanned = 0;
    for (const auto& [a, b] : edges)
      if ((mask >> a & 1u) && (mask >> b & 1u)) ++spanned;
    if (spanned > 2 * k - 3) return false;
  }
  return true;
}

inline std::vector<double> squared_distances(const Eigen::MatrixXd& p) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = i + 1; j < p.rows(); ++j) out.push_back((p.row(i) - p.row(j)).squaredNorm());
  return out;
}

inline Eigen::MatrixXd random_points(std::mt19937_64& rng, int n, int d, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::MatrixXd p(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) p(i, k) = g(rng);
  return p;
}

inline cmvar::Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng), g(rng), g(rng)};
}

inline cmvar::Octonion random_octonion(std::mt19937_64& rng) {
  return {random_quaternion(rng), random_quaternion(rng)};
}

// Closed form for the 3x3 octonionic Hermitian determinant of
// [[a, z, y], [z~, b, x], [y~, x~, c]].
template <class T>
T det3_closed_form(const T& a, const T& b, const T& c, const cmvar::BasicOctonion<T>& x,
                   const cmvar::BasicOctonion<T>& y, const cmvar::BasicOctonion<T>& z) {
  const T re = ((z * x) * y.conj()).real_part();
  return a * b * c - a * x.norm2() - b * y.norm2() - c * z.norm2() + T(2) * re;
}

// Number of negative eigenvalues of a symmetric matrix.
inline int negative_count(const Eigen::MatrixXd& a, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  int k = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < -tol) ++k;
  return k;
}

inline int svd_rank(const Eigen::MatrixXcd& a, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double thr = tol * std::max(1.0, s(0));
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return r;
}

}  // namespace oracle
