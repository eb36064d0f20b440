#pragma once

// Quaternions, octonions (Cayley-Dickson doubling of quaternions),
// Hermitian and hyper-Hermitian Gram matrices, and the map from
// hyper-Hermitian matrices to complex skew-symmetric ones.
//
// Quaternion <-> C^2 convention: x = a + bi + cj + dk = u + j v with
// u = a + bi, v = c - di, acting by left multiplication as the block
//   [ u  -conj(v) ]
//   [ v   conj(u) ].
// Every identification below (sigma, ranks, the real structure on skew
// forms) goes through to_complex_block.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace cmvar {

template <class T>
struct BasicQuaternion {
  T a{}, b{}, c{}, d{};

  static BasicQuaternion real(T x) { return {x, T{}, T{}, T{}}; }

  BasicQuaternion conj() const { return {a, -b, -c, -d}; }
  T norm2() const { return a * a + b * b + c * c + d * d; }

  friend BasicQuaternion operator+(const BasicQuaternion& x, const BasicQuaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend BasicQuaternion operator-(const BasicQuaternion& x, const BasicQuaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend BasicQuaternion operator-(const BasicQuaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend BasicQuaternion operator*(const T& s, const BasicQuaternion& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  /// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
  friend BasicQuaternion operator*(const BasicQuaternion& x, const BasicQuaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  BasicQuaternion& operator+=(const BasicQuaternion& y) { return *this = *this + y; }

  friend bool operator==(const BasicQuaternion&, const BasicQuaternion&) = default;
};

using Quaternion = BasicQuaternion<double>;

inline double norm(const Quaternion& x) { return std::sqrt(x.norm2()); }

/// x = x1 + x2 e with e^2 = -1 and
/// xy = (x1 y1 - y2* x2) + (x2 y1* + y2 x1) e.
template <class T>
struct BasicOctonion {
  BasicQuaternion<T> x1{}, x2{};

  static BasicOctonion real(T v) { return {BasicQuaternion<T>::real(v), {}}; }

  /// x~ = x1* - x2 e.
  BasicOctonion conj() const { return {x1.conj(), -x2}; }
  T norm2() const { return x1.norm2() + x2.norm2(); }
  T real_part() const { return x1.a; }

  friend BasicOctonion operator+(const BasicOctonion& x, const BasicOctonion& y) {
    return {x.x1 + y.x1, x.x2 + y.x2};
  }
  friend BasicOctonion operator-(const BasicOctonion& x, const BasicOctonion& y) {
    return {x.x1 - y.x1, x.x2 - y.x2};
  }
  friend BasicOctonion operator-(const BasicOctonion& x) { return {-x.x1, -x.x2}; }
  friend BasicOctonion operator*(const T& s, const BasicOctonion& x) {
    return {s * x.x1, s * x.x2};
  }
  friend BasicOctonion operator*(const BasicOctonion& x, const BasicOctonion& y) {
    return {x.x1 * y.x1 - y.x2.conj() * x.x2, x.x2 * y.x1.conj() + y.x2 * x.x1};
  }
  BasicOctonion& operator+=(const BasicOctonion& y) { return *this = *this + y; }

  friend bool operator==(const BasicOctonion&, const BasicOctonion&) = default;
};

using Octonion = BasicOctonion<double>;

inline double norm(const Octonion& x) { return std::sqrt(x.norm2()); }

inline Quaternion quat_mul(const Quaternion& x, const Quaternion& y) { return x * y; }
inline Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

/// [x, y, z] = (xy)z - x(yz).
template <class T>
BasicOctonion<T> associator(const BasicOctonion<T>& x, const BasicOctonion<T>& y,
                            const BasicOctonion<T>& z) {
  return (x * y) * z - x * (y * z);
}

Eigen::Matrix2cd quat_to_complex_block(const Quaternion& x);

/// sigma(u, v) = (conj(v), -conj(u)) on H = C^2; equals (conj(v), -u) for real u.
Quaternion sigma(const Quaternion& x);

/// Dense quaternion matrix, row-major.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  QuatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Quaternion& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QuatMatrix adjoint() const;
  /// Real part of the trace.
  double trace() const;
  double max_abs() const;

  friend QuatMatrix operator*(const QuatMatrix& x, const QuatMatrix& y);
  friend QuatMatrix operator+(const QuatMatrix& x, const QuatMatrix& y);

  /// Each entry replaced by its 2x2 complex block.
  Eigen::MatrixXcd to_complex() const;

  static QuatMatrix identity(std::size_t n);
  static QuatMatrix from_real(const Eigen::MatrixXd& m);
  static QuatMatrix from_complex(const Eigen::MatrixXcd& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

bool is_self_adjoint(const QuatMatrix& a, double tol);
bool is_self_adjoint(const Eigen::MatrixXcd& a, double tol);

/// Half the complex rank of the 2m x 2m representation.
int quaternionic_rank(const QuatMatrix& a, double tol);

/// (n-1)x(n-1) Hermitian Gram matrix alpha_ij = <p_i - p_0, p_j - p_0> with
/// <z, w> = sum z_k conj(w_k).
struct HermitianGram {
  Eigen::MatrixXcd entries;
};

/// a_ij = sum_k q_ik conj(q_jk) with q_i = p_i - p_0 in H^d, i.e. A = Q Q*
/// where the rows of Q are the translated points.
struct HyperHermitianGram {
  QuatMatrix entries;
};

/// Complex skew-symmetric 2m x 2m matrix.
class SkewForm {
 public:
  /// Throws InputError unless square, of even size and skew to tol.
  explicit SkewForm(Eigen::MatrixXcd m, double tol = 1e-12);
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  struct Unchecked {};
  SkewForm(Eigen::MatrixXcd m, Unchecked) : m_(std::move(m)) {}
  friend SkewForm sigma_map(const HyperHermitianGram&, double);
  Eigen::MatrixXcd m_;
};

/// Throws InputError for fewer than two points, ragged dimensions or all
/// points coincident.
HermitianGram hermitian_gram(const std::vector<Eigen::VectorXcd>& points);
HyperHermitianGram hyper_hermitian_gram(const std::vector<std::vector<Quaternion>>& points);

/// Applies sigma entrywise and expands to 2x2 blocks. Only the upper block
/// triangle is read; the lower one is its negated transpose, so the output
/// is skew by construction. Throws SelfAdjointnessViolation when the input
/// is not self-adjoint to tol.
SkewForm sigma_map(const HyperHermitianGram& a, double tol = 1e-9);

/// Even numerical rank of a skew form. Throws OddRankAnomaly when the
/// singular values fail to pair up.
int pfaffian_rank(const SkewForm& m, double tol = 1e-9);

/// Fixed-point test for the anti-holomorphic involution whose fixed locus
/// is the image of sigma: each 2x2 block [[p, q], [r, s]] must equal
/// [[conj s, -conj r], [-conj q, conj p]].
bool is_quaternionic_real(const SkewForm& m, double tol = 1e-12);

/// det [[alpha, x], [x~, beta]] = alpha beta - |x|^2.
double oct_herm_det2(double alpha, double beta, const Octonion& x);

template <class T>
using OctMatrix3 = std::array<std::array<BasicOctonion<T>, 3>, 3>;

/// Builds [[alpha, z, y], [z~, beta, x], [y~, x~, gamma]].
template <class T>
OctMatrix3<T> oct_hermitian3(const T& alpha, const T& beta, const T& gamma,
                             const BasicOctonion<T>& x, const BasicOctonion<T>& y,
                             const BasicOctonion<T>& z) {
  using O = BasicOctonion<T>;
  return {{{O::real(alpha), z, y}, {z.conj(), O::real(beta), x}, {y.conj(), x.conj(), O::real(gamma)}}};
}

namespace detail {

template <class T>
OctMatrix3<T> product(const OctMatrix3<T>& x, const OctMatrix3<T>& y) {
  OctMatrix3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <class T>
T real_trace(const OctMatrix3<T>& x) {
  return x[0][0].real_part() + x[1][1].real_part() + x[2][2].real_part();
}

template <class T>
T max_abs_component(const BasicOctonion<T>& x) {
  T best{};
  for (const T& v : {x.x1.a, x.x1.b, x.x1.c, x.x1.d, x.x2.a, x.x2.b, x.x2.c, x.x2.d}) {
    const T m = v < T{} ? T(-v) : v;
    if (best < m) best = m;
  }
  return best;
}

void throw_not_self_adjoint();

}  // namespace detail

/// Determinant of a 3x3 octonionic-Hermitian matrix through the trace
/// polynomial Tr(A^3)/3 - Tr(A) Tr(A^2)/2 + Tr(A)^3/6, powers taken with
/// the Jordan product A.B = (AB + BA)/2. Exact when T is Rational.
/// Throws SelfAdjointnessViolation when the input is not self-adjoint
/// within tol (absolute, scaled by the largest entry).
template <class T>
T oct_herm_det3(const OctMatrix3<T>& a, double tol = 1e-12) {
  T scale{1};
  for (const auto& row : a)
    for (const auto& e : row) {
      const T m = detail::max_abs_component(e);
      if (scale < m) scale = m;
    }
  const T limit = T(tol) * scale;
  for (int i = 0; i < 3; ++i) {
    BasicOctonion<T> im = a[i][i];
    im.x1.a = T{};
    if (limit < detail::max_abs_component(im)) detail::throw_not_self_adjoint();
    for (int j = i + 1; j < 3; ++j)
      if (limit < detail::max_abs_component(a[i][j] - a[j][i].conj()))
        detail::throw_not_self_adjoint();
  }
  const OctMatrix3<T> sq = detail::product(a, a);
  const OctMatrix3<T> left = detail::product(a, sq);
  const OctMatrix3<T> right = detail::product(sq, a);
  const T t1 = detail::real_trace(a);
  const T t2 = detail::real_trace(sq);
  const T t3 = (detail::real_trace(left) + detail::real_trace(right)) / T(2);
  return t3 / T(3) - t1 * t2 / T(2) + t1 * t1 * t1 / T(6);
}

}  // namespace cmvar
