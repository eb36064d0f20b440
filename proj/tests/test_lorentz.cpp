#include "oracles.hpp"

#include <cmvar/errors.hpp>
#include <cmvar/lorentz.hpp>

#include <gtest/gtest.h>

using namespace cmvar;

namespace {

Eigen::MatrixXd random_psd(std::mt19937_64& rng, int m, int rank) {
  const Eigen::MatrixXd v = oracle::random_points(rng, m, rank);
  return v * v.transpose();
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int m) {
  const Eigen::MatrixXd v = oracle::random_points(rng, m, m);
  return 0.5 * (v + v.transpose());
}

}  // namespace

TEST(LorentzL, Examples) {
  for (int n = 3; n <= 8; ++n) {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n - 1, n - 1);
    EXPECT_DOUBLE_EQ(lorentz_L(id, id), (n - 1) - (n - 1) * (n - 1));
  }
  const Eigen::Matrix2d d = Eigen::Vector2d(1, -1).asDiagonal();
  EXPECT_DOUBLE_EQ(lorentz_L(d, d), 2.0);
  EXPECT_THROW(lorentz_L(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(3, 3)), InputError);
}

TEST(LorentzL, LightConeAndNegativeCone) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const Eigen::MatrixXd a = random_psd(rng, m, 1);
    EXPECT_LE(std::abs(lorentz_L(a, a)), 1e-9 * a.squaredNorm());
    const Eigen::MatrixXd b = random_psd(rng, m, 2 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)));
    EXPECT_LT(lorentz_L(b, b), 0.0);
  }
}

TEST(LorentzL, FormMatrixSignature) {
  for (int n = 3; n <= 8; ++n) {
    const Eigen::MatrixXd g = lorentz_form_matrix(n);
    EXPECT_EQ(g.rows(), (n - 1) * n / 2);
    EXPECT_EQ(oracle::negative_count(g, 1e-9), 1) << n;
    EXPECT_TRUE(g.isApprox(g.transpose()));
  }
}

TEST(LorentzL, RestrictionTower) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const Eigen::MatrixXd a = random_symmetric(rng, m), b = random_symmetric(rng, m);
    const double l = lorentz_L(a, b);
    const double scale = std::max(1.0, std::abs(l));
    EXPECT_NEAR(lorentz_hermitian(a.cast<std::complex<double>>(), b.cast<std::complex<double>>()), l,
                1e-12 * scale);
    EXPECT_NEAR(lorentz_quaternionic(QuatMatrix::from_real(a), QuatMatrix::from_real(b)), l, 1e-12 * scale);
  }
}

TEST(LorentzHermitian, Examples) {
  using cd = std::complex<double>;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_NEAR(lorentz_hermitian(id, id), 3.0 - 9.0, 1e-12);
  Eigen::VectorXcd v(3);
  v << cd(1, 2), cd(-0.5, 0.3), cd(0, 1);
  const Eigen::MatrixXcd r1 = v * v.adjoint();
  EXPECT_NEAR(lorentz_hermitian(r1, r1), 0.0, 1e-12 * r1.squaredNorm());
  Eigen::MatrixXcd bad = id;
  bad(0, 1) = cd(0, 1);
  EXPECT_THROW(lorentz_hermitian(bad, id), SelfAdjointnessViolation);
}

TEST(LorentzQuaternionic, Examples) {
  const QuatMatrix id = QuatMatrix::identity(4);
  EXPECT_NEAR(lorentz_quaternionic(id, id), 4.0 - 16.0, 1e-12);
  std::mt19937_64 rng(3);
  QuatMatrix v(3, 1);
  for (std::size_t i = 0; i < 3; ++i) v(i, 0) = oracle::random_quaternion(rng);
  const QuatMatrix r1 = v * v.adjoint();
  EXPECT_NEAR(lorentz_quaternionic(r1, r1), 0.0, 1e-12 * std::pow(r1.max_abs(), 2) * 9);
}

TEST(ConeClassify, Examples) {
  Eigen::Matrix2d tri;
  tri << 1.0, 0.3, 0.3, 0.9;
  LorentzReport r = cone_classify(tri);
  EXPECT_EQ(r.region, ConeRegion::NegativeCone);
  EXPECT_FALSE(r.is_extremal_candidate);

  Eigen::Matrix2d line;
  line << 1, 2, 2, 4;
  r = cone_classify(line);
  EXPECT_EQ(r.region, ConeRegion::LightCone);
  EXPECT_TRUE(r.is_extremal_candidate);

  const Eigen::Matrix2d fake = Eigen::Vector2d(1, -1).asDiagonal();
  r = cone_classify(fake);
  EXPECT_EQ(r.region, ConeRegion::PositiveRegion);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(ConeClassify, RegionMatchesValue) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Eigen::MatrixXd a = random_symmetric(rng, 3);
    const LorentzReport r = cone_classify(a, 1e-9);
    const double thr = 1e-9 * std::pow(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().cwiseAbs().maxCoeff(), 2);
    if (r.value < -thr) EXPECT_EQ(r.region, ConeRegion::NegativeCone);
    else if (r.value > thr) EXPECT_EQ(r.region, ConeRegion::PositiveRegion);
    else EXPECT_EQ(r.region, ConeRegion::LightCone);
  }
}

TEST(HyperbolicDistance, Basic) {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd a = random_psd(rng, 3, 3), b = random_psd(rng, 3, 3);
  EXPECT_NEAR(hyperbolic_distance(a, a), 0.0, 1e-6);
  EXPECT_NEAR(hyperbolic_distance(a, 2.0 * a), 0.0, 1e-6);
  EXPECT_NEAR(hyperbolic_distance(a, b), hyperbolic_distance(b, a), 1e-12);
  EXPECT_GT(hyperbolic_distance(a, b), 0.0);
  const Eigen::Matrix2d fake = Eigen::Vector2d(1, -1).asDiagonal();
  EXPECT_THROW(hyperbolic_distance(fake, Eigen::Matrix2d::Identity()), DomainError);
}
