#include "cmvar/distances.hpp"

#include "cmvar/errors.hpp"
#include "cmvar/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cmvar {

namespace {

void require_positive_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

}  // namespace

Configuration::Configuration(Eigen::MatrixXd points) : points_(std::move(points)) {
  if (points_.rows() < 2) throw InputError("a configuration needs at least two points");
  if (points_.cols() < 1) throw InputError("configuration dimension must be positive");
  if (!points_.allFinite()) throw InputError("configuration coordinates must be finite");
  bool distinct = false;
  for (Eigen::Index i = 1; i < points_.rows() && !distinct; ++i)
    distinct = points_.row(i) != points_.row(0);
  if (!distinct) throw InputError("all points of the configuration coincide");
}

Configuration Configuration::from_points(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw InputError("a configuration needs at least two points");
  const std::size_t d = points.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw InputError("points have differing dimensions");
    for (std::size_t k = 0; k < d; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = points[i][k];
  }
  return Configuration(std::move(m));
}

CayleyVector::CayleyVector(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw InputError("a Cayley vector needs n >= 2");
  if (entries_.size() != pair_count(n_)) {
    throw InputError("a Cayley vector for n = " + std::to_string(n_) + " has " +
                     std::to_string(pair_count(n_)) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v) || v < 0.0)
      throw InputError("squared distances must be finite and nonnegative");
  }
  if (is_zero()) throw InputError("the all-zero Cayley vector has no realization");
}

CayleyVector CayleyVector::unchecked(int n, std::vector<double> entries) {
  CayleyVector s;
  s.n_ = n;
  s.entries_ = std::move(entries);
  return s;
}

double CayleyVector::at(int i, int j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  return entries_[pair_index(n_, i, j)];
}

bool CayleyVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
}

bool CayleyVector::is_valid() const {
  if (n_ < 2 || entries_.size() != pair_count(n_) || is_zero()) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return std::isfinite(v) && v >= 0.0; });
}

GramForm::GramForm(Eigen::MatrixXd a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw InputError("a Gram form must be square");
  if (a_.rows() < 1) throw InputError("a Gram form needs at least one row");
  if (!a_.allFinite()) throw InputError("Gram form entries must be finite");
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff());
  if ((a_ - a_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError("a Gram form must be symmetric");
  a_ = 0.5 * (a_ + a_.transpose());
}

CayleyVector cayley_from_configuration(const Configuration& cfg) {
  const int n = cfg.size();
  std::vector<double> s(pair_count(n));
  const auto& p = cfg.points();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s[pair_index(n, i, j)] = (p.row(i) - p.row(j)).squaredNorm();
  return CayleyVector(n, std::move(s));
}

GramForm gram_from_cayley(const CayleyVector& s) {
  const int m = s.n() - 1;
  Eigen::MatrixXd a(m, m);
  for (int i = 1; i <= m; ++i) {
    a(i - 1, i - 1) = s.at(0, i);
    for (int j = i + 1; j <= m; ++j) {
      const double v = 0.5 * (s.at(0, i) + s.at(0, j) - s.at(i, j));
      a(i - 1, j - 1) = v;
      a(j - 1, i - 1) = v;
    }
  }
  return GramForm(std::move(a));
}

CayleyVector cayley_from_gram(const GramForm& g) {
  const auto& a = g.matrix();
  const int n = g.n();
  std::vector<double> s(pair_count(n));
  for (int i = 1; i < n; ++i) {
    s[pair_index(n, 0, i)] = a(i - 1, i - 1);
    for (int j = i + 1; j < n; ++j)
      s[pair_index(n, i, j)] = a(i - 1, i - 1) + a(j - 1, j - 1) - 2.0 * a(i - 1, j - 1);
  }
  return CayleyVector::unchecked(n, std::move(s));
}

Eigen::MatrixXd gram_from_configuration(const Configuration& cfg) {
  const auto& p = cfg.points();
  const Eigen::MatrixXd q = p.bottomRows(p.rows() - 1).rowwise() - p.row(0);
  return q * q.transpose();
}

CayleyMatrix cayley_matrix(const CayleyVector& s) {
  const int n = s.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) {
    m(0, i) = 1.0;
    m(i, 0) = 1.0;
    for (int j = i + 1; j <= n; ++j) {
      m(i, j) = s.at(i - 1, j - 1);
      m(j, i) = m(i, j);
    }
  }
  return {std::move(m)};
}

RankDetCheck rank_det_check(const CayleyVector& s, double tol) {
  require_positive_tol(tol);
  const int n = s.n();
  const Eigen::MatrixXd big_s = cayley_matrix(s).entries;
  const Eigen::MatrixXd a = gram_from_cayley(s).matrix();

  RankDetCheck out;
  out.rank_S = linalg::numerical_rank_symmetric(big_s, tol);
  out.rank_A = linalg::numerical_rank_symmetric(a, tol);
  out.det_S = linalg::determinant(big_s);
  out.det_A = linalg::determinant(a);

  if (out.rank_S != 2 + out.rank_A) {
    throw IdentityViolation("rank identity failed: rk S = " + std::to_string(out.rank_S) +
                            ", rk A = " + std::to_string(out.rank_A));
  }
  const double predicted = ((n % 2 == 0) ? 1.0 : -1.0) * std::ldexp(out.det_A, n - 1);
  // Hadamard bounds: the size a rounding error in either determinant can reach.
  const double hadamard_s = big_s.rowwise().norm().prod();
  const double hadamard_a = std::ldexp(a.rowwise().norm().prod(), n - 1);
  const double scale = std::max({1.0, std::abs(out.det_S), std::abs(predicted), hadamard_s, hadamard_a});
  if (std::abs(out.det_S - predicted) > tol * scale) {
    throw IdentityViolation("determinant identity failed: det S = " + std::to_string(out.det_S) +
                            ", (-1)^n 2^(n-1) det A = " + std::to_string(predicted));
  }
  return out;
}

RationalMatrix gram_from_cayley_exact(int n, std::span<const Rational> s) {
  if (n < 2 || s.size() != pair_count(n)) throw InputError("Cayley vector size mismatch");
  const auto at = [&](int i, int j) -> Rational {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    return s[pair_index(n, i, j)];
  };
  const auto m = static_cast<std::size_t>(n - 1);
  RationalMatrix a(m, m);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          (at(0, i) + at(0, j) - at(i, j)) / 2;
  return a;
}

std::vector<Rational> cayley_from_gram_exact(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("a Gram form must be square");
  const int n = static_cast<int>(a.rows()) + 1;
  std::vector<Rational> s(pair_count(n));
  for (int i = 1; i < n; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    s[pair_index(n, 0, i)] = a(ii, ii);
    for (int j = i + 1; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j - 1);
      s[pair_index(n, i, j)] = a(ii, ii) + a(jj, jj) - 2 * a(ii, jj);
    }
  }
  return s;
}

ExactRankDetCheck rank_det_check_exact(int n, std::span<const Rational> s) {
  if (n < 2 || s.size() != pair_count(n)) throw InputError("Cayley vector size mismatch");
  const auto size = static_cast<std::size_t>(n + 1);
  RationalMatrix big_s(size, size);
  for (int i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    big_s(0, ii) = 1;
    big_s(ii, 0) = 1;
    for (int j = i + 1; j <= n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      big_s(ii, jj) = s[pair_index(n, i - 1, j - 1)];
      big_s(jj, ii) = big_s(ii, jj);
    }
  }
  const RationalMatrix a = gram_from_cayley_exact(n, s);

  ExactRankDetCheck out;
  out.rank_S = rank(big_s);
  out.rank_A = rank(a);
  out.det_S = determinant(big_s);
  out.det_A = determinant(a);
  if (out.rank_S != 2 + out.rank_A) throw IdentityViolation("exact rank identity failed");
  Rational predicted = out.det_A;
  for (int k = 0; k < n - 1; ++k) predicted *= 2;
  if (n % 2 != 0) predicted = -predicted;
  if (out.det_S != predicted) throw IdentityViolation("exact determinant identity failed");
  return out;
}

RealizabilityReport realizability(const CayleyVector& s, double tol) {
  require_positive_tol(tol);
  const Eigen::VectorXd ev = linalg::symmetric_eigenvalues(gram_from_cayley(s).matrix());
  const double norm = ev.cwiseAbs().maxCoeff();
  const double threshold = linalg::zero_threshold(tol, norm);

  RealizabilityReport r;
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  // ascending: the first eigenvalue is the most negative one
  if (ev(0) < -threshold) {
    r.realizable = false;
    r.negative_eigenvalue_index = 0;
  } else {
    r.realizable = true;
  }
  r.min_rank = static_cast<int>(
      std::count_if(r.eigenvalues.begin(), r.eigenvalues.end(),
                    [&](double v) { return std::abs(v) > threshold; }));
  return r;
}

Configuration embed(const CayleyVector& s, int d, double tol) {
  require_positive_tol(tol);
  if (d < 1) throw DomainError("embedding dimension must be positive");
  const Eigen::MatrixXd a = gram_from_cayley(s).matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw InternalError("eigendecomposition failed");

  // Eigen sorts ascending; walk from the top for descending order.
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::Index m = ev.size();
  const double threshold = linalg::zero_threshold(tol, ev.cwiseAbs().maxCoeff());
  if (ev(0) < -threshold) {
    throw NotRealizable("Gram form has the negative eigenvalue " + std::to_string(ev(0)));
  }
  int rank = 0;
  for (Eigen::Index k = 0; k < m; ++k)
    if (ev(k) > threshold) ++rank;
  if (rank > d) {
    throw RankExceedsTarget("configuration needs dimension " + std::to_string(rank) +
                            " > " + std::to_string(d));
  }

  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(m + 1, d);
  for (int k = 0; k < std::min<Eigen::Index>(d, m); ++k) {
    const Eigen::Index src = m - 1 - k;
    const double lambda = std::max(ev(src), 0.0);
    points.col(k).tail(m) = std::sqrt(lambda) * es.eigenvectors().col(src);
  }
  return Configuration(std::move(points));
}

CayleyVector relabel(const CayleyVector& s, std::span<const int> perm) {
  const int n = s.n();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation size mismatch");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++)
      throw InputError("not a permutation");
  }
  std::vector<double> out(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = perm[static_cast<std::size_t>(i)];
      int b = perm[static_cast<std::size_t>(j)];
      if (a > b) std::swap(a, b);
      out[pair_index(n, a, b)] = s.at(i, j);
    }
  return CayleyVector(n, std::move(out));
}

}  // namespace cmvar
