#pragma once

// Cayley (squared distance) and Gram coordinates of real point
// configurations, the bordered Cayley matrix, realizability and EMBED.
//
// Point indices are 0-based throughout the C++ API. Point 0 is the base
// point of every Gram form: a_ij = <p_i - p_0, p_j - p_0> for i, j >= 1,
// stored at (i-1, j-1).

#include "cmvar/exact.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cmvar {

inline constexpr double kDefaultTol = 1e-9;

/// n labeled points in R^d, stored one point per row.
class Configuration {
 public:
  /// Throws InputError unless n >= 2, d >= 1, all entries finite and at
  /// least two points differ.
  explicit Configuration(Eigen::MatrixXd points);
  static Configuration from_points(const std::vector<std::vector<double>>& points);

  int size() const { return static_cast<int>(points_.rows()); }
  int dim() const { return static_cast<int>(points_.cols()); }
  Eigen::VectorXd point(int i) const { return points_.row(i).transpose(); }
  const Eigen::MatrixXd& points() const { return points_; }

 private:
  Eigen::MatrixXd points_;
};

/// Index of pair {i, j}, i < j, in lexicographic order (0,1), (0,2), ...
inline std::size_t pair_index(int n, int i, int j) {
  // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries
  const auto ii = static_cast<std::size_t>(i);
  const auto nn = static_cast<std::size_t>(n);
  return ii * nn - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// The C(n,2) squared distances s_ij, projective coordinates.
class CayleyVector {
 public:
  /// Throws InputError unless n >= 2, entries.size() == C(n,2), every entry
  /// is finite and nonnegative, and some entry is positive.
  CayleyVector(int n, std::vector<double> entries);

  /// Skips validation. Used for the image of arbitrary symmetric forms
  /// under the inverse Gram transform, which may leave the valid set.
  static CayleyVector unchecked(int n, std::vector<double> entries);

  int n() const { return n_; }
  double at(int i, int j) const;
  const std::vector<double>& entries() const { return entries_; }

  bool is_zero() const;
  /// True when the invariants of the checked constructor hold.
  bool is_valid() const;

 private:
  CayleyVector() = default;
  int n_ = 0;
  std::vector<double> entries_;
};

/// (n+1)x(n+1) bordered matrix: zero diagonal, unit border row/column.
struct CayleyMatrix {
  Eigen::MatrixXd entries;
};

/// (n-1)x(n-1) symmetric Gram form relative to point 0.
class GramForm {
 public:
  /// Throws InputError unless the matrix is square, finite and symmetric to
  /// 1e-12 relative; the stored matrix is exactly symmetrized.
  explicit GramForm(Eigen::MatrixXd a);

  /// Point count n = rows + 1.
  int n() const { return static_cast<int>(a_.rows()) + 1; }
  const Eigen::MatrixXd& matrix() const { return a_; }

 private:
  Eigen::MatrixXd a_;
};

struct RealizabilityReport {
  bool realizable = false;
  /// Smallest dimension admitting a realization; numerical rank of A.
  int min_rank = 0;
  /// Spectrum of A, ascending.
  std::vector<double> eigenvalues;
  /// Index (into eigenvalues) of a negative eigenvalue, when not realizable.
  std::optional<int> negative_eigenvalue_index;
};

struct RankDetCheck {
  int rank_S = 0;
  int rank_A = 0;
  double det_S = 0.0;
  double det_A = 0.0;
};

struct ExactRankDetCheck {
  std::size_t rank_S = 0;
  std::size_t rank_A = 0;
  Rational det_S;
  Rational det_A;
};

CayleyVector cayley_from_configuration(const Configuration& cfg);

GramForm gram_from_cayley(const CayleyVector& s);

/// Inverse of gram_from_cayley: s_0i = a_ii, s_ij = a_ii + a_jj - 2 a_ij.
/// The result is unchecked; callers inspect is_valid() / is_zero().
CayleyVector cayley_from_gram(const GramForm& a);

/// Gram matrix <p_i - p_0, p_j - p_0> computed directly from coordinates.
Eigen::MatrixXd gram_from_configuration(const Configuration& cfg);

CayleyMatrix cayley_matrix(const CayleyVector& s);

/// Numerical ranks and determinants of S and A; throws IdentityViolation
/// when rk S = 2 + rk A or det S = (-1)^n 2^(n-1) det A fails beyond tol.
RankDetCheck rank_det_check(const CayleyVector& s, double tol = kDefaultTol);

/// Same identities in exact rational arithmetic, zero tolerance. The
/// entries are s_ij in pair_index order. Intended for small n.
ExactRankDetCheck rank_det_check_exact(int n, std::span<const Rational> s);

/// Exact Gram transform over Q, (n-1)x(n-1).
RationalMatrix gram_from_cayley_exact(int n, std::span<const Rational> s);
std::vector<Rational> cayley_from_gram_exact(const RationalMatrix& a);

RealizabilityReport realizability(const CayleyVector& s, double tol = kDefaultTol);

/// Recovers a configuration in R^d with p_0 = 0 from realizable s.
/// Throws NotRealizable or RankExceedsTarget.
Configuration embed(const CayleyVector& s, int d, double tol = kDefaultTol);

/// Relabels points: point perm[i] of the result is point i of the input.
CayleyVector relabel(const CayleyVector& s, std::span<const int> perm);

}  // namespace cmvar
