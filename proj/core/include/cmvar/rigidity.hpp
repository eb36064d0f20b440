#pragma once

// Planar bar-and-joint linkages: Laman verification by the (2,3) pebble
// game, linkage sections in Cayley coordinates, Jacobian ranks of the
// squared-distance map, the realization-count bound and a multi-start
// Newton enumerator for small generic Laman linkages.

#include "cmvar/distances.hpp"
#include "cmvar/exact.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmvar {

/// Unordered vertex pair, stored with i < j (0-based).
struct Edge {
  int i = 0;
  int j = 0;

  Edge() = default;
  Edge(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connected graph with a nonnegative squared length on every edge.
class LinkageSpec {
 public:
  /// Edges are canonicalized and sorted; sigma follows the caller's edge
  /// order and is permuted along. Throws InputError for out-of-range or
  /// repeated edges, loops, negative or non-finite sigma, a disconnected
  /// graph, and AllZeroSigma when every sigma vanishes.
  LinkageSpec(int n, std::vector<Edge> edges, std::vector<double> sigma);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& sigma() const { return sigma_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<double> sigma_;
};

struct LamanResult {
  bool laman = false;
  /// Empty when laman; otherwise a human-readable reason.
  std::string reason;
  /// Vertex subset spanning more than 2k-3 edges, when the sparsity count
  /// (not the total edge count) is what fails.
  std::vector<int> violating_subset;
};

/// (2,3) pebble game. Edges must be a simple graph on 0..n-1.
LamanResult is_laman(int n, std::span<const Edge> edges);

/// Exhaustive subset enumeration; reference check for n <= 20.
LamanResult is_laman_exhaustive(int n, std::span<const Edge> edges);

/// coef_first * s_first - coef_second * s_second = 0. A zero-length edge
/// contributes s_first = 0, encoded with coef_second = 0.
struct SectionEquation {
  Edge first;
  double coef_first = 0.0;
  Edge second;
  double coef_second = 0.0;
};

struct LinkageSection {
  int n = 0;
  std::vector<SectionEquation> equations;
  /// |edges| - 1.
  int codim = 0;
};

/// Proportionality chain sigma_kl s_ij = sigma_ij s_kl over consecutive
/// positive-length edges, plus s_ij = 0 for each zero-length edge.
LinkageSection linkage_section(const LinkageSpec& spec);

/// Dense coefficient matrix, one row per equation, columns in pair_index
/// order over the C(n,2) Cayley coordinates.
Eigen::MatrixXd section_matrix(const LinkageSection& section);

/// 1/2 C(2n-4, n-2), n >= 3.
BigInt realization_bound(int n);

/// Rank of the Jacobian of the squared-distance map over all pairs, with
/// point 0 pinned at the origin, at cfg (any dimension).
int rigidity_jacobian_rank(const Configuration& cfg, double tol = kDefaultTol);

/// Same, restricted to the rows of the given edges (the rigidity matrix).
int rigidity_matrix_rank(const Configuration& cfg, std::span<const Edge> edges,
                         double tol = kDefaultTol);

struct SolverOptions {
  std::uint64_t seed = 1;
  /// Number of random starts; 0 selects 200 * realization_bound(n).
  std::uint64_t budget = 0;
  double dedup_tol = 1e-5;
  double residual_tol = 1e-10;
  int max_n = 7;
  int max_iterations = 200;
  /// Worker threads; 0 uses the hardware concurrency.
  int threads = 1;
  /// When false, non-Laman graphs are solved as least-squares systems and
  /// the non-isolation warning reports the resulting continua.
  bool require_laman = true;
};

struct SolverStats {
  std::uint64_t attempts = 0;
  std::uint64_t converged = 0;
  std::uint64_t deduplicated = 0;
};

struct RealizationSet {
  /// Pinned planar realizations: p_0 = 0, the first point away from the
  /// origin on the positive x-axis, the first point off that axis with
  /// positive y. Sorted lexicographically.
  std::vector<Configuration> representatives;
  std::uint64_t count = 0;
  BigInt bound;
  SolverStats stats;
  /// Local search cannot certify completeness: true whenever count < bound.
  bool lower_bound_only = true;
  /// Set when some realization has a rank-deficient rigidity matrix.
  bool non_generic = false;
  std::vector<std::string> warnings;
};

/// Throws NotLaman (unless disabled in opts) and DomainError when
/// n > opts.max_n.
RealizationSet enumerate_realizations(const LinkageSpec& spec, const SolverOptions& opts = {});

}  // namespace cmvar
