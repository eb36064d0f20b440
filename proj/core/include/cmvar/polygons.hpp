#pragma once

// Planar polygon linkages: edge-length vectors, admissibility, walls
// sum(eps_i q_i) = 0, the cyclic linkage and the octic of a 3-torus in R^4.

#include "cmvar/algebras.hpp"
#include "cmvar/distances.hpp"
#include "cmvar/rigidity.hpp"

#include <array>
#include <vector>

namespace cmvar {

/// Edge lengths q_1..q_n (not squared), n >= 3, all positive.
class EdgeLengthVector {
 public:
  /// Throws InputError for n < 3 or non-finite entries, DomainError for a
  /// nonpositive entry.
  explicit EdgeLengthVector(std::vector<double> q);

  int size() const { return static_cast<int>(q_.size()); }
  const std::vector<double>& lengths() const { return q_; }
  double sum() const;

 private:
  std::vector<double> q_;
};

struct WallReport {
  bool on_wall = false;
  /// Sign vectors with |sum eps_i q_i| <= tol, normalized to eps_1 = +1 and
  /// sorted lexicographically (+1 before -1).
  std::vector<std::vector<int>> witnesses;
  double distance_to_nearest_wall = 0.0;
};

EdgeLengthVector standardize(const EdgeLengthVector& q);

/// Closed condition max q_i <= 1/2. Throws DomainError unless q sums to 1.
bool is_admissible(const EdgeLengthVector& q);

/// Exhaustive branch-and-bound scan over the 2^(n-1) sign classes.
/// Throws DomainError for n > 30 or unstandardized q.
WallReport wall_report(const EdgeLengthVector& q, double tol = kDefaultTol);

/// Cycle 1-2, 2-3, ..., n-1 with sigma = q_i^2.
LinkageSpec polygon_linkage(const EdgeLengthVector& q);

/// n - 3, n >= 3.
int polygon_space_dimension(int n);

/// Collinear realization for a wall sign vector: p_1 = 0 and
/// p_{i+1} = p_i + eps_i q_i on the real line. Throws DomainError when
/// eps does not close the polygon within tol.
Configuration collinear_witness(const EdgeLengthVector& q, const std::vector<int>& eps,
                                double tol = kDefaultTol);

/// LHS - RHS of
/// [rho^2 - 2 r^2 rho + (2 - r^2)^2]^2 = 64 (a^2 + b^2)(c^2 + d^2),
/// rho = a^2 + b^2 + c^2 + d^2.
double octic_value(double a, double b, double c, double d, double r);

/// (lambda cos phi1, lambda sin phi1, mu cos phi2, mu sin phi2) with
/// lambda = 1 + r cos theta, mu = 1 + r sin theta. Throws DomainError
/// unless 0 < r < 1.
std::array<double, 4> torus_point(double r, double theta, double phi1, double phi2);

/// (A + A^T)/2: the double cover from oriented to unoriented polygon Grams.
Eigen::MatrixXd symmetrize_hermitian(const HermitianGram& a);

}  // namespace cmvar
