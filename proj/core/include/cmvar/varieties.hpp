#pragma once

// Closed-form invariants of the rank-stratified Gram varieties over
// K = R, C, H, O and enumeration of their defining minors.
//
// Everything here is exact: degrees are big integers, genera rationals.

#include "cmvar/exact.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmvar {

enum class Family { R, C, H, O };

std::string to_string(Family f);
/// Parses "R", "C", "H" or "O"; throws InputError otherwise.
Family parse_family(const std::string& s);

/// Names the variety of rank <= d forms for n points over a family.
class VarietyId {
 public:
  /// Throws DomainError unless 1 <= d <= n-1, n >= 2, and, for O,
  /// (d, n) is one of (1,3), (2,3), (1,4), (2,4), (3,4).
  VarietyId(Family family, int d, int n);

  Family family() const { return family_; }
  int d() const { return d_; }
  int n() const { return n_; }

  friend bool operator==(const VarietyId&, const VarietyId&) = default;

 private:
  Family family_;
  int d_;
  int n_;
};

struct VarietyInvariants {
  long ambient_dim = 0;
  /// Absent for the octonionic family.
  std::optional<long> dim;
  /// Absent for the octonionic family.
  std::optional<BigInt> degree;
  /// Only for family R with d = 2 and n >= 4.
  std::optional<Rational> sectional_genus;
  int dual_d = 0;
  /// Rank bound of the singular locus; 0 means smooth.
  int singular_locus_d = 0;
};

long ambient_dimension(const VarietyId& v);

/// Throws UnsupportedFamily for O.
long dimension(const VarietyId& v);

/// Degree by the product formula of the family; 1 when d = n-1.
/// Throws UnsupportedFamily for O.
BigInt degree(const VarietyId& v);

/// 1/2 C(2n-4, n-2), n >= 3.
BigInt degree_cm2(int n);

/// 1 + (n-4)/2 * degree_cm2(n), n >= 4. Throws DomainError for n < 4.
Rational sectional_genus(int n);

/// Evaluates the two product expressions for the degree of the
/// quaternionic (Pfaffian) variety independently, 1 <= d <= n-2.
std::pair<Rational, Rational> pfaffian_degree_both(int d, int n);

/// d -> n-d-1, same family and n. Throws DomainError when d = n-1.
VarietyId dual(const VarietyId& v);

VarietyInvariants invariants(const VarietyId& v);

enum class MinorSource { Gram, Cayley };

struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// (d+1)-minors of the symbolic (n-1)x(n-1) Gram matrix, or (d+3)-minors of
/// the (n+1)x(n+1) Cayley matrix. Indices are 0-based into that matrix.
struct MinorSystem {
  VarietyId variety;
  MinorSource source;
  int minor_size = 0;
  int matrix_size = 0;
  std::vector<MinorIndex> minors;
};

/// Number of minors the system contains: C(matrix_size, minor_size)^2.
BigInt minor_count(const VarietyId& v, MinorSource source);

/// Streams every row/column subset pair without materializing the list.
/// Requires family R and d <= n-2.
void for_each_minor(const VarietyId& v, MinorSource source,
                    const std::function<void(const MinorIndex&)>& visit);

MinorSystem defining_minors(const VarietyId& v, MinorSource source);

/// Largest |minor| over the system evaluated on m (size must match).
double max_abs_minor(const VarietyId& v, MinorSource source, const Eigen::MatrixXd& m);

/// True when every minor is at most tol * max(1, max|m_ij|)^k in magnitude.
bool minors_vanish(const VarietyId& v, MinorSource source, const Eigen::MatrixXd& m,
                   double tol);

}  // namespace cmvar
