#include "cmvar/varieties.hpp"

#include "cmvar/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmvar {

std::string to_string(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::C: return "C";
    case Family::H: return "H";
    case Family::O: return "O";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "R") return Family::R;
  if (s == "C") return Family::C;
  if (s == "H") return Family::H;
  if (s == "O") return Family::O;
  throw InputError("unknown family '" + s + "' (expected R, C, H or O)");
}

VarietyId::VarietyId(Family family, int d, int n) : family_(family), d_(d), n_(n) {
  if (n < 2) throw DomainError("variety needs n >= 2");
  if (d < 1 || d > n - 1) throw DomainError("rank bound must satisfy 1 <= d <= n-1");
  if (family == Family::O) {
    const bool ok = (n == 3 && d <= 2) || (n == 4 && d <= 3);
    if (!ok) throw DomainError("octonionic varieties exist only for n = 3, 4 and d <= n-1");
  }
}

long ambient_dimension(const VarietyId& v) {
  const long n = v.n();
  switch (v.family()) {
    case Family::R: return n * (n - 1) / 2 - 1;
    case Family::C: return (n - 1) * (n - 1) - 1;
    case Family::H: return (2 * n - 2) * (2 * n - 3) / 2 - 1;
    case Family::O: return n == 3 ? 9 : 26;
  }
  return 0;
}

long dimension(const VarietyId& v) {
  const long d = v.d();
  const long n = v.n();
  switch (v.family()) {
    case Family::R: return d * (n - 1) - d * (d - 1) / 2 - 1;
    case Family::C: return 2 * d * (n - 1) - d * d - 1;
    case Family::H: return 4 * d * (n - 1) - d * (2 * d + 1) - 1;
    case Family::O: break;
  }
  throw UnsupportedFamily("no dimension formula for the octonionic family");
}

namespace {

// prod_{k=0}^{n-d-2} C(n-1+k, n-d-1-k) / C(2k+1, k)
Rational symmetric_degree_product(int d, int n) {
  Rational p = 1;
  for (int k = 0; k <= n - d - 2; ++k)
    p *= Rational(binomial(n - 1 + k, n - d - 1 - k), binomial(2 * k + 1, k));
  return p;
}

// prod_{k=0}^{n-d-2} C(n-1+k, d) / C(d+k, k)
Rational hermitian_degree_product(int d, int n) {
  Rational p = 1;
  for (int k = 0; k <= n - d - 2; ++k)
    p *= Rational(binomial(n - 1 + k, d), binomial(d + k, k));
  return p;
}

// 2^-(2n-2d-3) prod_{i=0}^{2n-2d-4} C(2n-2+i, 2d+2i+1) / C(2i+1, i)
Rational pfaffian_binomial_form(int d, int n) {
  Rational p = 1;
  for (int i = 0; i <= 2 * n - 2 * d - 4; ++i)
    p *= Rational(binomial(2 * n - 2 + i, 2 * d + 2 * i + 1), binomial(2 * i + 1, i));
  return p / Rational(BigInt(1) << (2 * n - 2 * d - 3));
}

// prod_{1 <= i <= j <= 2n-2d-3} (2d+i+j) / (i+j)
Rational pfaffian_ratio_form(int d, int n) {
  const int top = 2 * n - 2 * d - 3;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j) {
      num *= 2 * d + i + j;
      den *= i + j;
    }
  return Rational(num, den);
}

}  // namespace

BigInt degree(const VarietyId& v) {
  if (v.family() == Family::O) throw UnsupportedFamily("no degree formula for the octonionic family");
  if (v.d() == v.n() - 1) return 1;
  switch (v.family()) {
    case Family::R: return to_integer(symmetric_degree_product(v.d(), v.n()), "symmetric degree");
    case Family::C: return to_integer(hermitian_degree_product(v.d(), v.n()), "Hermitian degree");
    case Family::H: return to_integer(pfaffian_binomial_form(v.d(), v.n()), "Pfaffian degree");
    case Family::O: break;
  }
  return 0;
}

BigInt degree_cm2(int n) {
  if (n < 3) throw DomainError("degree_cm2 needs n >= 3");
  return to_integer(Rational(binomial(2 * n - 4, n - 2), 2), "degree_cm2");
}

Rational sectional_genus(int n) {
  if (n < 4) throw DomainError("sectional genus is defined for n >= 4");
  const Rational g = 1 + Rational(n - 4, 2) * Rational(degree_cm2(n));
  to_integer(g, "sectional genus");
  return g;
}

std::pair<Rational, Rational> pfaffian_degree_both(int d, int n) {
  if (d < 1 || d > n - 2) throw DomainError("Pfaffian degree needs 1 <= d <= n-2");
  return {pfaffian_binomial_form(d, n), pfaffian_ratio_form(d, n)};
}

VarietyId dual(const VarietyId& v) {
  if (v.d() == v.n() - 1) throw DomainError("the ambient space (d = n-1) has no dual here");
  return VarietyId(v.family(), v.n() - v.d() - 1, v.n());
}

VarietyInvariants invariants(const VarietyId& v) {
  VarietyInvariants out;
  out.ambient_dim = ambient_dimension(v);
  out.dual_d = v.n() - v.d() - 1;
  out.singular_locus_d = v.d() - 1;
  if (v.family() != Family::O) {
    out.dim = dimension(v);
    out.degree = degree(v);
  }
  if (v.family() == Family::R && v.d() == 2 && v.n() >= 4) out.sectional_genus = sectional_genus(v.n());
  return out;
}

namespace {

struct MinorShape {
  int minor_size;
  int matrix_size;
};

MinorShape minor_shape(const VarietyId& v, MinorSource source) {
  if (v.family() != Family::R) throw UnsupportedFamily("defining minors are provided for family R only");
  if (v.d() > v.n() - 2) throw DomainError("defining minors need d <= n-2");
  if (source == MinorSource::Gram) return {v.d() + 1, v.n() - 1};
  return {v.d() + 3, v.n() + 1};
}

// Calls visit on every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(int m, int k, F&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

BigInt minor_count(const VarietyId& v, MinorSource source) {
  const MinorShape shape = minor_shape(v, source);
  const BigInt c = binomial(shape.matrix_size, shape.minor_size);
  return c * c;
}

void for_each_minor(const VarietyId& v, MinorSource source,
                    const std::function<void(const MinorIndex&)>& visit) {
  const MinorShape shape = minor_shape(v, source);
  std::vector<std::vector<int>> subsets;
  for_each_subset(shape.matrix_size, shape.minor_size,
                  [&](const std::vector<int>& s) { subsets.push_back(s); });
  MinorIndex idx;
  for (const auto& rows : subsets) {
    idx.rows = rows;
    for (const auto& cols : subsets) {
      idx.cols = cols;
      visit(idx);
    }
  }
}

MinorSystem defining_minors(const VarietyId& v, MinorSource source) {
  const MinorShape shape = minor_shape(v, source);
  MinorSystem sys{v, source, shape.minor_size, shape.matrix_size, {}};
  for_each_minor(v, source, [&](const MinorIndex& m) { sys.minors.push_back(m); });
  return sys;
}

double max_abs_minor(const VarietyId& v, MinorSource source, const Eigen::MatrixXd& m) {
  const MinorShape shape = minor_shape(v, source);
  if (m.rows() != shape.matrix_size || m.cols() != shape.matrix_size)
    throw InputError("matrix size does not match the minor system");
  const int k = shape.minor_size;
  Eigen::MatrixXd sub(k, k);
  double best = 0.0;
  for_each_minor(v, source, [&](const MinorIndex& idx) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        sub(r, c) = m(idx.rows[static_cast<std::size_t>(r)], idx.cols[static_cast<std::size_t>(c)]);
    best = std::max(best, std::abs(Eigen::PartialPivLU<Eigen::MatrixXd>(sub).determinant()));
  });
  return best;
}

bool minors_vanish(const VarietyId& v, MinorSource source, const Eigen::MatrixXd& m,
                   double tol) {
  const MinorShape shape = minor_shape(v, source);
  const double scale = m.size() ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
  return max_abs_minor(v, source, m) <= tol * std::pow(scale, shape.minor_size);
}

}  // namespace cmvar
