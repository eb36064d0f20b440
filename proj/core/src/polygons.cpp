#include "cmvar/polygons.hpp"

#include "cmvar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmvar {

EdgeLengthVector::EdgeLengthVector(std::vector<double> q) : q_(std::move(q)) {
  if (q_.size() < 3) throw InputError("a polygon needs at least three edges");
  for (double v : q_) {
    if (!std::isfinite(v)) throw InputError("edge lengths must be finite");
    if (v <= 0.0) throw DomainError("edge lengths must be positive");
  }
}

double EdgeLengthVector::sum() const { return std::accumulate(q_.begin(), q_.end(), 0.0); }

namespace {

void require_standardized(const EdgeLengthVector& q) {
  if (std::abs(q.sum() - 1.0) > 1e-12 * static_cast<double>(q.size()))
    throw DomainError("edge-length vector must be standardized to unit perimeter");
}

}  // namespace

EdgeLengthVector standardize(const EdgeLengthVector& q) {
  const double total = q.sum();
  std::vector<double> out = q.lengths();
  for (double& v : out) v /= total;
  return EdgeLengthVector(std::move(out));
}

bool is_admissible(const EdgeLengthVector& q) {
  require_standardized(q);
  const double longest = *std::max_element(q.lengths().begin(), q.lengths().end());
  return longest <= 0.5 + 1e-15;
}

namespace {

struct WallScan {
  std::vector<double> sorted;     // lengths, descending
  std::vector<std::size_t> order; // sorted[k] = q[order[k]]
  std::vector<double> suffix;     // suffix[k] = sum_{m >= k} sorted[m]
  double tol = 0.0;
  double best = 0.0;
  std::vector<int> signs;
  std::vector<std::vector<int>> hits;

  void run(std::size_t k, double partial) {
    const double rest = suffix[k];
    // no completion can bring |partial +- rest| below this
    const double floor = std::abs(partial) - rest;
    if (floor > std::max(tol, best)) return;
    if (k == sorted.size()) {
      const double a = std::abs(partial);
      best = std::min(best, a);
      if (a <= tol) hits.push_back(signs);
      return;
    }
    for (int s : {+1, -1}) {
      signs[k] = s;
      run(k + 1, partial + s * sorted[k]);
    }
  }
};

}  // namespace

WallReport wall_report(const EdgeLengthVector& q, double tol) {
  require_standardized(q);
  const std::size_t n = q.lengths().size();
  if (n > 30) throw DomainError("wall scan is limited to n <= 30");

  WallScan scan;
  scan.order.resize(n);
  std::iota(scan.order.begin(), scan.order.end(), std::size_t{0});
  std::stable_sort(scan.order.begin(), scan.order.end(),
                   [&](std::size_t a, std::size_t b) { return q.lengths()[a] > q.lengths()[b]; });
  for (std::size_t k : scan.order) scan.sorted.push_back(q.lengths()[k]);
  scan.suffix.assign(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) scan.suffix[k] = scan.suffix[k + 1] + scan.sorted[k];
  scan.tol = tol;
  scan.best = scan.suffix[0];
  scan.signs.assign(n, 0);
  // quotient by eps -> -eps: the largest edge takes +1
  scan.signs[0] = +1;
  scan.run(1, scan.sorted[0]);

  WallReport report;
  report.distance_to_nearest_wall = scan.best;
  for (const auto& h : scan.hits) {
    std::vector<int> eps(n);
    for (std::size_t k = 0; k < n; ++k) eps[scan.order[k]] = h[k];
    if (eps[0] < 0)
      for (int& e : eps) e = -e;
    report.witnesses.push_back(std::move(eps));
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(), std::greater<>());
  report.on_wall = !report.witnesses.empty();
  return report;
}

LinkageSpec polygon_linkage(const EdgeLengthVector& q) {
  const int n = q.size();
  std::vector<Edge> edges;
  std::vector<double> sigma;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    const double len = q.lengths()[static_cast<std::size_t>(i)];
    sigma.push_back(len * len);
  }
  return LinkageSpec(n, std::move(edges), std::move(sigma));
}

int polygon_space_dimension(int n) {
  if (n < 3) throw DomainError("a polygon needs at least three edges");
  return n - 3;
}

Configuration collinear_witness(const EdgeLengthVector& q, const std::vector<int>& eps, double tol) {
  const std::size_t n = q.lengths().size();
  if (eps.size() != n) throw InputError("sign vector size mismatch");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), 1);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw InputError("signs must be +1 or -1");
    if (i + 1 < n) {
      x += eps[i] * q.lengths()[i];
      p(static_cast<Eigen::Index>(i + 1), 0) = x;
    }
  }
  const double closing = x + eps[n - 1] * q.lengths()[n - 1];
  if (std::abs(closing) > tol * std::max(1.0, q.sum()))
    throw DomainError("sign vector does not close the polygon on a line");
  return Configuration(std::move(p));
}

double octic_value(double a, double b, double c, double d, double r) {
  const double ab = a * a + b * b;
  const double cd = c * c + d * d;
  const double rho = ab + cd;
  const double r2 = r * r;
  const double inner = rho * rho - 2.0 * r2 * rho + (2.0 - r2) * (2.0 - r2);
  return inner * inner - 64.0 * ab * cd;
}

std::array<double, 4> torus_point(double r, double theta, double phi1, double phi2) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("torus radius must satisfy 0 < r < 1");
  const double lambda = 1.0 + r * std::cos(theta);
  const double mu = 1.0 + r * std::sin(theta);
  return {lambda * std::cos(phi1), lambda * std::sin(phi1), mu * std::cos(phi2), mu * std::sin(phi2)};
}

Eigen::MatrixXd symmetrize_hermitian(const HermitianGram& a) {
  const Eigen::MatrixXcd s = 0.5 * (a.entries + a.entries.transpose());
  return s.real();
}

}  // namespace cmvar
