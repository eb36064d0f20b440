#include "cmvar/rigidity.hpp"

#include "cmvar/errors.hpp"
#include "cmvar/linalg.hpp"
#include "cmvar/varieties.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>

namespace cmvar {

namespace {

void validate_simple_graph(int n, std::span<const Edge> edges) {
  if (n < 2) throw InputError("a graph needs at least two vertices");
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.i == e.j) throw InputError("loops are not allowed");
    if (e.i < 0 || e.j >= n) throw InputError("edge endpoint out of range");
    if (!seen.insert(e).second) throw InputError("repeated edge");
  }
}

bool is_connected(int n, std::span<const Edge> edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  int components = n;
  for (const Edge& e : edges) {
    const int a = find(e.i), b = find(e.j);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::string edge_count_reason(std::size_t got, int n) {
  return "edge count " + std::to_string(got) + " != " + std::to_string(2 * n - 3);
}

// (2,3) pebble game on a directed multigraph: an edge w -> x is covered by a
// pebble of w.
class PebbleGame {
 public:
  explicit PebbleGame(int n)
      : pebbles_(static_cast<std::size_t>(n), 2), out_(static_cast<std::size_t>(n)) {}

  // Returns the empty vector when the edge was inserted, otherwise the
  // vertex set certifying dependence.
  std::vector<int> insert(int u, int v) {
    while (pebbles(u) + pebbles(v) < 4) {
      if (gather(u, v)) continue;
      if (gather(v, u)) continue;
      return closure(u, v);
    }
    if (pebbles(u) > 0) {
      --pebbles_[static_cast<std::size_t>(u)];
      out_[static_cast<std::size_t>(u)].push_back(v);
    } else {
      --pebbles_[static_cast<std::size_t>(v)];
      out_[static_cast<std::size_t>(v)].push_back(u);
    }
    return {};
  }

 private:
  int pebbles(int w) const { return pebbles_[static_cast<std::size_t>(w)]; }

  // Moves one free pebble to root along a reversed path that avoids other.
  bool gather(int root, int other) {
    const std::size_t n = pebbles_.size();
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[static_cast<std::size_t>(root)] = 1;
    seen[static_cast<std::size_t>(other)] = 1;
    std::vector<int> stack{root};
    int found = -1;
    while (!stack.empty() && found < 0) {
      const int w = stack.back();
      stack.pop_back();
      for (int x : out_[static_cast<std::size_t>(w)]) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        seen[static_cast<std::size_t>(x)] = 1;
        parent[static_cast<std::size_t>(x)] = w;
        if (pebbles(x) > 0) {
          found = x;
          break;
        }
        stack.push_back(x);
      }
    }
    if (found < 0) return false;
    --pebbles_[static_cast<std::size_t>(found)];
    ++pebbles_[static_cast<std::size_t>(root)];
    for (int x = found; x != root;) {
      const int w = parent[static_cast<std::size_t>(x)];
      auto& adj = out_[static_cast<std::size_t>(w)];
      adj.erase(std::find(adj.begin(), adj.end(), x));
      out_[static_cast<std::size_t>(x)].push_back(w);
      x = w;
    }
    return true;
  }

  std::vector<int> closure(int u, int v) const {
    std::vector<char> seen(pebbles_.size(), 0);
    std::vector<int> stack{u, v};
    seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int x : out_[static_cast<std::size_t>(w)])
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          stack.push_back(x);
        }
    }
    std::vector<int> set;
    for (std::size_t w = 0; w < seen.size(); ++w)
      if (seen[w]) set.push_back(static_cast<int>(w));
    return set;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

std::string subset_reason(const std::vector<int>& subset, std::size_t spanned) {
  return std::to_string(subset.size()) + " vertices span " + std::to_string(spanned) +
         " edges > " + std::to_string(2 * subset.size() - 3);
}

std::size_t spanned_edges(const std::vector<int>& subset, std::span<const Edge> edges) {
  std::vector<char> in;
  for (int v : subset) {
    if (static_cast<std::size_t>(v) >= in.size()) in.resize(static_cast<std::size_t>(v) + 1, 0);
    in[static_cast<std::size_t>(v)] = 1;
  }
  const auto has = [&](int v) { return static_cast<std::size_t>(v) < in.size() && in[static_cast<std::size_t>(v)]; };
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return has(e.i) && has(e.j); }));
}

}  // namespace

LinkageSpec::LinkageSpec(int n, std::vector<Edge> edges, std::vector<double> sigma) : n_(n) {
  if (edges.size() != sigma.size()) throw InputError("one squared length per edge is required");
  if (edges.empty()) throw InputError("a linkage needs at least one edge");
  validate_simple_graph(n, edges);
  for (double s : sigma)
    if (!std::isfinite(s) || s < 0.0) throw InputError("squared lengths must be finite and nonnegative");
  if (!is_connected(n, edges)) throw InputError("linkage graph must be connected");
  if (std::all_of(sigma.begin(), sigma.end(), [](double s) { return s == 0.0; }))
    throw AllZeroSigma("the all-zero length assignment has no realization");

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k : order) {
    edges_.push_back(edges[k]);
    sigma_.push_back(sigma[k]);
  }
}

LamanResult is_laman(int n, std::span<const Edge> edges) {
  validate_simple_graph(n, edges);
  LamanResult r;
  if (edges.size() != static_cast<std::size_t>(2 * n - 3)) {
    r.reason = edge_count_reason(edges.size(), n);
    return r;
  }
  PebbleGame game(n);
  for (const Edge& e : edges) {
    std::vector<int> witness = game.insert(e.i, e.j);
    if (!witness.empty()) {
      r.reason = subset_reason(witness, spanned_edges(witness, edges));
      r.violating_subset = std::move(witness);
      return r;
    }
  }
  r.laman = true;
  return r;
}

LamanResult is_laman_exhaustive(int n, std::span<const Edge> edges) {
  validate_simple_graph(n, edges);
  if (n > 20) throw DomainError("exhaustive Laman check is limited to n <= 20");
  LamanResult r;
  if (edges.size() != static_cast<std::size_t>(2 * n - 3)) {
    r.reason = edge_count_reason(edges.size(), n);
    return r;
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int k = std::popcount(mask);
    if (k < 2) continue;
    std::size_t count = 0;
    for (const Edge& e : edges)
      if ((mask >> e.i & 1U) && (mask >> e.j & 1U)) ++count;
    if (count > static_cast<std::size_t>(2 * k - 3)) {
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) r.violating_subset.push_back(v);
      r.reason = subset_reason(r.violating_subset, count);
      return r;
    }
  }
  r.laman = true;
  return r;
}

LinkageSection linkage_section(const LinkageSpec& spec) {
  LinkageSection section;
  section.n = spec.n();
  section.codim = static_cast<int>(spec.edges().size()) - 1;
  std::optional<std::size_t> prev;
  for (std::size_t k = 0; k < spec.edges().size(); ++k) {
    const Edge& e = spec.edges()[k];
    const double s = spec.sigma()[k];
    if (s == 0.0) {
      section.equations.push_back({e, 1.0, e, 0.0});
      continue;
    }
    if (prev) {
      // sigma_e * s_prev - sigma_prev * s_e = 0
      section.equations.push_back({spec.edges()[*prev], s, e, spec.sigma()[*prev]});
    }
    prev = k;
  }
  if (!prev) throw AllZeroSigma("linkage has no edge of positive length");
  return section;
}

Eigen::MatrixXd section_matrix(const LinkageSection& section) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(section.equations.size()),
                                            static_cast<Eigen::Index>(pair_count(section.n)));
  for (std::size_t r = 0; r < section.equations.size(); ++r) {
    const auto& eq = section.equations[r];
    const auto row = static_cast<Eigen::Index>(r);
    m(row, static_cast<Eigen::Index>(pair_index(section.n, eq.first.i, eq.first.j))) += eq.coef_first;
    m(row, static_cast<Eigen::Index>(pair_index(section.n, eq.second.i, eq.second.j))) -= eq.coef_second;
  }
  return m;
}

BigInt realization_bound(int n) { return degree_cm2(n); }

namespace {

Eigen::MatrixXd distance_jacobian(const Eigen::MatrixXd& p, std::span<const Edge> edges) {
  const Eigen::Index d = p.cols();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(edges.size()), (p.rows() - 1) * d);
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const Edge& e = edges[r];
    const Eigen::RowVectorXd g = 2.0 * (p.row(e.i) - p.row(e.j));
    const auto row = static_cast<Eigen::Index>(r);
    if (e.i > 0) j.block(row, (e.i - 1) * d, 1, d) += g;
    if (e.j > 0) j.block(row, (e.j - 1) * d, 1, d) -= g;
  }
  return j;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

int rigidity_jacobian_rank(const Configuration& cfg, double tol) {
  const auto pairs = all_pairs(cfg.size());
  return linalg::numerical_rank(distance_jacobian(cfg.points(), pairs), tol);
}

int rigidity_matrix_rank(const Configuration& cfg, std::span<const Edge> edges, double tol) {
  for (const Edge& e : edges)
    if (e.i < 0 || e.j >= cfg.size() || e.i == e.j) throw InputError("edge endpoint out of range");
  return linalg::numerical_rank(distance_jacobian(cfg.points(), edges), tol);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Planar points from the pinned unknowns: p_0 = 0, p_1 = (z_0, 0),
// p_k = (z_{2k-3}, z_{2k-2}) for k >= 2.
Eigen::MatrixXd unpack(const Eigen::VectorXd& z, int n) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, 2);
  p(1, 0) = z(0);
  for (int k = 2; k < n; ++k) {
    p(k, 0) = z(2 * k - 3);
    p(k, 1) = z(2 * k - 2);
  }
  return p;
}

struct Residual {
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
};

Residual evaluate(const Eigen::VectorXd& z, const LinkageSpec& spec) {
  const int n = spec.n();
  const Eigen::MatrixXd p = unpack(z, n);
  const auto m = static_cast<Eigen::Index>(spec.edges().size());
  Residual out{Eigen::VectorXd(m), Eigen::MatrixXd::Zero(m, z.size())};
  // column of each pinned coordinate, -1 when fixed
  const auto col = [](int point, int axis) -> Eigen::Index {
    if (point == 0) return -1;
    if (point == 1) return axis == 0 ? 0 : -1;
    return 2 * point - 3 + axis;
  };
  for (Eigen::Index r = 0; r < m; ++r) {
    const Edge& e = spec.edges()[static_cast<std::size_t>(r)];
    const Eigen::RowVector2d diff = p.row(e.i) - p.row(e.j);
    out.r(r) = diff.squaredNorm() - spec.sigma()[static_cast<std::size_t>(r)];
    for (int axis = 0; axis < 2; ++axis) {
      if (const auto c = col(e.i, axis); c >= 0) out.jac(r, c) += 2.0 * diff(axis);
      if (const auto c = col(e.j, axis); c >= 0) out.jac(r, c) -= 2.0 * diff(axis);
    }
  }
  return out;
}

bool residual_ok(const Eigen::VectorXd& r, const LinkageSpec& spec, double tol) {
  for (Eigen::Index k = 0; k < r.size(); ++k)
    if (std::abs(r(k)) > tol * std::max(1.0, spec.sigma()[static_cast<std::size_t>(k)])) return false;
  return true;
}

// Levenberg-Marquardt on the edge equations.
std::optional<Eigen::VectorXd> solve_from(Eigen::VectorXd z, const LinkageSpec& spec,
                                          const SolverOptions& opts) {
  double lambda = 1e-3;
  Residual cur = evaluate(z, spec);
  double cost = cur.r.squaredNorm();
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (residual_ok(cur.r, spec, opts.residual_tol)) return z;
    const Eigen::MatrixXd jtj = cur.jac.transpose() * cur.jac;
    const Eigen::VectorXd g = cur.jac.transpose() * cur.r;
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::MatrixXd h = jtj;
      h.diagonal().array() += lambda * (jtj.diagonal().array() + 1e-12);
      const Eigen::VectorXd step = h.ldlt().solve(-g);
      if (!step.allFinite()) {
        lambda *= 10.0;
        continue;
      }
      const Eigen::VectorXd trial = z + step;
      Residual next = evaluate(trial, spec);
      const double next_cost = next.r.squaredNorm();
      if (next_cost < cost) {
        z = trial;
        cur = std::move(next);
        cost = next_cost;
        lambda = std::max(lambda / 5.0, 1e-15);
        improved = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!improved) break;
  }
  if (residual_ok(cur.r, spec, opts.residual_tol)) return z;
  return std::nullopt;
}

// Rotates the first point away from the origin onto the positive x-axis
// and reflects so the first point off that axis has positive y.
Eigen::MatrixXd canonicalize(Eigen::MatrixXd p, double scale) {
  const double eps = 1e-9 * scale;
  for (Eigen::Index k = 1; k < p.rows(); ++k) {
    const double len = p.row(k).norm();
    if (len > eps) {
      const double c = p(k, 0) / len, s = p(k, 1) / len;
      Eigen::Matrix2d rot;
      rot << c, s, -s, c;
      p = (p * rot.transpose()).eval();
      break;
    }
  }
  const double eps_y = 1e-7 * scale;
  for (Eigen::Index k = 1; k < p.rows(); ++k) {
    if (std::abs(p(k, 1)) > eps_y) {
      if (p(k, 1) < 0.0) p.col(1) *= -1.0;
      break;
    }
  }
  // clean signed zeros from the gauge-fixed coordinates
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (std::abs(p.data()[k]) <= 1e-14 * scale) p.data()[k] = 0.0;
  return p;
}

}  // namespace

RealizationSet enumerate_realizations(const LinkageSpec& spec, const SolverOptions& opts) {
  const int n = spec.n();
  if (n < 3) throw DomainError("realization enumeration needs n >= 3");
  if (n > opts.max_n) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the enumerator limit " +
                      std::to_string(opts.max_n));
  }
  if (opts.require_laman) {
    const LamanResult lr = is_laman(n, spec.edges());
    if (!lr.laman) throw NotLaman("graph is not Laman: " + lr.reason);
  }

  RealizationSet out;
  out.bound = realization_bound(n);
  const std::uint64_t budget =
      opts.budget ? opts.budget : 200ULL * out.bound.convert_to<std::uint64_t>();
  const double max_sigma = *std::max_element(spec.sigma().begin(), spec.sigma().end());
  const double scale = std::sqrt(max_sigma);
  const Eigen::Index unknowns = 2 * n - 3;

  std::vector<std::optional<Eigen::MatrixXd>> results(budget);
  const auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(k)));
      std::uniform_real_distribution<double> box(-2.0 * scale, 2.0 * scale);
      Eigen::VectorXd z(unknowns);
      for (Eigen::Index c = 0; c < unknowns; ++c) z(c) = box(rng);
      if (auto sol = solve_from(std::move(z), spec, opts)) results[k] = canonicalize(unpack(*sol, n), scale);
    }
  };

  unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                      : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(budget, 1)));
  if (workers <= 1) {
    run_range(0, budget);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (budget + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(budget, w * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(budget, b + chunk);
      pool.emplace_back(run_range, b, e);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<Eigen::MatrixXd> found;
  for (auto& r : results)
    if (r) found.push_back(std::move(*r));
  out.stats.attempts = budget;
  out.stats.converged = found.size();

  const auto lex_less = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  };
  std::sort(found.begin(), found.end(), lex_less);

  const double dedup = opts.dedup_tol * std::max(1.0, scale);
  std::vector<Eigen::MatrixXd> reps;
  for (auto& p : found) {
    const bool dup = std::any_of(reps.begin(), reps.end(), [&](const Eigen::MatrixXd& q) {
      return (p - q).cwiseAbs().maxCoeff() <= dedup;
    });
    if (!dup) reps.push_back(std::move(p));
  }
  out.stats.deduplicated = out.stats.converged - reps.size();

  const int full_rank = 2 * n - 3;
  // near a multiple root positions are only accurate to sqrt(residual_tol)
  const double rank_tol = std::max(1e-8, std::sqrt(opts.residual_tol));
  for (auto& p : reps) {
    Configuration cfg(std::move(p));
    if (rigidity_matrix_rank(cfg, spec.edges(), rank_tol) < full_rank) out.non_generic = true;
    out.representatives.push_back(std::move(cfg));
  }
  out.count = out.representatives.size();
  out.lower_bound_only = BigInt(out.count) < out.bound;
  if (out.non_generic) {
    out.warnings.push_back(
        "rigidity matrix is rank-deficient at a realization: solutions are not isolated or "
        "the lengths are not generic");
  }
  if (BigInt(out.count) > out.bound) {
    out.warnings.push_back("realization count exceeds the generic bound " + to_string(out.bound) +
                           ": instance is not generic or the dedup tolerance is too small");
  }
  return out;
}

}  // namespace cmvar
