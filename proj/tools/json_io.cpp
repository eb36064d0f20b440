#include "json_io.hpp"

#include <cmvar/errors.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace cmvar::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InputError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

// Parses "i,j" into 0-based (i-1, j-1).
std::pair<int, int> parse_pair_key(const std::string& key, int n) {
  std::istringstream in(key);
  int i = 0, j = 0;
  char comma = 0;
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
    throw InputError("malformed pair key \"" + key + "\" (expected \"i,j\")");
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw InputError("pair key \"" + key + "\" out of range");
  if (i > j) std::swap(i, j);
  return {i - 1, j - 1};
}

// Folds -0.0 into 0.0 so output does not depend on the sign of zero.
double clean(double v) { return v + 0.0; }

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

std::string pair_key(int i, int j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

Configuration configuration_from_json(const Json& j) {
  const Json& pts = array(field(j, "points"), "points");
  std::vector<std::vector<double>> points;
  for (const auto& p : pts) {
    std::vector<double> coords;
    for (const auto& x : array(p, "point")) coords.push_back(number(x, "coordinate"));
    points.push_back(std::move(coords));
  }
  if (j.contains("dim")) {
    const int d = integer(j.at("dim"), "dim");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != d) throw InputError("point dimension does not match \"dim\"");
  }
  return Configuration::from_points(points);
}

Json to_json(const Configuration& cfg) {
  Json pts = Json::array();
  for (int i = 0; i < cfg.size(); ++i) {
    Json p = Json::array();
    for (int k = 0; k < cfg.dim(); ++k) p.push_back(clean(cfg.points()(i, k)));
    pts.push_back(std::move(p));
  }
  return Json{{"dim", cfg.dim()}, {"points", std::move(pts)}};
}

CayleyVector cayley_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 2) throw InputError("n must be at least 2");
  const Json& s = field(j, "s");
  if (!s.is_object()) throw InputError("\"s\" must be an object keyed by \"i,j\"");
  std::vector<double> entries(pair_count(n), std::numeric_limits<double>::quiet_NaN());
  for (const auto& [key, value] : s.items()) {
    const auto [a, b] = parse_pair_key(key, n);
    double& slot = entries[pair_index(n, a, b)];
    if (!std::isnan(slot)) throw InputError("pair \"" + key + "\" given twice");
    slot = number(value, "squared distance");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::isnan(entries[pair_index(n, a, b)]))
        throw InputError("missing squared distance for pair \"" + pair_key(a, b) + "\"");
  return CayleyVector(n, std::move(entries));
}

Json to_json(const CayleyVector& s) {
  Json entries = Json::object();
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) entries[pair_key(i, j)] = s.at(i, j);
  return Json{{"n", s.n()}, {"s", std::move(entries)}};
}

Eigen::MatrixXd real_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "gram") : j;
  array(rows, "matrix");
  if (rows.empty()) throw InputError("matrix must be nonempty");
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(array(rows.front(), "matrix row").size());
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = array(rows[static_cast<std::size_t>(i)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != c) throw InputError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = number(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  return m;
}

Json to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(clean(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::complex<double> complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex numbers are [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Eigen::MatrixXcd complex_matrix_from_json(const Json& j) {
  const Json& rows = array(j, "matrix");
  if (rows.empty()) throw InputError("matrix must be nonempty");
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(array(rows.front(), "matrix row").size());
  Eigen::MatrixXcd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = array(rows[static_cast<std::size_t>(i)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != c) throw InputError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({clean(m(i, k).real()), clean(m(i, k).imag())}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Quaternion quaternion_from_json(const Json& j) {
  if (j.is_number()) return Quaternion::real(j.get<double>());
  if (!j.is_array() || j.size() != 4) throw InputError("quaternions are [a, b, c, d]");
  return {number(j[0], "quaternion component"), number(j[1], "quaternion component"),
          number(j[2], "quaternion component"), number(j[3], "quaternion component")};
}

Json to_json(const Quaternion& q) { return Json::array({clean(q.a), clean(q.b), clean(q.c), clean(q.d)}); }

Octonion octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("octonions are [[a,b,c,d], [a',b',c',d']]");
  return {quaternion_from_json(j[0]), quaternion_from_json(j[1])};
}

Json to_json(const Octonion& o) { return Json::array({to_json(o.x1), to_json(o.x2)}); }

QuatMatrix quat_matrix_from_json(const Json& j) {
  const Json& rows = array(j, "matrix");
  if (rows.empty()) throw InputError("matrix must be nonempty");
  const std::size_t c = array(rows.front(), "matrix row").size();
  QuatMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = array(rows[i], "matrix row");
    if (row.size() != c) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = quaternion_from_json(row[k]);
  }
  return m;
}

Json to_json(const QuatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Edge> edges_from_json(const Json& j, int n) {
  std::vector<Edge> edges;
  for (const auto& e : array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges are [i, j] pairs");
    const int a = integer(e[0], "edge endpoint");
    const int b = integer(e[1], "edge endpoint");
    if (a < 1 || b < 1 || a > n || b > n) throw InputError("edge endpoint out of range");
    edges.emplace_back(a - 1, b - 1);
  }
  return edges;
}

LinkageSpec linkage_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  std::vector<Edge> edges = edges_from_json(j, n);
  const Json& sig = field(j, "sigma");
  if (!sig.is_object()) throw InputError("\"sigma\" must be an object keyed by \"i,j\"");
  std::vector<double> sigma;
  for (const Edge& e : edges) {
    const std::string key = pair_key(e.i, e.j);
    const std::string alt = pair_key(e.j, e.i);
    if (sig.contains(key)) {
      sigma.push_back(number(sig.at(key), "squared length"));
    } else if (sig.contains(alt)) {
      sigma.push_back(number(sig.at(alt), "squared length"));
    } else {
      throw InputError("missing squared length for edge \"" + key + "\"");
    }
  }
  return LinkageSpec(n, std::move(edges), std::move(sigma));
}

}  // namespace cmvar::cli
