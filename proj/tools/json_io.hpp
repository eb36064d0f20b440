#pragma once

// JSON encodings shared by the CLI subcommands.
//
//   Configuration   {"dim": d, "points": [[x, ...], ...]}
//   CayleyVector    {"n": n, "s": {"1,2": v, ...}}        keys 1-based, i < j
//   Gram form       {"gram": [[...], ...]}
//   LinkageSpec     {"n": n, "edges": [[1,2], ...], "sigma": {"1,2": v, ...}}
//   complex         [re, im]
//   quaternion      [a, b, c, d]
//   octonion        [[a, b, c, d], [a', b', c', d']]
//   matrices        row-major nested arrays

#include <cmvar/algebras.hpp>
#include <cmvar/distances.hpp>
#include <cmvar/rigidity.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cmvar::cli {

using Json = nlohmann::ordered_json;

std::string pair_key(int i, int j);

Configuration configuration_from_json(const Json& j);
Json to_json(const Configuration& cfg);

CayleyVector cayley_from_json(const Json& j);
Json to_json(const CayleyVector& s);

/// Reads {"gram": [[...]]} or a bare nested array.
Eigen::MatrixXd real_matrix_from_json(const Json& j);
Json to_json(const Eigen::MatrixXd& m);

Eigen::MatrixXcd complex_matrix_from_json(const Json& j);
Json to_json(const Eigen::MatrixXcd& m);

std::complex<double> complex_from_json(const Json& j);

Quaternion quaternion_from_json(const Json& j);
Json to_json(const Quaternion& q);

Octonion octonion_from_json(const Json& j);
Json to_json(const Octonion& o);

QuatMatrix quat_matrix_from_json(const Json& j);
Json to_json(const QuatMatrix& m);

/// Edge list plus optional sigma map; sigma is required by linkages.
std::vector<Edge> edges_from_json(const Json& j, int n);
LinkageSpec linkage_from_json(const Json& j);

}  // namespace cmvar::cli
