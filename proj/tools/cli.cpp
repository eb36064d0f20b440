#include "cli.hpp"

#include <cmvar/cmvar.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace cmvar::cli {

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::InputError: return 2;
    case Status::DomainError: return 3;
    case Status::SolverIncomplete: return 4;
  }
  return 3;
}

namespace {

struct Context {
  double tol = kDefaultTol;
  std::string in_path;
  const InputSource* read_stdin = nullptr;
  Status status = Status::Ok;
  std::vector<std::string> diagnostics;

  Json input() const {
    std::string text;
    if (!in_path.empty()) {
      std::ifstream f(in_path);
      if (!f) throw InputError("cannot open input file " + in_path);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else {
      std::optional<std::string> s = read_stdin && *read_stdin ? (*read_stdin)() : std::nullopt;
      if (!s) throw InputError("this subcommand reads JSON from --in or stdin");
      text = std::move(*s);
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
};

using Handler = std::function<Json(Context&)>;

Json indices_1based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

Json rational_json(const Rational& q) {
  if (is_integer(q)) {
    const BigInt v = numerator(q);
    if (v >= -(BigInt(1) << 53) && v <= (BigInt(1) << 53)) return Json(v.convert_to<long long>());
  }
  return Json(to_string(q));
}

std::vector<Rational> exact_entries(const CayleyVector& s) {
  std::vector<Rational> out;
  out.reserve(s.entries().size());
  for (double v : s.entries()) out.emplace_back(v);
  return out;
}

Json exact_matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Cayley vector from any accepted encoding: {"n","s"}, {"points"} or {"gram"}.
CayleyVector cayley_any(const Json& j) {
  if (j.is_object() && j.contains("s")) return cayley_from_json(j);
  if (j.is_object() && j.contains("points")) return cayley_from_configuration(configuration_from_json(j));
  if (j.is_object() && j.contains("gram")) return cayley_from_gram(GramForm(real_matrix_from_json(j)));
  throw InputError("expected a Cayley vector, configuration or Gram form");
}

GramForm gram_any(const Json& j) {
  if (j.is_array() || (j.is_object() && j.contains("gram"))) return GramForm(real_matrix_from_json(j));
  if (j.is_object() && j.contains("points"))
    return GramForm(gram_from_configuration(configuration_from_json(j)));
  return gram_from_cayley(cayley_from_json(j));
}

Json realizability_json(const RealizabilityReport& r) {
  Json out{{"realizable", r.realizable}, {"min_rank", r.min_rank}, {"eigenvalues", r.eigenvalues}};
  out["negative_eigenvalue_index"] =
      r.negative_eigenvalue_index ? Json(*r.negative_eigenvalue_index + 1) : Json(nullptr);
  return out;
}

int threads_from_env() {
  const char* v = std::getenv("CMVAR_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long t = std::strtol(v, &end, 10);
  if (*end != '\0' || t < 1) throw InputError("CMVAR_THREADS must be a positive integer");
  return static_cast<int>(std::min(t, 256L));
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double real_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

BasicOctonion<Rational> exact_octonion(const Octonion& o) {
  auto q = [](const Quaternion& x) {
    return BasicQuaternion<Rational>{Rational(x.a), Rational(x.b), Rational(x.c), Rational(x.d)};
  };
  return {q(o.x1), q(o.x2)};
}

Json algebra(Context& ctx, const std::string& op, bool exact) {
  const Json in = ctx.input();
  if (op == "quat-mul") {
    return Json{{"product", to_json(quat_mul(quaternion_from_json(member(in, "x")),
                                             quaternion_from_json(member(in, "y"))))}};
  }
  if (op == "oct-mul") {
    const Octonion x = octonion_from_json(member(in, "x"));
    const Octonion y = octonion_from_json(member(in, "y"));
    const Octonion p = oct_mul(x, y);
    return Json{{"product", to_json(p)}, {"norm", norm(p)}};
  }
  if (op == "associator") {
    const Octonion a = associator(octonion_from_json(member(in, "x")), octonion_from_json(member(in, "y")),
                                  octonion_from_json(member(in, "z")));
    return Json{{"associator", to_json(a)}, {"norm", norm(a)}};
  }
  if (op == "det2") {
    return Json{{"det", oct_herm_det2(real_member(in, "alpha"), real_member(in, "beta"),
                                      octonion_from_json(member(in, "x")))}};
  }
  if (op == "det3") {
    const double al = real_member(in, "alpha"), be = real_member(in, "beta"), ga = real_member(in, "gamma");
    const Octonion x = octonion_from_json(member(in, "x"));
    const Octonion y = octonion_from_json(member(in, "y"));
    const Octonion z = octonion_from_json(member(in, "z"));
    if (exact) {
      const Rational d = oct_herm_det3(oct_hermitian3(Rational(al), Rational(be), Rational(ga), exact_octonion(x),
                                                      exact_octonion(y), exact_octonion(z)),
                                       0.0);
      return Json{{"det", to_string(d)}};
    }
    return Json{{"det", oct_herm_det3(oct_hermitian3(al, be, ga, x, y, z), ctx.tol)}};
  }
  if (op == "sigma") {
    const QuatMatrix a = quat_matrix_from_json(member(in, "gram"));
    const SkewForm s = sigma_map(HyperHermitianGram{a}, ctx.tol);
    return Json{{"skew", to_json(s.matrix())},
                {"pfaffian_rank", pfaffian_rank(s, ctx.tol)},
                {"quaternionic_rank", quaternionic_rank(a, ctx.tol)}};
  }
  if (op == "pfaffian-rank") {
    const SkewForm s(complex_matrix_from_json(member(in, "matrix")), ctx.tol);
    return Json{{"rank", pfaffian_rank(s, ctx.tol)}};
  }
  if (op == "hermitian-gram") {
    std::vector<Eigen::VectorXcd> pts;
    for (const auto& p : member(in, "points")) {
      if (!p.is_array()) throw InputError("points must be arrays of complex numbers");
      Eigen::VectorXcd v(static_cast<Eigen::Index>(p.size()));
      for (std::size_t k = 0; k < p.size(); ++k) v(static_cast<Eigen::Index>(k)) = complex_from_json(p[k]);
      pts.push_back(std::move(v));
    }
    const HermitianGram g = hermitian_gram(pts);
    return Json{{"gram", to_json(g.entries)}, {"rank", linalg::numerical_rank(g.entries, ctx.tol)}};
  }
  if (op == "hyper-gram") {
    std::vector<std::vector<Quaternion>> pts;
    for (const auto& p : member(in, "points")) {
      if (!p.is_array()) throw InputError("points must be arrays of quaternions");
      std::vector<Quaternion> v;
      for (const auto& x : p) v.push_back(quaternion_from_json(x));
      pts.push_back(std::move(v));
    }
    const HyperHermitianGram g = hyper_hermitian_gram(pts);
    return Json{{"gram", to_json(g.entries)}, {"rank", quaternionic_rank(g.entries, ctx.tol)}};
  }
  throw InputError("unknown algebra operation " + op);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& stdin_text) {
  return run(args, InputSource([&] { return stdin_text; }));
}

CommandResult run(const std::vector<std::string>& args, const InputSource& read_stdin) {
  Context ctx;
  ctx.read_stdin = &read_stdin;
  Handler handler;

  CLI::App app{"Cayley-Menger varieties toolkit", "cmvar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", ctx.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--in", ctx.in_path, "Read JSON input from this file instead of stdin");

  // convert
  std::string to = "auto";
  auto* convert = app.add_subcommand("convert", "Convert between configuration, Cayley and Gram encodings");
  convert->add_option("--to", to, "Target encoding")->check(CLI::IsMember({"auto", "cayley", "gram"}));
  convert->callback([&] {
    handler = [&](Context& c) {
      const Json in = c.input();
      const bool from_points = in.is_object() && in.contains("points");
      const bool from_gram = in.is_array() || (in.is_object() && in.contains("gram"));
      Json out = Json::object();
      if (to != "gram" && (from_points || from_gram)) {
        const CayleyVector s = cayley_any(in);
        out["cayley"] = to_json(s);
        if (!s.is_valid()) c.diagnostics.push_back("result has negative or all-zero entries");
      }
      if (to != "cayley" && !from_gram) out["gram"] = to_json(gram_any(in).matrix());
      if (out.empty()) throw InputError("input is already in the requested encoding");
      return out;
    };
  });

  // embed
  int embed_d = -1;
  auto* embed_cmd = app.add_subcommand("embed", "Recover a configuration from squared distances");
  embed_cmd->add_option("--d", embed_d, "Target dimension (default: minimal)");
  embed_cmd->callback([&] {
    handler = [&](Context& c) {
      const CayleyVector s = cayley_any(c.input());
      const RealizabilityReport r = realizability(s, c.tol);
      const int d = embed_d >= 0 ? embed_d : std::max(1, r.min_rank);
      Json out = to_json(embed(s, d, c.tol));
      out["rank"] = r.min_rank;
      return out;
    };
  });

  // rank
  bool rank_exact = false;
  auto* rank_cmd = app.add_subcommand("rank", "Ranks and determinants of the Cayley and Gram matrices");
  rank_cmd->add_flag("--exact", rank_exact, "Use exact rational arithmetic");
  rank_cmd->callback([&] {
    handler = [&](Context& c) {
      const CayleyVector s = cayley_any(c.input());
      if (rank_exact) {
        const std::vector<Rational> e = exact_entries(s);
        const ExactRankDetCheck r = rank_det_check_exact(s.n(), e);
        return Json{{"rank_S", r.rank_S}, {"rank_A", r.rank_A}, {"det_S", to_string(r.det_S)},
                    {"det_A", to_string(r.det_A)}, {"gram", exact_matrix_json(gram_from_cayley_exact(s.n(), e))}};
      }
      const RankDetCheck r = rank_det_check(s, c.tol);
      return Json{{"rank_S", r.rank_S}, {"rank_A", r.rank_A}, {"det_S", r.det_S}, {"det_A", r.det_A}};
    };
  });

  // realizable
  auto* realizable_cmd = app.add_subcommand("realizable", "Test whether squared distances come from real points");
  realizable_cmd->callback([&] {
    handler = [&](Context& c) { return realizability_json(realizability(cayley_any(c.input()), c.tol)); };
  });

  // variety / dual / minors share the identifying flags
  std::string family = "R";
  int vd = 0, vn = 0;
  auto add_variety_flags = [&](CLI::App* sub) {
    sub->add_option("--family", family, "R, C, H or O")->check(CLI::IsMember({"R", "C", "H", "O"}));
    sub->add_option("--d", vd, "Rank bound")->required();
    sub->add_option("--n", vn, "Number of points")->required();
  };

  auto* variety_cmd = app.add_subcommand("variety", "Invariants of a Cayley-Menger variety");
  add_variety_flags(variety_cmd);
  variety_cmd->add_flag("--json", "Emit JSON (the only format)");
  variety_cmd->callback([&] {
    handler = [&](Context&) {
      const VarietyInvariants inv = invariants(VarietyId(parse_family(family), vd, vn));
      Json out = Json::object();
      out["dim"] = inv.dim ? Json(*inv.dim) : Json(nullptr);
      out["ambient"] = inv.ambient_dim;
      out["degree"] = inv.degree ? Json(to_string(*inv.degree)) : Json(nullptr);
      out["genus"] = inv.sectional_genus ? rational_json(*inv.sectional_genus) : Json(nullptr);
      out["dual_d"] = inv.dual_d;
      return out;
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "Projective dual of a Cayley-Menger variety");
  add_variety_flags(dual_cmd);
  dual_cmd->callback([&] {
    handler = [&](Context&) {
      const VarietyId v = dual(VarietyId(parse_family(family), vd, vn));
      return Json{{"family", to_string(v.family())}, {"d", v.d()}, {"n", v.n()}};
    };
  });

  std::string source = "gram";
  bool evaluate = false, list = false;
  auto* minors_cmd = app.add_subcommand("minors", "Defining minors of a real Cayley-Menger variety");
  add_variety_flags(minors_cmd);
  minors_cmd->add_option("--source", source, "gram or cayley")->check(CLI::IsMember({"gram", "cayley"}));
  minors_cmd->add_flag("--evaluate", evaluate, "Evaluate the minors on the input point");
  minors_cmd->add_flag("--list", list, "List row and column index sets");
  minors_cmd->callback([&] {
    handler = [&](Context& c) {
      const VarietyId v(parse_family(family), vd, vn);
      const MinorSource src = source == "gram" ? MinorSource::Gram : MinorSource::Cayley;
      const MinorSystem sys = defining_minors(v, src);
      Json out{{"source", source},
               {"minor_size", sys.minor_size},
               {"matrix_size", sys.matrix_size},
               {"count", to_string(minor_count(v, src))}};
      if (list) {
        Json minors = Json::array();
        for (const MinorIndex& m : sys.minors)
          minors.push_back(Json{{"rows", indices_1based(m.rows)}, {"cols", indices_1based(m.cols)}});
        out["minors"] = std::move(minors);
      }
      if (evaluate) {
        const Json in = c.input();
        Eigen::MatrixXd m;
        if (src == MinorSource::Gram) {
          m = gram_any(in).matrix();
        } else {
          m = cayley_matrix(cayley_any(in)).entries;
        }
        out["max_abs_minor"] = max_abs_minor(v, src, m);
        out["vanish"] = minors_vanish(v, src, m, c.tol);
      }
      return out;
    };
  });

  // cone
  auto* cone_cmd = app.add_subcommand("cone", "Locate a Gram form relative to the Lorentz light cone");
  cone_cmd->callback([&] {
    handler = [&](Context& c) {
      const Json in = c.input();
      if (in.is_object() && in.contains("a") && in.contains("b")) {
        const GramForm a = gram_any(in.at("a"));
        const GramForm b = gram_any(in.at("b"));
        return Json{{"L", lorentz_L(a, b)}, {"distance", hyperbolic_distance(a.matrix(), b.matrix())}};
      }
      const LorentzReport r = cone_classify(gram_any(in), c.tol);
      return Json{{"L", r.value}, {"region", to_string(r.region)}, {"extremal_candidate", r.is_extremal_candidate}};
    };
  });

  // laman
  auto* laman_cmd = app.add_subcommand("laman", "Test the Laman sparsity condition");
  laman_cmd->callback([&] {
    handler = [&](Context& c) {
      const Json in = c.input();
      const Json& nj = member(in, "n");
      if (!nj.is_number_integer()) throw InputError("\"n\" must be an integer");
      const int n = nj.get<int>();
      const std::vector<Edge> edges = edges_from_json(in, n);
      const LamanResult r = is_laman(n, edges);
      Json out{{"laman", r.laman}};
      if (!r.laman) out["reason"] = r.reason;
      if (!r.violating_subset.empty()) out["violating_subset"] = indices_1based(r.violating_subset);
      return out;
    };
  });

  // bound
  int bound_n = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on planar realizations of a Laman linkage");
  bound_cmd->add_option("--n", bound_n, "Number of vertices (otherwise read a linkage)");
  bound_cmd->callback([&] {
    handler = [&](Context& c) {
      int n = bound_n;
      if (n == 0) {
        const Json in = c.input();
        const Json& nj = member(in, "n");
        if (!nj.is_number_integer()) throw InputError("\"n\" must be an integer");
        n = nj.get<int>();
      }
      return Json{{"n", n}, {"bound", to_string(realization_bound(n))}};
    };
  });

  // realize
  SolverOptions solver;
  auto* realize_cmd = app.add_subcommand("realize", "Enumerate real planar realizations of a linkage");
  realize_cmd->add_option("--seed", solver.seed, "Random seed")->capture_default_str();
  realize_cmd->add_option("--budget", solver.budget, "Number of solver starts (0: automatic)");
  realize_cmd->callback([&] {
    handler = [&](Context& c) {
      const LinkageSpec spec = linkage_from_json(c.input());
      solver.threads = threads_from_env();
      const RealizationSet rs = enumerate_realizations(spec, solver);
      Json reps = Json::array();
      for (const Configuration& cfg : rs.representatives) reps.push_back(to_json(cfg)["points"]);
      Json out{{"count", rs.count},
               {"bound", to_string(rs.bound)},
               {"lower_bound_only", rs.lower_bound_only},
               {"non_generic", rs.non_generic},
               {"congruence", "O(2), reflections identified"},
               {"stats",
                {{"attempts", rs.stats.attempts},
                 {"converged", rs.stats.converged},
                 {"deduplicated", rs.stats.deduplicated}}},
               {"realizations", std::move(reps)}};
      for (const std::string& w : rs.warnings) c.diagnostics.push_back(w);
      const BigInt full_budget = 200 * rs.bound;
      if (solver.budget != 0 && BigInt(solver.budget) < full_budget && BigInt(rs.count) < rs.bound) {
        c.status = Status::SolverIncomplete;
        c.diagnostics.push_back("budget of " + std::to_string(solver.budget) +
                                " starts exhausted; count is a lower bound");
      }
      return out;
    };
  });

  // polygon
  std::vector<double> qs;
  auto* polygon_cmd = app.add_subcommand("polygon", "Wall structure of a polygon space");
  polygon_cmd->add_option("--q", qs, "Comma-separated edge lengths")->delimiter(',')->required();
  polygon_cmd->callback([&] {
    handler = [&](Context& c) {
      const EdgeLengthVector q = standardize(EdgeLengthVector(qs));
      const WallReport w = wall_report(q, c.tol);
      Json witnesses = Json::array();
      for (const auto& eps : w.witnesses) witnesses.push_back(eps);
      Json out{{"q", q.lengths()},
               {"admissible", is_admissible(q)},
               {"on_wall", w.on_wall},
               {"witnesses", std::move(witnesses)},
               {"distance", w.distance_to_nearest_wall},
               {"dimension", polygon_space_dimension(q.size())}};
      if (w.on_wall) out["collinear_witness"] = to_json(collinear_witness(q, w.witnesses.front(), c.tol))["points"];
      return out;
    };
  });

  // octic
  std::vector<double> point, torus;
  double octic_r = 0.5;
  auto* octic_cmd = app.add_subcommand("octic", "Evaluate the torus octic");
  octic_cmd->add_option("--r", octic_r, "Torus radius")->capture_default_str();
  auto* point_opt = octic_cmd->add_option("--point", point, "a,b,c,d")->delimiter(',')->expected(4);
  auto* torus_opt = octic_cmd->add_option("--torus", torus, "theta,phi1,phi2")->delimiter(',')->expected(3);
  point_opt->excludes(torus_opt);
  octic_cmd->callback([&] {
    handler = [&](Context&) {
      std::array<double, 4> p{};
      if (!torus.empty()) {
        p = torus_point(octic_r, torus[0], torus[1], torus[2]);
      } else if (!point.empty()) {
        std::copy(point.begin(), point.end(), p.begin());
      } else {
        throw InputError("octic needs --point or --torus");
      }
      return Json{{"point", p}, {"r", octic_r}, {"value", octic_value(p[0], p[1], p[2], p[3], octic_r)}};
    };
  });

  // algebra
  std::string op;
  bool algebra_exact = false;
  auto* algebra_cmd = app.add_subcommand("algebra", "Quaternion and octonion operations");
  algebra_cmd
      ->add_option("--op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"quat-mul", "oct-mul", "associator", "det2", "det3", "sigma", "pfaffian-rank",
                             "hermitian-gram", "hyper-gram"}));
  algebra_cmd->add_flag("--exact", algebra_exact, "Exact rational det3");
  algebra_cmd->callback([&] { handler = [&](Context& c) { return algebra(c, op, algebra_exact); }; });

  CommandResult result;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    result.payload = nullptr;
    result.help = app.help();
    for (const CLI::App* sub : app.get_subcommands())
      if (sub->parsed()) result.help = sub->help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::InputError;
    result.payload = Json{{"error", "InputError"}, {"message", e.what()}};
    result.diagnostics.push_back(e.what());
    return result;
  } catch (const Error& e) {
    result.status = dynamic_cast<const InputError*>(&e) ? Status::InputError : Status::DomainError;
    result.payload = Json{{"error", result.status == Status::InputError ? "InputError" : "DomainError"},
                          {"message", e.what()}};
    result.diagnostics.push_back(e.what());
    return result;
  }

  if (!(ctx.tol > 0.0) || !std::isfinite(ctx.tol)) {
    result.status = Status::InputError;
    result.payload = Json{{"error", "InputError"}, {"message", "--tol must be positive"}};
    result.diagnostics.push_back("--tol must be positive");
    return result;
  }

  try {
    result.payload = handler(ctx);
    result.status = ctx.status;
    result.diagnostics = std::move(ctx.diagnostics);
  } catch (const InputError& e) {
    result.status = Status::InputError;
    result.payload = Json{{"error", "InputError"}, {"message", e.what()}};
    result.diagnostics.push_back(e.what());
  } catch (const DomainError& e) {
    result.status = Status::DomainError;
    result.payload = Json{{"error", "DomainError"}, {"message", e.what()}};
    result.diagnostics.push_back(e.what());
  } catch (const InternalError& e) {
    result.status = Status::DomainError;
    result.payload = Json{{"error", "InternalError"}, {"message", e.what()}};
    result.diagnostics.push_back(std::string("internal consistency check failed: ") + e.what());
  } catch (const Json::exception& e) {
    result.status = Status::InputError;
    result.payload = Json{{"error", "InputError"}, {"message", e.what()}};
    result.diagnostics.push_back(e.what());
  }
  return result;
}

}  // namespace cmvar::cli
