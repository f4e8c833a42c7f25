#include "qs_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>

#include "qs/error.hpp"
#include "qs/orbit.hpp"
#include "qs/reflect.hpp"
#include "qs/regularize.hpp"
#include "qs_cli/json_io.hpp"
#include "qs_cli/suite.hpp"

namespace qs::cli {

namespace {

using io::json;

struct Outcome {
  json value;
  bool ok = true;
  std::string text;  // used by --format text when set
};

QuiverPtr load_quiver(const std::string& path) {
  return std::make_shared<const QuiverMult>(parse_quiver(io::read_text_file(path)));
}

std::size_t vertex_arg(const QuiverMult& q, const std::string& name) { return q.vertex_index(name); }

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string report_text(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + "\n";
  return out + (r.ok() ? "ok\n" : std::to_string(r.failures()) + " failed\n");
}

std::string matrix_text(const ZMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m(r, c));
    out += "\n";
  }
  return out;
}

Report weyl_report(const QuiverMult& q) {
  Report report = verify_coxeter(q);
  const ZMatrix p = pairing_matrix(q);
  const ZMatrix rho_m = rho_matrix(q);
  const LiftedCartan lc = lift_cartan(q);
  report.add("lifted Cartan is symmetrizable", lc.symmetrizable());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const std::string& name = q.vertices()[i].name;
    const ZMatrix r = param_reflection_matrix(q, i);
    const ZMatrix st = transpose_action_matrix(q, i);
    report.add("s~_" + name + " is the transpose of r_" + name, p * r.transpose() * p == st);
    report.add("s~_" + name + " = prod_k s_(" + name + ",k)", lifted_product(lc, i) == st);
    report.add("rho r_" + name + " = s_" + name + "^t rho", rho_m * r == dim_reflection_matrix(q, i).transpose() * rho_m);
  }
  return report;
}

json moment_json(const QuiverMult& q, const MomentValue& mu) {
  json out = json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) out[q.vertices()[i].name] = io::to_json(mu[i]);
  return out;
}

void write_or_print(const std::optional<std::string>& path, const std::string& content, Outcome& outcome) {
  if (!path) return;
  std::ofstream f(*path);
  if (!f) throw Error(ErrorCode::InvalidValue, "cannot write '" + *path + "'");
  f << content;
  outcome.value = {{"written", *path}};
  outcome.text = "wrote " + *path + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qs: exact computations for quivers with multiplicities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<Outcome()> action;
  std::string file, vertex, lambda_path, rep_path, dims, a_path, leg_text;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  std::size_t trials = 25;
  std::string suite = "all";
  bool dot = false;

  auto* parse = app.add_subcommand("parse", "Parse and re-serialize a quiver file");
  parse->add_option("FILE", file)->required();
  parse->add_flag("--dot", dot, "Emit Graphviz DOT");
  parse->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      std::string text = dot ? to_dot(*q) : serialize_quiver(*q);
      return Outcome{dot ? json(text) : io::to_json(*q), true, text};
    };
  });

  auto* cartan_cmd = app.add_subcommand("cartan", "Print the Cartan data");
  cartan_cmd->add_option("FILE", file)->required();
  cartan_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      CartanData c = cartan(*q);
      json names = json::array();
      for (const auto& v : q->vertices()) names.push_back(v.name);
      json value = {{"vertices", names},     {"A", io::to_json(c.adjacency)}, {"A_reduced", io::to_json(c.reduced)},
                    {"D", c.mult},           {"C", io::to_json(c.cartan)},    {"DC", io::to_json(c.symmetrized())}};
      return Outcome{value, true, matrix_text(c.cartan)};
    };
  });

  auto* dim_cmd = app.add_subcommand("dim", "Expected dimension 2 - (v, v)");
  dim_cmd->add_option("FILE", file)->required();
  dim_cmd->add_option("--v", dims, "Dimension vector, e.g. 1,1,1 or i=1,j=1")->required();
  dim_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      DimVector v = io::parse_dims(*q, dims);
      const std::int64_t e = expected_dim(*q, v);
      return Outcome{{{"v", io::dims_to_json(*q, v)}, {"pairing", bilinear(*q, v, v)}, {"expected_dim", e}},
                     true,
                     std::to_string(e) + "\n"};
    };
  });

  auto* reflect_cmd = app.add_subcommand("reflect", "Apply (r_i, s_i) to a parameter and dimension vector");
  reflect_cmd->add_option("FILE", file)->required();
  reflect_cmd->add_option("--vertex", vertex)->required();
  reflect_cmd->add_option("--lambda", lambda_path, "Parameter JSON file")->required();
  reflect_cmd->add_option("--v", dims)->required();
  reflect_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      const std::size_t i = vertex_arg(*q, vertex);
      ParamVector lambda = io::params_from_json(*q, io::read_json_file(lambda_path));
      DimVector v = io::parse_dims(*q, dims);
      return Outcome{{{"lambda", io::params_to_json(*q, reflect_param(*q, i, lambda))},
                      {"v", io::dims_to_json(*q, reflect_dim(*q, i, v))}},
                     true,
                     {}};
    };
  });

  auto* weyl_cmd = app.add_subcommand("weyl-verify", "Check Coxeter relations and transpose coherence");
  weyl_cmd->add_option("FILE", file)->required();
  weyl_cmd->callback([&] {
    action = [&] {
      Report r = weyl_report(*load_quiver(file));
      return Outcome{io::to_json(r), r.ok(), report_text(r)};
    };
  });

  auto* moment_cmd = app.add_subcommand("moment", "Evaluate the moment map");
  moment_cmd->add_option("FILE", file)->required();
  moment_cmd->add_option("--rep", rep_path, "Representation JSON file")->required();
  moment_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      Representation rep = io::rep_from_json(q, io::read_json_file(rep_path));
      MomentValue mu = moment_map(rep);
      return Outcome{{{"mu", moment_json(*q, mu)}, {"perpendicularity", io::to_json(perpendicularity_defect(mu))}},
                     true,
                     {}};
    };
  });

  auto* mesh_cmd = app.add_subcommand("mesh", "Residual mu + lambda Id; fails unless it vanishes");
  mesh_cmd->add_option("FILE", file)->required();
  mesh_cmd->add_option("--rep", rep_path)->required();
  mesh_cmd->add_option("--lambda", lambda_path)->required();
  mesh_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      Representation rep = io::rep_from_json(q, io::read_json_file(rep_path));
      ParamVector lambda = io::params_from_json(*q, io::read_json_file(lambda_path));
      MomentValue res = mesh_check(rep, lambda);
      const bool ok = is_zero(res);
      return Outcome{{{"residual", moment_json(*q, res)}, {"on_level_set", ok}}, ok, ok ? "on level set\n" : "off level set\n"};
    };
  });

  auto* random_cmd = app.add_subcommand("random-rep", "Sample a random representation");
  random_cmd->add_option("FILE", file)->required();
  random_cmd->add_option("--v", dims)->required();
  random_cmd->add_option("--seed", seed);
  random_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      return Outcome{io::to_json(random_rep(q, io::parse_dims(*q, dims), seed)), true, {}};
    };
  });

  auto* orbit_cmd = app.add_subcommand("orbit-check", "Decide membership in the orbit of Theta");
  orbit_cmd->add_option("SPEC", file, "Orbit spec JSON")->required();
  orbit_cmd->add_option("--a", a_path, "Matrix JSON (RMap)")->required();
  orbit_cmd->callback([&] {
    action = [&] {
      OrbitSpec spec = io::orbit_spec_from_json(io::read_json_file(file));
      Membership m = orbit_membership(spec, io::rend_from_json(io::read_json_file(a_path)));
      json value = {{"member", m.member}};
      if (!m.member) value["reason"] = m.reason;
      return Outcome{value, m.member, m.member ? "member\n" : "not a member: " + m.reason + "\n"};
    };
  });

  auto* leg_cmd = app.add_subcommand("leg-factor", "Factor an orbit element through the leg");
  leg_cmd->add_option("SPEC", file)->required();
  leg_cmd->add_option("--a", a_path)->required();
  leg_cmd->callback([&] {
    action = [&] {
      OrbitSpec spec = io::orbit_spec_from_json(io::read_json_file(file));
      REnd a = io::rend_from_json(io::read_json_file(a_path));
      LegPoint pt = leg_factorize(spec, a);
      const bool nu_ok = leg_nu(spec, pt) == a;
      const bool level_ok = is_zero(leg_residual(spec, pt));
      const bool nondeg = leg_nondegenerate(spec, pt);
      json value = io::to_json(pt);
      value["nu_equals_a"] = nu_ok;
      value["on_level_set"] = level_ok;
      value["nondegenerate"] = nondeg;
      return Outcome{value, nu_ok && level_ok && nondeg, {}};
    };
  });

  auto* functor_cmd = app.add_subcommand("functor", "Apply the reflection functor F_i");
  functor_cmd->add_option("FILE", file)->required();
  functor_cmd->add_option("--vertex", vertex)->required();
  functor_cmd->add_option("--lambda", lambda_path)->required();
  functor_cmd->add_option("--rep", rep_path)->required();
  functor_cmd->add_option("--out", out_path, "Write the representation here");
  functor_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      const std::size_t i = vertex_arg(*q, vertex);
      ParamVector lambda = io::params_from_json(*q, io::read_json_file(lambda_path));
      Representation rep = io::rep_from_json(q, io::read_json_file(rep_path));
      Representation image = reflection_functor(rep, i, lambda);
      json value = {{"rep", io::to_json(image)}, {"lambda", io::params_to_json(*q, reflect_param(*q, i, lambda))}};
      Outcome outcome{value, true, {}};
      write_or_print(out_path, io::to_json(image).dump(2) + "\n", outcome);
      return outcome;
    };
  });

  auto* level_cmd = app.add_subcommand("random-level", "Sample a point with mu_i = -lambda_i Id");
  level_cmd->add_option("FILE", file)->required();
  level_cmd->add_option("--vertex", vertex)->required();
  level_cmd->add_option("--lambda", lambda_path)->required();
  level_cmd->add_option("--v", dims)->required();
  level_cmd->add_option("--seed", seed);
  level_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      ParamVector lambda = io::params_from_json(*q, io::read_json_file(lambda_path));
      Representation rep = random_level_point(q, lambda, io::parse_dims(*q, dims), vertex_arg(*q, vertex), seed);
      return Outcome{io::to_json(rep), true, {}};
    };
  });

  auto* legs_cmd = app.add_subcommand("legs", "List irregular legs");
  legs_cmd->add_option("FILE", file)->required();
  legs_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      json value = json::array();
      std::string text;
      auto legs = find_legs(*q);
      if (legs.empty()) text = "no legs\n";
      for (const auto& leg : legs) {
        value.push_back(io::to_json(*q, leg));
        for (std::size_t k = 0; k < leg.vertices.size(); ++k) text += (k ? "," : "") + q->vertices()[leg.vertices[k]].name;
        text += "\n";
      }
      return Outcome{value, true, text};
    };
  });

  auto* reg_cmd = app.add_subcommand("regularize", "Regularize along a leg");
  reg_cmd->add_option("FILE", file)->required();
  reg_cmd->add_option("--leg", leg_text, "Base vertex then leg vertices, comma separated")->required();
  reg_cmd->add_option("--lambda", lambda_path);
  reg_cmd->add_option("--v", dims);
  reg_cmd->add_option("--out", out_path, "Write the regularized quiver here");
  reg_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      LegDescriptor leg = make_leg(*q, split_names(leg_text));
      QuiverMult regular = regularize_quiver(*q, leg);
      json value = {{"quiver", serialize_quiver(regular)}};
      if (!lambda_path.empty() && !dims.empty()) {
        ParamVector lambda = io::params_from_json(*q, io::read_json_file(lambda_path));
        DimVector v = io::parse_dims(*q, dims);
        HypothesisReport h = check_theorem_hypotheses(*q, leg, lambda, v);
        value["lambda"] = io::params_to_json(regular, regularize_lambda(*q, leg, lambda));
        value["v"] = io::dims_to_json(regular, regularize_dim(*q, leg, v));
        value["hypotheses"] = {{"holds", h.holds()}, {"negative_dims", h.negative_dims}, {"non_units", h.non_units}};
        if (h.corollary) value["hypotheses"]["corollary"] = *h.corollary;
      }
      Outcome outcome{value, true, serialize_quiver(regular)};
      if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw Error(ErrorCode::InvalidValue, "cannot write '" + *out_path + "'");
        f << serialize_quiver(regular);
        outcome.value["written"] = *out_path;
      }
      return outcome;
    };
  });

  auto* regv_cmd = app.add_subcommand("reg-verify", "Check the regularization identities along a leg");
  regv_cmd->add_option("FILE", file)->required();
  regv_cmd->add_option("--leg", leg_text)->required();
  regv_cmd->callback([&] {
    action = [&] {
      QuiverPtr q = load_quiver(file);
      LegDescriptor leg = make_leg(*q, split_names(leg_text));
      Report r = verify_isometry(*q, leg);
      r.append(verify_semidirect(*q, leg));
      r.append(verify_param_equivariance(*q, leg));
      return Outcome{io::to_json(r), r.ok(), report_text(r)};
    };
  });

  auto* check_cmd = app.add_subcommand("check", "Run randomized property suites over a corpus directory");
  check_cmd->add_option("DIR", file)->required();
  check_cmd->add_option("--suite", suite, "coxeter|moment|functor|orbit|regularize|all");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--trials", trials);
  check_cmd->callback([&] {
    action = [&] {
      auto corpus = suite::load_corpus(file);
      auto results = suite::run_suite(corpus, suite, seed, trials);
      json value = json::array();
      std::string text;
      bool ok = true;
      for (const auto& r : results) {
        json failures = json::array();
        for (const auto& f : r.failures) {
          failures.push_back({{"quiver", f.quiver}, {"check", f.check}, {"seed", f.seed}, {"detail", f.detail}});
          text += "FAIL [" + f.quiver + "] " + f.check + " (seed " + std::to_string(f.seed) + ")" +
                  (f.detail.empty() ? "" : ": " + f.detail) + "\n";
        }
        value.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", failures}});
        text += "suite " + r.suite + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) +
                " failures\n";
        ok = ok && r.failures.empty();
      }
      return Outcome{value, ok, text};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error[Usage]: " << e.what() << "\n";
    return UsageError;
  }

  try {
    Outcome outcome = action();
    if (format == "text" && !outcome.text.empty()) {
      out << outcome.text;
    } else {
      out << outcome.value.dump(2) << "\n";
    }
    return outcome.ok ? Ok : CheckFailed;
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "error[InvalidValue]: " << e.what() << "\n";
    return UsageError;
  }
}

}  // namespace qs::cli
