#pragma once

// Command-line front end. Subcommands:
//   solve      one (n, eta, method, k) instance
//   sweep      a grid of orness levels
//   kcurve     the objective across k-additive truncation levels
//   to-weights alpha coefficients -> OWA weights
//   to-alpha   OWA weights -> alpha coefficients
//   measures   orness and disparity of a weight vector
//
// stdout carries data, stderr carries diagnostics. Exit codes: 0 all
// requested solves optimal, 1 at least one infeasible (results are still
// emitted), 2 usage or validation errors.
//
// Transform inputs are parsed as exact decimals and, for n <= 64, converted
// through exact rational arithmetic, so table-style inputs produce exact
// coefficients.

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "owakit/decimal.hpp"
#include "owakit/decomposition.hpp"
#include "owakit/minimax.hpp"
#include "owakit/output.hpp"
#include "owakit/selfcheck.hpp"

namespace owakit {

struct RunConfig {
  enum class Command { solve, sweep, kcurve, to_weights, to_alpha, measures };
  Command command = Command::solve;
  int n = 0;
  std::vector<double> etas;            // converted once from the decimal grid
  Method method = Method::weight_space;
  std::optional<int> k;
  std::vector<int> k_values;           // kcurve levels
  std::vector<Rational> values_in;     // exact weights or alphas for transforms
  RenderOptions render;
};

namespace detail {

inline std::vector<double> rationals_to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = v[t].convert_to<double>();
  return out;
}

/// Exact transform when the dimension allows it, float otherwise.
inline TransformResult make_transform_result(int n, const std::vector<Rational>& exact_in, bool input_is_alpha) {
  TransformResult r;
  r.n = n;
  std::vector<Rational> w_exact, a_exact;
  if (n <= kExactWeightLimit) {
    if (input_is_alpha) {
      a_exact = exact_in;
      w_exact = alpha_to_weights_exact(a_exact);
    } else {
      w_exact = exact_in;
      a_exact = weights_to_alpha_exact(w_exact);
    }
    r.weights = rationals_to_doubles(w_exact);
    r.alpha = rationals_to_doubles(a_exact);
  } else {
    const auto in = rationals_to_doubles(exact_in);
    if (input_is_alpha) {
      r.alpha = in;
      r.weights = alpha_to_weights_raw(in);
    } else {
      r.weights = in;
      r.alpha = weights_to_alpha_raw(in);
    }
  }
  // the weight vector must be an OWA; this also rejects infeasible alphas
  const WeightVector wv(r.weights, input_is_alpha ? kFeasTol : kParseTol);
  if (input_is_alpha) {
    const auto rep = check_alpha_feasibility(AlphaVector(r.alpha), kFeasTol);
    if (!rep.feasible())
      throw std::invalid_argument(
          "alpha does not encode an OWA: condition " + std::to_string(rep.first_violated) + " violated");
  }
  r.orness_value = orness(wv).value();
  r.disparity_value = disparity(wv);
  return r;
}

inline int emit_solutions(std::ostream& out, const RunConfig& cfg, const std::vector<DisparitySolution>& sols) {
  write_solutions(out, cfg.n, cfg.method, cfg.k ? cfg.k : std::optional<int>(cfg.n), sols, cfg.render);
  for (const auto& s : sols)
    if (s.status != LpStatus::optimal) return 1;
  return 0;
}

}  // namespace detail

/// Executes a validated configuration, writing data to `out`.
inline int run(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case RunConfig::Command::solve:
    case RunConfig::Command::sweep: {
      const auto sols = sweep(cfg.n, cfg.etas, cfg.method, cfg.k);
      return detail::emit_solutions(out, cfg, sols);
    }
    case RunConfig::Command::kcurve: {
      const auto points = kcurve(cfg.n, OrnessLevel(cfg.etas.at(0)), cfg.k_values);
      write_kcurve(out, cfg.n, cfg.etas.at(0), points, cfg.render);
      for (const auto& p : points)
        if (p.status != LpStatus::optimal) return 1;
      return 0;
    }
    case RunConfig::Command::to_weights:
    case RunConfig::Command::to_alpha:
    case RunConfig::Command::measures: {
      const bool input_is_alpha = cfg.command == RunConfig::Command::to_weights;
      write_transform(out, detail::make_transform_result(cfg.n, cfg.values_in, input_is_alpha), cfg.render);
      return 0;
    }
  }
  return 2;
}

namespace detail {

struct CommonArgs {
  int n = 0;
  std::string eta;
  std::string method = "weights";
  std::optional<int> k;
  std::string kspec;
  std::string weights;
  std::string alpha;
  std::string output = "table";
  int precision = 4;
};

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + s + "' (expected json, csv, or table)");
}

inline Method parse_method(const std::string& s) {
  if (s == "weights") return Method::weight_space;
  if (s == "alpha") return Method::alpha_space;
  throw std::invalid_argument("unknown method '" + s + "' (expected weights or alpha)");
}

inline void check_dimension(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
}

inline std::vector<double> parse_eta_arg(const std::string& text) {
  const auto grid = parse_grid(text, Rational(0), Rational(1));
  std::vector<double> etas(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) etas[t] = grid[t].convert_to<double>();
  return etas;
}

inline std::vector<int> parse_k_grid(const std::string& text, int n) {
  const auto grid = parse_grid(text, Rational(1), Rational(n));
  std::vector<int> ks;
  ks.reserve(grid.size());
  for (const auto& v : grid) {
    if (denominator(v) != 1)
      throw std::invalid_argument("k must be an integer, got " + v.convert_to<std::string>());
    ks.push_back(v.convert_to<int>());
  }
  return ks;
}

}  // namespace detail

/// Parses argv, runs the request, returns the process exit code.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"OWA weight determination under the minimax disparity criterion"};
  app.require_subcommand(0, 1);

  bool seed_check = false;
  app.add_flag("--seed-check", seed_check)->group("");  // hidden: CI self-verification

  detail::CommonArgs args;
  auto add_common = [&](CLI::App* cmd, bool needs_eta) {
    cmd->add_option("--n", args.n, "dimension (>= 2)")->required();
    if (needs_eta) cmd->add_option("--eta", args.eta, "orness level or start:stop:step grid")->required();
    cmd->add_option("--output", args.output, "json | csv | table (default table)");
    cmd->add_option("--precision", args.precision, "decimal places for table output (default 4)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve one minimax disparity instance");
  add_common(solve_cmd, true);
  solve_cmd->add_option("--method", args.method, "weights | alpha");
  solve_cmd->add_option("--k", args.k, "k-additive truncation level (alpha method)");

  auto* sweep_cmd = app.add_subcommand("sweep", "solve across a grid of orness levels");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--method", args.method, "weights | alpha");
  sweep_cmd->add_option("--k", args.k, "k-additive truncation level (alpha method)");

  auto* kcurve_cmd = app.add_subcommand("kcurve", "objective across k-additive levels");
  add_common(kcurve_cmd, true);
  kcurve_cmd->add_option("--k", args.kspec, "level or start:stop[:step] range")->required();

  auto* tow_cmd = app.add_subcommand("to-weights", "alpha coefficients to OWA weights");
  add_common(tow_cmd, false);
  tow_cmd->add_option("--alpha", args.alpha, "comma-separated alpha coefficients")->required();

  auto* toa_cmd = app.add_subcommand("to-alpha", "OWA weights to alpha coefficients");
  add_common(toa_cmd, false);
  toa_cmd->add_option("--weights", args.weights, "comma-separated weights")->required();

  auto* meas_cmd = app.add_subcommand("measures", "orness and disparity of a weight vector");
  add_common(meas_cmd, false);
  meas_cmd->add_option("--weights", args.weights, "comma-separated weights")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (seed_check) {
      const auto failures = self_check();
      for (const auto& f : failures) err << "self-check failure: " << f << '\n';
      if (failures.empty()) out << "self-check: ok\n";
      return failures.empty() ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      err << "error: a subcommand is required (see --help)\n";
      return 2;
    }

    RunConfig cfg;
    cfg.n = args.n;
    detail::check_dimension(cfg.n);
    cfg.render.format = detail::parse_format(args.output);
    cfg.render.precision = args.precision;
    if (cfg.render.precision < 0 || cfg.render.precision > 17)
      throw std::invalid_argument("precision must lie in 0..17");
    cfg.method = detail::parse_method(args.method);
    cfg.k = args.k;
    if (cfg.k && (*cfg.k < 1 || *cfg.k > cfg.n))
      throw std::invalid_argument("k must lie in 1.." + std::to_string(cfg.n) + ", got " + std::to_string(*cfg.k));
    if (cfg.k && cfg.method == Method::weight_space)
      throw std::invalid_argument("--k applies to the alpha method only");

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "solve" || name == "sweep") {
      cfg.command = name == "solve" ? RunConfig::Command::solve : RunConfig::Command::sweep;
      cfg.etas = detail::parse_eta_arg(args.eta);
      if (cfg.command == RunConfig::Command::solve && cfg.etas.size() != 1)
        throw std::invalid_argument("solve expects a single eta; use sweep for grids");
    } else if (name == "kcurve") {
      cfg.command = RunConfig::Command::kcurve;
      cfg.etas = detail::parse_eta_arg(args.eta);
      if (cfg.etas.size() != 1) throw std::invalid_argument("kcurve expects a single eta");
      cfg.k_values = detail::parse_k_grid(args.kspec, cfg.n);
    } else {
      cfg.command = name == "to-weights" ? RunConfig::Command::to_weights
                    : name == "to-alpha" ? RunConfig::Command::to_alpha
                                         : RunConfig::Command::measures;
      const std::string& list = name == "to-weights" ? args.alpha : args.weights;
      cfg.values_in = parse_decimal_list(list);
      if (static_cast<int>(cfg.values_in.size()) != cfg.n)
        throw std::invalid_argument("expected " + std::to_string(cfg.n) + " values, got " +
                                    std::to_string(cfg.values_in.size()));
    }
    return run(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace owakit
