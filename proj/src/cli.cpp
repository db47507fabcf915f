#include "maxent/cli.hpp"

#include <fstream>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxent/domain_file.hpp"
#include "maxent/ensemble.hpp"
#include "maxent/format.hpp"
#include "maxent/maxent_solver.hpp"
#include "maxent/network.hpp"
#include "maxent/sweep.hpp"

namespace maxent::cli {

namespace {

using io::format_number;

struct SweepArgs {
  int q = 1;
  double gamma_min = -5.0;
  double gamma_max = 5.0;
  int steps = 201;
  std::string out_csv;
  std::string out_svg;
};

struct EvalArgs {
  int q = 1;
  double gamma = 0.0;
  std::optional<int> N;
};

struct InvertArgs {
  int q = 1;
  double nu = 0.0;
};

struct SolveArgs {
  std::string states;
  double target = 0.0;
};

struct NetworkArgs {
  std::string domains_path;
  double total = 0.0;
};

void field(std::ostream &out, const std::string &name, double value) {
  out << std::left << std::setw(12) << name << "= " << format_number(value) << '\n';
}

std::ofstream open_output(const std::string &path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void finish_output(std::ofstream &file, const std::string &path) {
  file.flush();
  if (!file)
    throw IoError("failed writing '" + path + "'");
}

int cmd_sweep(const SweepArgs &a, std::ostream &out) {
  const auto rows = io::compute_sweep(a.q, a.gamma_min, a.gamma_max, a.steps);
  {
    auto file = open_output(a.out_csv);
    io::write_csv(file, rows);
    finish_output(file, a.out_csv);
  }
  out << "wrote " << rows.size() << " rows to " << a.out_csv << '\n';
  if (!a.out_svg.empty()) {
    auto file = open_output(a.out_svg);
    io::write_svg(file, rows, a.q);
    finish_output(file, a.out_svg);
    out << "wrote plot to " << a.out_svg << '\n';
  }
  return kOk;
}

int cmd_eval(const EvalArgs &a, std::ostream &out) {
  const auto domain = DomainSpec::make("domain", a.N.value_or(a.q), a.q);
  const auto r = report(domain, a.gamma);
  field(out, "q", a.q);
  field(out, "gamma", r.gamma);
  field(out, "w_minus", r.weights.minus);
  field(out, "w_center", r.weights.center);
  field(out, "w_plus", r.weights.plus);
  field(out, "nu", r.nu);
  field(out, "nu_over_q", r.nu / a.q);
  if (a.N)
    field(out, "population", r.population);
  field(out, "entropy", r.entropy);
  field(out, "chi", r.chi);
  return kOk;
}

int cmd_invert(const InvertArgs &a, std::ostream &out) {
  if (a.q < 1)
    throw InvalidInput("q must be a positive integer");
  double gamma = 0;
  try {
    gamma = gamma_from_nu(a.q, a.nu);
  } catch (const OutOfRange &) {
    throw OutOfRange("nu must lie strictly inside (-q, q) = (" + format_number(-a.q) + ", " +
                     format_number(a.q) + ")");
  }
  field(out, "gamma", gamma);
  field(out, "chi", -gamma);
  return kOk;
}

std::vector<int> parse_states(const std::string &text) {
  std::vector<int> states;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const double v = io::parse_number(cell);
    if (v != std::floor(v) || v < 0 || v > 1e9)
      throw InvalidInput("states: '" + cell + "' is not a non-negative integer");
    states.push_back(static_cast<int>(v));
  }
  return states;
}

int cmd_solve(const SolveArgs &a, std::ostream &out) {
  const auto states = parse_states(a.states);
  const auto sol = solve_maxent(states, a.target);
  field(out, "gamma", sol.gamma);
  field(out, "mean", sol.ensemble.mean());
  field(out, "entropy", sol.ensemble.entropy());
  field(out, "iterations", sol.iterations);
  out << "state,weight\n";
  for (std::size_t i = 0; i < states.size(); ++i)
    out << states[i] << ',' << format_number(sol.ensemble.weights(Eigen::Index(i))) << '\n';
  return kOk;
}

int cmd_network(const NetworkArgs &a, std::ostream &out) {
  const auto domains = io::load_domains(a.domains_path);
  const auto sol = equilibrate(domains, a.total);
  field(out, "gamma_star", sol.gamma_star);
  field(out, "chi", -sol.gamma_star);
  field(out, "total", sol.total_charge);
  field(out, "residual", sol.residual);
  out << "label,nu,population\n";
  for (const auto &d : sol.per_domain)
    out << d.label << ',' << format_number(d.nu) << ',' << format_number(d.population) << '\n';
  return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Three-state maximum-entropy ensembles of molecular domains.\n"
               "Weights w_center = 1/(1+2cosh(q*gamma)), w_(N-/+q) = exp(+/-q*gamma) w_center;\n"
               "net charge nu = -2q sinh(q*gamma)/(1+2cosh(q*gamma)); chi = -gamma.",
               "maxent"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto *sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate weights, nu/q and entropy S = -sum w ln w over a uniform gamma grid.\n"
               "Default range [-5, 5] with 201 points is a presentation choice that saturates\n"
               "both tails for q = 1.");
  sweep_cmd->add_option("--q", sweep.q, "charge capacity q (positive integer)")->capture_default_str();
  sweep_cmd->add_option("--gamma-min", sweep.gamma_min, "first gamma")->capture_default_str();
  sweep_cmd->add_option("--gamma-max", sweep.gamma_max, "last gamma")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "number of rows, endpoints included")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_csv,
                        "CSV path; columns gamma,w_minus,w_center,w_plus,nu_over_q,entropy")
      ->required();
  sweep_cmd->add_option("--svg", sweep.out_svg, "optional SVG plot (weights; nu/q)");

  EvalArgs eval;
  auto *eval_cmd = app.add_subcommand(
      "eval", "Evaluate the ensemble at one gamma: weights w_center = 1/(1+2cosh(q*gamma)),\n"
              "w_(N-/+q) = exp(+/-q*gamma) w_center, nu = q(w_plus - w_minus), S, chi = -gamma.");
  eval_cmd->add_option("--q", eval.q, "charge capacity q")->required();
  eval_cmd->add_option("--gamma", eval.gamma, "multiplier gamma")->required();
  eval_cmd->add_option("--N", eval.N, "baseline electron count; adds population N + nu");

  InvertArgs invert;
  auto *invert_cmd = app.add_subcommand(
      "invert", "Solve nu = -2q sinh(q*gamma)/(1+2cosh(q*gamma)) for gamma; |nu| < q.");
  invert_cmd->add_option("--q", invert.q, "charge capacity q")->required();
  invert_cmd->add_option("--nu", invert.nu, "net transferred charge")->required();

  SolveArgs solve;
  auto *solve_cmd = app.add_subcommand(
      "solve", "Maximize -sum w ln w over the given states subject to sum w = 1 and\n"
               "sum w M = target; solution w_M proportional to exp(-gamma M).");
  solve_cmd->add_option("--states", solve.states, "comma-separated increasing integers, e.g. 0,1,2")
      ->required();
  solve_cmd->add_option("--target", solve.target, "mean particle number")->required();

  NetworkArgs network;
  auto *network_cmd = app.add_subcommand(
      "network", "Find the shared gamma* with sum_k nu(q_k, gamma*) = total.\n"
                 "Domain file: {\"domains\":[{\"label\":str,\"N\":int,\"q\":int}, ...]}");
  network_cmd->add_option("--domains", network.domains_path, "JSON domain file")->required();
  network_cmd->add_option("--total", network.total, "total transferred charge")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    if (*sweep_cmd)
      return cmd_sweep(sweep, out);
    if (*eval_cmd)
      return cmd_eval(eval, out);
    if (*invert_cmd)
      return cmd_invert(invert, out);
    if (*solve_cmd)
      return cmd_solve(solve, out);
    if (*network_cmd)
      return cmd_network(network, out);
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ConvergenceFailure &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

} // namespace maxent::cli
