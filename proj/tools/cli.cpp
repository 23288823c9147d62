#include "lpred/cli.hpp"

#include "lpred/errors.hpp"

#include <json.hpp>

#include <charconv>

namespace lpred::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

ordered_json to_json(const PiecewiseMaxProblem& prob) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < prob.G.rows(); ++i) rows.push_back(to_json(prob.G.row(i).transpose()));
  ordered_json out;
  out["G"] = std::move(rows);
  out["h"] = to_json(prob.h);
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

RunResult failure(int code, std::string message) { return {code, {}, std::move(message) + "\n"}; }

SolveOptions solve_options(const CliConfig& config) {
  SolveOptions opts;
  opts.minmax.backend = config.solver;
  opts.minmax.seed = config.seed;
  opts.eps_strict = config.tolerance;
  opts.eps_unbounded = config.tolerance;
  return opts;
}

RunResult run_solve(const CliConfig& config, const LinearProgram& lp) {
  const Solution sol = solve(lp, config.interior_point, solve_options(config));
  RunResult res{exit_code_for(sol.status), save_solution(sol), {}};
  if (!sol.message.empty()) res.error = sol.message + "\n";
  return res;
}

RunResult run_phase1(const CliConfig& config, const LinearProgram& lp) {
  const SolveOptions opts = solve_options(config);
  const PhaseOneResult p1 = phase1(lp, opts.minmax, opts.eps_strict);
  ordered_json doc;
  const bool strict = p1.status == PhaseOneStatus::StrictInterior;
  doc["status"] = strict ? "strict_interior" : "no_strict_interior";
  if (p1.p0) doc["p0"] = to_json(*p1.p0);
  if (p1.margin) doc["margin"] = *p1.margin;
  return {strict ? kExitOk : kExitNoInterior, dump(doc), {}};
}

RunResult run_reduce(const CliConfig& config, const LinearProgram& lp) {
  ordered_json doc;
  if (config.stage == ReduceStage::Phase1) {
    doc["stage"] = "phase1";
    doc.update(to_json(phase1_problem(lp)));
    return {kExitOk, dump(doc), {}};
  }
  SolveOptions opts = solve_options(config);
  opts.build_only = true;
  const SolveTrace trace = solve_traced(lp, config.interior_point, opts);
  if (!trace.support) {
    const int code = exit_code_for(trace.solution.status);
    return failure(code == kExitOk ? kExitInputError : code,
                   "support problem undefined: " + trace.solution.message);
  }
  doc["stage"] = "support";
  doc.update(to_json(trace.support->minmax));
  return {kExitOk, dump(doc), {}};
}

RunResult run_viz(const CliConfig& config, const LinearProgram& lp) {
  if (lp.dimension != 2)
    return failure(kExitInputError,
                   "viz requires a 2-dimensional LP (got dimension " + std::to_string(lp.dimension) + ")");
  const SolveTrace trace = solve_traced(lp, config.interior_point, solve_options(config));
  if (!trace.transformed) {
    const int code = exit_code_for(trace.solution.status);
    return failure(code == kExitOk ? kExitInputError : code, "nothing to draw: " + trace.solution.message);
  }
  return {kExitOk, render_svg(trace), {}};
}

}  // namespace

int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Unbounded: return kExitUnbounded;
    case SolveStatus::Infeasible:
    case SolveStatus::OriginNotInterior: return kExitNoInterior;
    case SolveStatus::InputError: return kExitInputError;
  }
  return kExitInputError;
}

Vector parse_vector(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw InputError("cannot parse \"" + std::string(item) + "\" as a number in \"" +
                       std::string(text) + "\"");
    values.push_back(v);
    pos = comma + 1;
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

RunResult run(const CliConfig& config, std::string_view lp_text) {
  if (!(config.tolerance > 0.0)) return failure(kExitInputError, "tolerance must be positive");
  LinearProgram lp;
  try {
    lp = load_lp(lp_text);
  } catch (const Error& e) {
    return failure(kExitInputError, e.what());
  }
  try {
    switch (config.subcommand) {
      case Subcommand::Solve: return run_solve(config, lp);
      case Subcommand::Phase1: return run_phase1(config, lp);
      case Subcommand::Reduce: return run_reduce(config, lp);
      case Subcommand::Viz: return run_viz(config, lp);
    }
  } catch (const Error& e) {
    return failure(kExitInputError, e.what());
  }
  return failure(kExitInputError, "unknown subcommand");
}

}  // namespace lpred::cli
