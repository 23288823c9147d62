#include "lpred/cli.hpp"
#include "lpred/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

int main(int argc, char** argv) {
  using namespace lpred::cli;

  CLI::App app{"Solve strictly feasible linear programs through a min-max reduction"};
  app.require_subcommand(1);

  CliConfig config;
  std::string interior;
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "LP JSON file")->required();
    sub->add_option("--output", output, "Output file (default: standard output)");
    sub->add_option("--seed", config.seed, "Seed for the randomized solver")->capture_default_str();
    sub->add_option("--tolerance", config.tolerance, "Strictness / unboundedness threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--solver", config.solver, "Min-max backend")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, lpred::Backend>{{"exact", lpred::Backend::Exact},
                                                  {"subgradient", lpred::Backend::Subgradient}},
            CLI::ignore_case));
    sub->add_option("--interior-point", interior, "Known strictly interior point \"v1,v2,...\"");
  };

  auto* solve = app.add_subcommand("solve", "Solve the LP; prints a solution JSON");
  auto* phase1 = app.add_subcommand("phase1", "Find a strictly interior point");
  auto* reduce = app.add_subcommand("reduce", "Print a min-max instance of the reduction");
  auto* viz = app.add_subcommand("viz", "Render a 2-D LP and its duals as SVG");
  for (auto* sub : {solve, phase1, reduce, viz}) add_common(sub);
  reduce->add_option("--stage", config.stage, "Which instance to print")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ReduceStage>{{"phase1", ReduceStage::Phase1},
                                             {"support", ReduceStage::Support}},
          CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*solve) config.subcommand = Subcommand::Solve;
  else if (*phase1) config.subcommand = Subcommand::Phase1;
  else if (*reduce) config.subcommand = Subcommand::Reduce;
  else config.subcommand = Subcommand::Viz;

  if (!interior.empty()) {
    try {
      config.interior_point = parse_vector(interior);
    } catch (const lpred::Error& e) {
      std::cerr << "--interior-point: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  if (!output.empty()) config.output_path = output;

  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << config.input_path << "\n";
    return kExitInputError;
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  const RunResult result = run(config, text);
  if (!result.error.empty()) std::cerr << result.error;
  if (config.output_path) {
    std::ofstream out(*config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *config.output_path << "\n";
      return kExitInputError;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
