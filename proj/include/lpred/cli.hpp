#pragma once

#include "lpred/minmax.hpp"
#include "lpred/model.hpp"
#include "lpred/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lpred::cli {

enum class Subcommand { Solve, Phase1, Reduce, Viz };
enum class ReduceStage { Phase1, Support };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnbounded = 2;
inline constexpr int kExitNoInterior = 3;
inline constexpr int kExitInputError = 4;

struct CliConfig {
  Subcommand subcommand = Subcommand::Solve;
  std::string input_path;
  std::optional<std::string> output_path;  ///< standard output when empty
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  Backend solver = Backend::Exact;
  std::optional<Vector> interior_point;
  ReduceStage stage = ReduceStage::Support;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;  ///< for standard error; empty on success
};

/// Executes one subcommand on the LP JSON text. Deterministic in (config, lp_text).
RunResult run(const CliConfig& config, std::string_view lp_text);

/// Parses "v1,v2,..." with the C locale. Throws InputError on malformed text.
Vector parse_vector(std::string_view text);

int exit_code_for(SolveStatus status);

/// Two-panel figure for d = 2: constraint lines with feasible-side ticks and the optimum in
/// the translated and rotated frame, next to the constraint dual points and the optimal
/// supporting line. Primal elements and their duals share a color.
std::string render_svg(const SolveTrace& trace);

}  // namespace lpred::cli
