#pragma once

#include <optional>
#include <string>

#include "heightrel/json_schema.hpp"

namespace heightrel {

struct RunConfig {
  std::string command;  // bound, shape, transform, height, gram, verify-adjoint,
                        // relations, demo
  std::string input_path;
  std::optional<std::string> output_path;

  // relations overrides
  std::optional<int> precision_digits;
  std::optional<long long> height_bound;

  // height engine overrides
  std::optional<double> tol;
  std::optional<int> cap;

  // demo parameters
  std::string demo_variant;  // rm-surface or cm-curve
  long demo_disc = 5;
  int demo_rank = 1;
  bool demo_corrupt = false;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 invalid input, 1 internal consistency failure
  Json report;
};

/// Executes one command and produces its JSON report. Never throws; failures
/// are encoded in the exit code and an "error" object in the report.
RunOutcome run(const RunConfig& config);

std::string artifact_version();

}  // namespace heightrel
