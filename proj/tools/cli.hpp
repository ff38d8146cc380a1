#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "amlink/fixtures.hpp"
#include "amlink/normalize.hpp"

namespace amlink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,  // bad flags, unreadable or malformed input
  kInternalError = 2,  // an invariant check failed
};

enum class OutputFormat { Trace, Dot, TreeText };

struct RunConfig {
  std::optional<std::string> input_path;
  std::optional<Site> fixture;
  std::string method = "adaptive";
  SdMode sd_mode = SdMode::Sample;
  bool normalize = true;
  OutputFormat format = OutputFormat::Trace;
  std::optional<std::string> output_path;
  std::optional<double> threshold;
};

/// Runs `cluster`: writes a trace, DOT graph or text tree for the chosen method.
int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs `compare`: adaptive levels against a stepwise method (default average).
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs `export`: the input table in canonical CSV form (z-scores if normalized).
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amlink::cli
