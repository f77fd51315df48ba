#pragma once

#include <optional>
#include <string>

namespace chm::cli {

enum class Command {
  kCritical,
  kNullity,
  kIndex,
  kScan,
  kVerifyBounds,
  kVerifyPeriods,
  kVerifySystems,
};

enum class Output { kJson, kCsv };

struct RunConfig {
  Command command;
  int genus = 2;
  int genus_min = 2;
  int genus_max = 2;
  std::optional<double> t;  // numeric t, when given
  std::string t_symbol;     // "t1" | "t2" | "t3" | "costa" | ""
  Output output = Output::kJson;
  double tol = 1e-9;
  double grid_step = 1e-5;
};

// Deterministic report: identical config -> identical bytes.
// exit_code: 0 success, 1 when a verification/certificate fails.
struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const RunConfig& config);

const char* command_name(Command c);

}  // namespace chm::cli
