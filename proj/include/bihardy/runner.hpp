#ifndef BIHARDY_RUNNER_HPP
#define BIHARDY_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bihardy/beurling.hpp"

namespace bihardy {

// Process exit codes. Verdicts never affect the analyze/demo exit status.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;    // malformed generator file
inline constexpr int kExitEmptySpan = 3;   // all candidates below tolerance
inline constexpr int kExitBadConfig = 4;   // invalid flags / demo name / window
inline constexpr int kExitSweepFail = 5;   // a sweep residual exceeded its bound

struct RunConfig {
  enum class Command { Analyze, Demo, Sweep };

  Command command = Command::Analyze;
  std::optional<std::string> input_path;
  std::optional<std::string> demo_name;
  std::optional<int> d1;
  std::optional<int> d2;
  std::optional<int> margin;
  Tolerances tols;
  std::uint64_t seed = 42;
  int samples = 100;
  bool json_output = false;
  bool corrupt_shift = false;  // fault-injection hook for the sweep
};

/// Execute one command; reports go to `out`, diagnostics to `err`.
/// Returns the process exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bihardy

#endif  // BIHARDY_RUNNER_HPP
