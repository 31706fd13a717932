#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace grouplie {

enum class Command { Analyze, Verify, Table, Bessel, CatalogList };

struct RunConfig {
  Command command = Command::Analyze;
  std::string group;   // analyze/table: required; verify: optional restriction
  std::string alpha;   // analyze default "trivial", verify default "all"
  std::string tau;     // analyze default "id", verify default "all"
  std::size_t max_order = 24;
  std::string format = "text";
  std::uint64_t seed = 1;
  int prime_index = 0;
  std::string out;     // empty: stdout
  bool timing = false;
  // bessel
  int n = 0;
  long omega_k = 0;
  long omega_den = 0;  // 0: N
  double z_re = 0.0;
  double z_im = 0.0;
  double tol = 1e-9;
  int truncation = 0;  // 0: default
  /// Set when --help was requested; holds the help text.
  std::optional<std::string> help;
};

/// args excludes the program name. GROUPLIE_SEED in the environment overrides --seed.
/// Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a config, writing the document to out (or config.out). Returns the exit code:
/// 0 pass, 1 usage/input error, 2 verification failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with error-to-exit-code mapping.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grouplie
