#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace circlab {

// One resolved command-line invocation. `params` holds only flags the caller
// actually passed, as raw strings; each subcommand validates what it needs
// before any computation starts.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::string input_path;
  std::string output_path;
  int workers = 1;
  double time_budget_seconds = 0;  // 0 = unlimited; must be > 0 when set
  int cap = 0;                     // 0 = CIRCLAB_CAP env var, else default
};

// Executes one subcommand, writing the artifact to the output path or to
// `out`, diagnostics to `err`. Returns the process exit status: 0 pass,
// 2 violation found, 3 inconclusive or partial, 64 invalid parameters.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end: parses flags into a RunConfig and delegates to run().
int run_cli(int argc, const char* const* argv);

}  // namespace circlab
