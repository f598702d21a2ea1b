#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plankcount/core.hpp"

// Command-line front end: parses weight inputs, dispatches to the engine,
// bounds, and search modules, and emits machine-readable JSON or CSV
// reports.  Reports are byte-stable for fixed inputs and seed, except for
// the measured timing_ms field.

namespace plankcount::cli {

enum class Subcommand { Count, Halfspace, Verify, Search, Sweep, Family };
enum class Mode { Float, Exact };
enum class Format { Json, Csv };

/// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HelpRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  Subcommand subcommand = Subcommand::Count;
  Mode mode = Mode::Float;
  std::vector<std::vector<double>> float_weights;
  std::vector<std::vector<std::int64_t>> int_weights;
  int n = 0;
  int k = 0;
  int k_lo = 0, k_hi = 0;  // --k-range lo:hi (inclusive)
  int n_lo = 0, n_hi = 0;  // --n-range lo:hi (inclusive, sweep)
  int count = 100;         // random vectors per dimension (sweep)
  unsigned workers = 1;
  int chunk_bits = 8;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int restarts = 50;
  int steps = 5000;
  double lambda = 0.5;
  bool checks = false;  // include structural checkers in sweep rows
  Format format = Format::Json;
  std::string out_path;  // empty: standard output
};

/// Parse argv-style arguments (without the program name) into a validated
/// RunSpec.  Throws UsageError on bad input and HelpRequest (carrying the
/// help text) when help is requested.
RunSpec parse_args(const std::vector<std::string>& args);

/// Execute a run and write the report to `out` (or spec.out_path if set).
/// Returns kExitOk, or kExitVerifyFailed when any emitted verdict is false.
/// Throws IoError on file failures.
int run(const RunSpec& spec, std::ostream& out);

/// Full pipeline: parse, run, map errors to exit codes.  Never throws.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plankcount::cli
