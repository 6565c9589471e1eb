#pragma once

// Command-line front end. Subcommands: power, eig, entry, verify, charpoly, bench.
// Exit codes: 0 success, 1 verification or rounding failure, 2 argument error.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace stripepow::cli {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ReportCase {
  std::size_t n = 0;
  std::int64_t m = 0;
  std::string method;
  std::string status;  // "ok", "mismatch", "rounding-failure"
  double max_abs_residual = 0.0;
  bool exact_match = false;
  double wall_time = 0.0;  // seconds
};

struct SkippedCase {
  std::size_t n = 0;
  std::int64_t m = 0;
  std::string method;
  std::string status;
};

struct RunReport {
  std::vector<ReportCase> cases;
  std::vector<SkippedCase> skipped;
  bool pass = false;
  std::string tool_version = kToolVersion;
  std::string isa;

  /// pass is true iff every case matched exactly.
  void finalize();
};

void write_report(std::ostream& out, const RunReport& report);

struct VerifyOptions {
  std::size_t n_max = 30;
  std::int64_t m_max = 16;
  double tolerance = 1e-6;
  /// Test hook: perturb entry (1,1) of the last closed-form result by +1.
  bool inject_fault = false;
  std::size_t threads = 1;
};

/// Closed form vs residue-blocked vs dense oracle over n = 3, 6, ..., n_max and
/// m = 0..m_max; one case per (n, m) in ascending order.
RunReport verify_sweep(const VerifyOptions& opts);

struct BenchOptions {
  std::vector<std::size_t> orders;
  std::int64_t m = 8;
  std::size_t repeat = 1;
  double tolerance = 1e-6;
};

/// Times the closed, blocked and dense paths; results are checked for exact
/// equality before timings are reported.
RunReport bench(const BenchOptions& opts);

/// Worker count from STRIPEPOW_THREADS; 1 when unset.
std::size_t threads_from_env();

/// Runs the CLI with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stripepow::cli
