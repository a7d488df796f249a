// Command-line front end: flag/config-file parsing and mode dispatch
// (single-sample estimation, one experiment cell, or a consistency sweep
// over sample sizes).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flrcov::cli {

struct RunConfig {
    std::string mode;  // "estimate" | "experiment" | "sweep"

    std::string dgp = "far1";
    std::string kernel = "bartlett";
    int setting = 4;
    int T = 500;
    int n = 100;
    int reps = 200;
    std::uint64_t seed = 42;
    int threads = 1;
    std::vector<int> Ts;  // sweep mode

    std::string in;         // estimate mode input sample CSV
    std::string out = ".";  // output directory

    std::optional<double> h;    // force the final bandwidth
    std::optional<double> h1;   // pilot bandwidth for settings 3-4
    std::optional<double> phi;  // DGP overrides
    std::optional<int> p;
    std::optional<int> burn_in;
    double k1 = 0.5;
    double k2 = 1.0;
    double h_min = 1.0;
    bool c0_derived = false;
    int ref_J = 2000;
    int ref_T_inner = 2000;
};

/// Thrown when parsing wants the process to exit: --help carries code 0
/// and the help text; usage errors carry a nonzero code and a diagnostic.
struct CliExit {
    int code;
    std::string message;
};

/// Parse argv-style arguments (program name excluded). Unknown flags and
/// unknown config-file keys are rejected; flags override config values.
RunConfig parse_config(const std::vector<std::string>& args);

/// Execute one run; writes output files under config.out. Returns 0 on
/// success, throws on failure.
int run(const RunConfig& config);

}  // namespace flrcov::cli
