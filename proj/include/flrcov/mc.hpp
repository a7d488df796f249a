// Monte Carlo harness: run (DGP x kernel x bandwidth-setting x T) cells,
// score each replication by the squared L2 distance between the estimate
// and the reference surface, and summarize with box-plot statistics.

#pragma once

#include "flrcov/bandwidth.hpp"
#include "flrcov/dgp.hpp"

#include <cstdint>
#include <vector>

namespace flrcov {

/// The five bandwidth-selection settings:
///   S1: h = T^{1/5}
///   S2: h = T^{1/4}
///   S3: plug-in, pilot kernel = final kernel, h1 = T^{1/5}
///   S4: plug-in, flat-top pilot, h1 = T^{1/5}
///   S5: plug-in, flat-top pilot, adaptive h1
enum class Setting { S1 = 1, S2 = 2, S3 = 3, S4 = 4, S5 = 5 };

Setting setting_from_int(int k);

struct ExperimentCell {
    DgpSpec dgp;
    KernelSpec kernel;  // final kernel
    Setting setting = Setting::S4;
    int T = 500;
    int n = 100;
    int reps = 200;
    std::uint64_t seed = 0;
};

/// Per-cell overrides threaded through from the CLI.
struct CellOptions {
    double h_min = 1.0;
    C0Rule c0_rule = C0Rule::Standard;
    double flat_top_k1 = 0.5;
    double flat_top_k2 = 1.0;
    std::optional<double> h_override;   // force this bandwidth in every rep
    std::optional<double> h1_override;  // pilot bandwidth for S3/S4
};

struct LossSummary {
    std::vector<double> losses;      // one per replication, in stream order
    std::vector<double> bandwidths;  // h used per replication
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
    double mean_bandwidth = 0.0;
};

/// Run every replication of a cell against a reference surface on the
/// cell's grid. Replication r draws from stream r of the cell seed; the
/// sample a replication sees does not depend on the setting. Deterministic
/// for any thread count.
LossSummary run_cell(const ExperimentCell& cell, const Surface& reference, int threads = 1,
                     const CellOptions& opts = {});

/// Box-plot statistics with linear-interpolation quartiles. Throws on
/// empty input.
LossSummary summarize(std::vector<double> losses);

struct SweepRow {
    int T;
    LossSummary summary;
};

/// run_cell across increasing sample sizes, shared reference.
std::vector<SweepRow> consistency_sweep(const DgpSpec& dgp, const KernelSpec& kernel,
                                        Setting setting, const std::vector<int>& Ts, int n,
                                        int reps, std::uint64_t seed, const Surface& reference,
                                        int threads = 1, const CellOptions& opts = {});

}  // namespace flrcov
