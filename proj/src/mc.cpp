#include "flrcov/mc.hpp"

#include "flrcov/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace flrcov {

namespace {

// Type-7 quantile (linear interpolation) on a sorted vector.
double quantile_sorted(const std::vector<double>& v, double p) {
    const double idx = p * (static_cast<double>(v.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(idx);
    if (lo + 1 >= v.size()) return v.back();
    const double frac = idx - static_cast<double>(lo);
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

double select_bandwidth(const CurveSample& sample, const ExperimentCell& cell,
                        const CellOptions& opts) {
    if (opts.h_override) return *opts.h_override;
    const int T = sample.length();
    switch (cell.setting) {
        case Setting::S1:
            return fixed_bandwidth(T, 1.0 / 5.0);
        case Setting::S2:
            return fixed_bandwidth(T, 1.0 / 4.0);
        case Setting::S3: {
            const double h1 = opts.h1_override.value_or(fixed_bandwidth(T, 1.0 / 5.0));
            return plugin_bandwidth(sample, cell.kernel, h1, cell.kernel,
                                    {opts.h_min, opts.c0_rule})
                .h_opt_hat;
        }
        case Setting::S4: {
            const double h1 = opts.h1_override.value_or(fixed_bandwidth(T, 1.0 / 5.0));
            return plugin_bandwidth(sample,
                                    KernelSpec::flat_top(opts.flat_top_k1, opts.flat_top_k2),
                                    h1, cell.kernel, {opts.h_min, opts.c0_rule})
                .h_opt_hat;
        }
        case Setting::S5: {
            const double h1 = adaptive_initial_bandwidth(sample);
            return plugin_bandwidth(sample,
                                    KernelSpec::flat_top(opts.flat_top_k1, opts.flat_top_k2),
                                    h1, cell.kernel, {opts.h_min, opts.c0_rule})
                .h_opt_hat;
        }
    }
    throw std::logic_error("select_bandwidth: unreachable");
}

}  // namespace

Setting setting_from_int(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("setting must be 1..5");
    return static_cast<Setting>(k);
}

LossSummary run_cell(const ExperimentCell& cell, const Surface& reference, int threads,
                     const CellOptions& opts) {
    if (cell.reps < 1) throw std::invalid_argument("run_cell: reps must be at least 1");
    if (cell.n != reference.grid.size())
        throw std::invalid_argument("run_cell: reference grid does not match cell");
    if (cell.setting == Setting::S5 && cell.T < 20)
        throw std::invalid_argument("run_cell: setting 5 requires T >= 20");
    const Grid grid(cell.n);
    std::vector<double> losses(cell.reps), bandwidths(cell.reps);
    parallel_for(cell.reps, threads, [&](int r) {
        RngStream rng(cell.seed, static_cast<std::uint64_t>(r));
        const CurveSample sample = simulate(cell.dgp, cell.T, grid, rng);
        const double h = select_bandwidth(sample, cell, opts);
        const LrcovEstimate est = lrcov_estimate(center(sample), cell.kernel, h);
        losses[r] = surface_distance_sq(est.surface, reference);
        bandwidths[r] = h;
    });
    LossSummary s = summarize(std::move(losses));
    s.mean_bandwidth =
        std::accumulate(bandwidths.begin(), bandwidths.end(), 0.0) / cell.reps;
    s.bandwidths = std::move(bandwidths);
    return s;
}

LossSummary summarize(std::vector<double> losses) {
    if (losses.empty()) throw std::invalid_argument("summarize: empty loss vector");
    LossSummary s;
    std::vector<double> sorted = losses;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.max = sorted.back();
    s.losses = std::move(losses);
    return s;
}

std::vector<SweepRow> consistency_sweep(const DgpSpec& dgp, const KernelSpec& kernel,
                                        Setting setting, const std::vector<int>& Ts, int n,
                                        int reps, std::uint64_t seed, const Surface& reference,
                                        int threads, const CellOptions& opts) {
    if (!std::is_sorted(Ts.begin(), Ts.end()) ||
        std::adjacent_find(Ts.begin(), Ts.end()) != Ts.end())
        throw std::invalid_argument("consistency_sweep: Ts must be strictly increasing");
    std::vector<SweepRow> rows;
    rows.reserve(Ts.size());
    for (int T : Ts) {
        ExperimentCell cell{dgp, kernel, setting, T, n, reps, seed};
        rows.push_back({T, run_cell(cell, reference, threads, opts)});
    }
    return rows;
}

}  // namespace flrcov
