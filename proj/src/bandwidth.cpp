#include "flrcov/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flrcov {

double c0_from_surfaces(const Surface& cq, const Surface& c0s, const KernelSpec& final_kernel,
                        C0Rule rule) {
    if (!final_kernel.finite_order())
        throw std::invalid_argument("c0_from_surfaces: final kernel must have finite order");
    const int q = final_kernel.order();
    const double nq = surface_norm(cq);
    const double n0 = surface_norm(c0s);
    const double tr = surface_trace(c0s);
    const double den_base = (n0 * n0 + tr * tr) * final_kernel.l2_integral();
    if (!(den_base > 0.0))
        throw std::invalid_argument("c0_from_surfaces: degenerate input (zero C surface)");
    double num = q * nq * nq;
    if (rule == C0Rule::Minimizer) {
        const double w = *final_kernel.char_constant();
        num *= 2.0 * w * w;
    }
    const double inv = 1.0 / (1.0 + 2.0 * q);
    return std::pow(num, inv) * std::pow(den_base, -inv);
}

BandwidthReport plugin_bandwidth(const CurveSample& sample, const KernelSpec& pilot_kernel,
                                 double h1, const KernelSpec& final_kernel,
                                 const PluginOptions& opts) {
    if (!(h1 > 0.0)) throw std::invalid_argument("plugin_bandwidth: h1 must be positive");
    if (!final_kernel.finite_order())
        throw std::invalid_argument("plugin_bandwidth: final kernel must have finite order");
    const int q = final_kernel.order();
    const CenteredSample c = center(sample);
    const Surface pilot0 = weighted_pilot(c, pilot_kernel, h1, 0);
    const Surface pilotq = weighted_pilot(c, pilot_kernel, h1, q);

    BandwidthReport r;
    r.pilot_norm_q = surface_norm(pilotq);
    r.pilot_norm_0 = surface_norm(pilot0);
    r.pilot_trace = surface_trace(pilot0);
    r.h1 = h1;
    r.pilot_kernel = pilot_kernel;
    r.final_kernel = final_kernel;

    // A sample that centers to zero has no covariance structure at all;
    // take c0 = 0 rather than evaluating the 0/0 formula.
    const bool degenerate = r.pilot_norm_0 == 0.0 && r.pilot_trace == 0.0;
    r.c0_hat = degenerate ? 0.0 : c0_from_surfaces(pilotq, pilot0, final_kernel, opts.rule);
    const double raw = r.c0_hat * std::pow(static_cast<double>(sample.length()),
                                           1.0 / (1.0 + 2.0 * q));
    r.floored = raw < opts.h_min;
    r.h_opt_hat = std::max(opts.h_min, raw);
    return r;
}

double fixed_bandwidth(int T, double exponent) {
    if (T < 2) throw std::invalid_argument("fixed_bandwidth: T must be at least 2");
    if (!(exponent > 0.0) || !(exponent < 1.0))
        throw std::invalid_argument("fixed_bandwidth: exponent must lie in (0,1)");
    return std::pow(static_cast<double>(T), exponent);
}

double adaptive_initial_bandwidth(const CurveSample& sample) {
    const int T = sample.length();
    if (T < 20) throw std::invalid_argument("adaptive_initial_bandwidth: need T >= 20");
    const CenteredSample c = center(sample);
    const double g0 = surface_norm(autocov_surface(c, 0));
    const double log10T = std::log10(static_cast<double>(T));
    const double threshold = 1.4 * std::sqrt(log10T / T);
    const int run_len = std::max(5, static_cast<int>(std::ceil(std::sqrt(log10T))));
    const double cap = std::sqrt(static_cast<double>(T));

    // Only runs starting at m <= cap/2 can beat the cap; scan that far.
    const int max_lag = std::min(T - 1, static_cast<int>(std::ceil(cap / 2.0)) + run_len);
    std::vector<double> rho(static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (int l = 1; l <= max_lag; ++l)
        rho[l] = g0 > 0.0 ? surface_norm(autocov_surface(c, l)) / g0 : 0.0;

    for (int m = 0; m + run_len <= max_lag; ++m) {
        bool all_small = true;
        for (int k = 1; k <= run_len; ++k)
            if (rho[m + k] >= threshold) {
                all_small = false;
                break;
            }
        if (all_small) return m == 0 ? 1.0 : std::min(2.0 * m, cap);
    }
    return cap;
}

}  // namespace flrcov
