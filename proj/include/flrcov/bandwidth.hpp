// Bandwidth selection for the lag-window estimator: the plug-in rule that
// minimizes the estimated asymptotic mean squared normed error, plus fixed
// power-of-T rules and a data-driven initial (pilot) bandwidth.

#pragma once

#include "flrcov/kernels.hpp"
#include "flrcov/lrcov.hpp"

namespace flrcov {

/// Constant in front of T^{1/(1+2q)}.
/// Standard: (q ||Cq||^2)^{1/(1+2q)} * ((||C||^2 + trace^2) Iw2)^{-1/(1+2q)}.
/// Minimizer: replaces q||Cq||^2 by 2 q w^2 ||Cq||^2, the constant obtained
/// by minimizing a*h/T + w^2 ||Cq||^2 h^{-2q} directly.
enum class C0Rule { Standard, Minimizer };

struct PluginOptions {
    double h_min = 1.0;
    C0Rule rule = C0Rule::Standard;
};

struct BandwidthReport {
    double h_opt_hat = 0.0;   // selected bandwidth, >= h_min
    double c0_hat = 0.0;
    double pilot_norm_q = 0.0;  // ||C_hat^(q)||
    double pilot_norm_0 = 0.0;  // ||C_hat^(0)||
    double pilot_trace = 0.0;   // integral of C_hat^(0)(u,u)
    double h1 = 0.0;            // pilot bandwidth used
    KernelSpec pilot_kernel = KernelSpec::flat_top();
    KernelSpec final_kernel = KernelSpec::bartlett();
    bool floored = false;       // h_min floor engaged
};

/// The plug-in constant from pilot (or population) surfaces cq = C^(q) and
/// c0s = C. Throws for an infinite-order final kernel and for degenerate
/// input (||c0s|| and trace both zero).
double c0_from_surfaces(const Surface& cq, const Surface& c0s, const KernelSpec& final_kernel,
                        C0Rule rule = C0Rule::Standard);

/// Full plug-in procedure: center, estimate pilots C_hat^(0) and C_hat^(q)
/// with (pilot_kernel, h1), form c0_hat, return max(h_min, c0_hat *
/// T^{1/(1+2q)}). A sample that centers to zero yields c0_hat = 0 and the
/// floor. Throws if h1 <= 0 or the final kernel has no finite order.
BandwidthReport plugin_bandwidth(const CurveSample& sample, const KernelSpec& pilot_kernel,
                                 double h1, const KernelSpec& final_kernel,
                                 const PluginOptions& opts = {});

/// T^exponent. Requires T >= 2 and exponent in (0,1).
double fixed_bandwidth(int T, double exponent);

/// Data-driven initial bandwidth: scan the normed autocorrelation ratios
/// rho_l = ||gamma_hat_l|| / ||gamma_hat_0|| for the first run of
/// max(5, ceil(sqrt(log10 T))) consecutive lags below 1.4*sqrt(log10(T)/T);
/// h1 = 2 * (run start - 1), floored at 1, capped at sqrt(T). Requires
/// T >= 20.
double adaptive_initial_bandwidth(const CurveSample& sample);

}  // namespace flrcov
