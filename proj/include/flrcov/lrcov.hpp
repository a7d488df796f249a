// Kernel lag-window estimator of the long-run covariance surface,
//   C_hat(u,s) = sum_l W(l/h) gamma_hat_l(u,s),
// and the |l|^p-weighted variants used as plug-in pilots. Negative lags
// fold in through the transpose identity gamma_{-l} = gamma_l'.

#pragma once

#include "flrcov/acov.hpp"
#include "flrcov/kernels.hpp"

namespace flrcov {

struct LrcovEstimate {
    Surface surface;
    KernelSpec kernel;
    double bandwidth;
    int lag_cap;  // largest |l| with nonzero weight actually summed
};

/// gamma_0 + sum_{l>=1} W(l/h) (gamma_l + gamma_l'), lags truncated at
/// min(T-1, ceil(support*h)) for compact kernels and at T-1 for the
/// quadratic spectral. h may be any positive real. Throws if h <= 0.
LrcovEstimate lrcov_estimate(const CenteredSample& c, const KernelSpec& k, double h);

/// Same lag fold with each lag-l term scaled by |l|^p; p = 0 reproduces
/// lrcov_estimate's surface (the l = 0 term drops for p >= 1).
Surface weighted_pilot(const CenteredSample& c, const KernelSpec& k, double h, int p);

/// Smallest eigenvalue of the quadrature-weighted operator (1/n) * S,
/// symmetrized; a positivity diagnostic (the estimate is never clipped).
double min_eigenvalue(const Surface& s);

}  // namespace flrcov
