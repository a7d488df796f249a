// Simulation of functional MA and AR processes driven by iid standard
// Brownian motions, their analytic long-run covariances where a closed
// form exists (scalar-coefficient families), and a large-sample Monte
// Carlo reference surface for the operator-kernel families.

#pragma once

#include "flrcov/grid.hpp"
#include "flrcov/rng.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace flrcov {

enum class DgpFamily { MaScalar, FarScalar, MaOperator, FarOperator };

/// One of the four process families:
///   MaScalar:    X_i = W_i + phi (W_{i-1} + ... + W_{i-p})
///   FarScalar:   X_i = phi X_{i-1} + W_i
///   MaOperator:  X_i = W_i + sum_{j<=p} Psi W_{i-j}
///   FarOperator: X_i = Psi X_{i-1} + W_i
/// with Psi f (u) = integral psi(u,s) f(s) ds.
struct DgpSpec {
    DgpFamily family;
    double phi = 0.0;            // scalar families
    int ma_order = 0;            // p, MA families
    std::optional<Surface> psi;  // operator kernel, operator families
    int burn_in = 50;            // FAR families

    static DgpSpec ma_scalar(double phi, int p);
    static DgpSpec far_scalar(double phi, int burn_in = 50);
    static DgpSpec ma_operator(Surface psi, int p);
    static DgpSpec far_operator(Surface psi, int burn_in = 50);

    bool scalar() const {
        return family == DgpFamily::MaScalar || family == DgpFamily::FarScalar;
    }
    bool autoregressive() const {
        return family == DgpFamily::FarScalar || family == DgpFamily::FarOperator;
    }

    /// Canonical tag, used in output and cache keys, e.g. "ma(phi=0.5,p=4)".
    std::string tag() const;
};

/// The seven named processes: "ma0" | "ma1" | "ma4" | "ma8" | "ma-psi4" |
/// "far1" | "far-psi1". phi / p / burn_in of the named process can be
/// overridden (ignored where not meaningful).
DgpSpec make_named_dgp(std::string_view name, const Grid& grid,
                       std::optional<double> phi = std::nullopt,
                       std::optional<int> p = std::nullopt,
                       std::optional<int> burn_in = std::nullopt);

/// psi(t,s) = 0.34 exp((t^2+s^2)/2); L2 norm ~ 0.497.
Surface exp_operator_kernel(const Grid& grid);

/// psi(t,s) = 1.5 min(t,s).
Surface min_operator_kernel(const Grid& grid);

/// Standard Brownian motion sampled on the grid: cumulative sums of
/// independent Gaussian increments with variances u_1, u_2-u_1, ...
Curve brownian_motion(const Grid& grid, RngStream& rng);

/// Midpoint quadrature of the integral operator: g(u_i) = (1/n) sum_j
/// psi(u_i,u_j) f(u_j). Throws on grid mismatch.
Curve apply_operator(const Surface& psi, const Curve& f);

/// T curves of the process. MA families draw p pre-sample innovations so
/// the record is exactly stationary; FAR families iterate burn_in
/// discarded steps from X_0 = 0.
CurveSample simulate(const DgpSpec& spec, int T, const Grid& grid, RngStream& rng);

/// Analytic long-run covariance, scalar families only:
///   MaScalar: (1 + p phi)^2 min(u,s);  FarScalar: min(u,s)/(1-phi)^2.
/// Empty for operator families.
std::optional<Surface> true_lrcov(const DgpSpec& spec, const Grid& grid);

/// Analytic |l|^q-weighted long-run covariance sum_l |l|^q gamma_l for
/// scalar families (q = 0 gives true_lrcov). The FarScalar series is
/// summed with its geometric tail cut at phi^L < 1e-14. Empty for
/// operator families.
std::optional<Surface> true_weighted_lrcov(const DgpSpec& spec, const Grid& grid, int q);

/// Monte Carlo reference: J independent length-T_inner samples, mean
/// curve of each, and C*(t,s) = (T_inner/J) sum_j mean_j(t) mean_j(s).
/// Deterministic in (spec, grid, J, T_inner, rng) for any thread count.
Surface reference_lrcov_mc(const DgpSpec& spec, const Grid& grid, int J, int T_inner,
                           const RngStream& rng, int threads = 1);

}  // namespace flrcov
