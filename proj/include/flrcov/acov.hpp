// Sample centering and empirical autocovariance surfaces. The lag-l
// autocovariance uses the 1/T divisor at every lag (no small-sample
// correction), so partial sums of weighted lags stay positive definite
// for positive-definite weight sequences.

#pragma once

#include "flrcov/grid.hpp"

namespace flrcov {

/// A sample with its pointwise mean curve removed; every column sums to
/// zero (within 1e-10 * T).
struct CenteredSample {
    Grid grid;
    Eigen::MatrixXd data;  // T x n

    CenteredSample(Grid g, Eigen::MatrixXd d);

    int length() const { return static_cast<int>(data.rows()); }
};

/// Subtract the sample mean curve from every row. Throws if T < 2.
CenteredSample center(const CurveSample& sample);

/// Empirical lag-l autocovariance surface:
///   (i,j) -> (1/T) sum_{t=1}^{T-l} z_t(u_i) z_{t+l}(u_j)   for l >= 0,
/// and the transposed relation for l < 0. Requires |l| <= T-1.
Surface autocov_surface(const CenteredSample& c, int lag);

}  // namespace flrcov
