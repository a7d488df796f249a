#include "flrcov/lrcov.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace flrcov {

namespace {

// Shared accumulation core. Lags run in ascending order so the summation
// order (and hence the floating-point result) is fixed.
struct Accumulated {
    Eigen::MatrixXd sum;
    int lag_cap;
};

Accumulated accumulate_lags(const CenteredSample& c, const KernelSpec& k, double h, int p) {
    if (!(h > 0.0)) throw std::invalid_argument("lrcov: h must be positive");
    if (p < 0) throw std::invalid_argument("lrcov: p must be nonnegative");
    const int T = c.length();
    const int n = c.grid.size();
    const std::vector<double> w = kernel_weights(k, h, T - 1);
    const int cap = static_cast<int>(w.size()) - 1;

    Accumulated out{Eigen::MatrixXd::Zero(n, n), 0};
    if (p == 0) out.sum = autocov_surface(c, 0).values;  // |0|^0 = 1
    Eigen::MatrixXd g(n, n);
    for (int l = 1; l <= cap; ++l) {
        if (w[l] == 0.0) continue;
        g.noalias() = c.data.topRows(T - l).transpose() * c.data.bottomRows(T - l);
        g /= static_cast<double>(T);
        const double coef = w[l] * std::pow(static_cast<double>(l), p);
        out.sum.noalias() += coef * g;
        out.sum.noalias() += coef * g.transpose();
        out.lag_cap = l;
    }
    return out;
}

}  // namespace

LrcovEstimate lrcov_estimate(const CenteredSample& c, const KernelSpec& k, double h) {
    Accumulated acc = accumulate_lags(c, k, h, 0);
    return LrcovEstimate{Surface(c.grid, std::move(acc.sum)), k, h, acc.lag_cap};
}

Surface weighted_pilot(const CenteredSample& c, const KernelSpec& k, double h, int p) {
    Accumulated acc = accumulate_lags(c, k, h, p);
    return Surface(c.grid, std::move(acc.sum));
}

double min_eigenvalue(const Surface& s) {
    const int n = s.grid.size();
    Eigen::MatrixXd sym = 0.5 * (s.values + s.values.transpose()) / n;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace flrcov
