#pragma once

#include "flrcov/grid.hpp"

#include "oracle.hpp"

#include <random>

namespace testutil {

inline flrcov::Surface min_surface(const flrcov::Grid& g, double factor = 1.0) {
    return flrcov::tabulate_surface(
        g, [factor](double u, double s) { return factor * std::min(u, s); });
}

inline oracle::Matrix to_rows(const Eigen::MatrixXd& m) {
    oracle::Matrix out(m.rows(), std::vector<double>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline double max_abs_diff(const Eigen::MatrixXd& m, const oracle::Matrix& rows) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - rows[i][j]));
    return worst;
}

inline Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937_64& gen,
                                     double scale = 1.0) {
    std::normal_distribution<double> d(0.0, scale);
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = d(gen);
    return m;
}

inline double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

}  // namespace testutil
