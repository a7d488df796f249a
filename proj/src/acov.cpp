#include "flrcov/acov.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace flrcov {

CenteredSample::CenteredSample(Grid g, Eigen::MatrixXd d)
    : grid(std::move(g)), data(std::move(d)) {
    if (data.rows() < 2)
        throw std::invalid_argument("CenteredSample: need at least two curves");
    if (data.cols() != grid.size())
        throw std::invalid_argument("CenteredSample: column count must equal grid size");
    const double tol = 1e-10 * static_cast<double>(data.rows());
    for (Eigen::Index j = 0; j < data.cols(); ++j)
        if (std::abs(data.col(j).sum()) > tol)
            throw std::invalid_argument("CenteredSample: columns must sum to zero");
}

CenteredSample center(const CurveSample& sample) {
    if (sample.length() < 2)
        throw std::invalid_argument("center: need at least two curves");
    Eigen::MatrixXd z = sample.data;
    z.rowwise() -= sample.data.colwise().mean();
    return CenteredSample(sample.grid, std::move(z));
}

Surface autocov_surface(const CenteredSample& c, int lag) {
    const int T = c.length();
    const int l = std::abs(lag);
    if (l >= T) throw std::invalid_argument("autocov_surface: |lag| must be below T");
    const int n = c.grid.size();
    Eigen::MatrixXd m(n, n);
    // (i,j) entry of Z[0:T-l]' * Z[l:T] is sum_t z(t,i) z(t+l,j).
    m.noalias() = c.data.topRows(T - l).transpose() * c.data.bottomRows(T - l);
    m /= static_cast<double>(T);
    if (lag < 0) m.transposeInPlace();
    return Surface(c.grid, std::move(m));
}

}  // namespace flrcov
