// Midpoint discretization of [0,1] and L2 numerics for curves and
// bivariate surfaces. Everything downstream (autocovariances, estimates,
// losses) lives on these types.

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace flrcov {

/// Uniform midpoint grid u_i = (i - 1/2)/n on (0,1), quadrature weight 1/n.
class Grid {
public:
    explicit Grid(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Grid: n must be positive");
        points_.resize(n_);
        for (int i = 0; i < n_; ++i) points_[i] = (i + 0.5) / n_;
    }

    int size() const { return n_; }
    double point(int i) const { return points_[i]; }
    double weight() const { return 1.0 / n_; }
    const std::vector<double>& points() const { return points_; }

    friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

private:
    int n_;
    std::vector<double> points_;
};

/// One function on the grid: values[i] = f(u_i).
struct Curve {
    Grid grid;
    Eigen::VectorXd values;

    Curve(Grid g, Eigen::VectorXd v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("Curve: values length must equal grid size");
    }
};

/// A bivariate function on [0,1]^2: values(i,j) = F(u_i, u_j).
struct Surface {
    Grid grid;
    Eigen::MatrixXd values;

    Surface(Grid g, Eigen::MatrixXd v) : grid(std::move(g)), values(std::move(v)) {
        if (values.rows() != grid.size() || values.cols() != grid.size())
            throw std::invalid_argument("Surface: values must be n x n with n = grid size");
    }
};

/// T curves observed on a shared grid, one per row. Requires T >= 2.
struct CurveSample {
    Grid grid;
    Eigen::MatrixXd data;  // T x n

    CurveSample(Grid g, Eigen::MatrixXd d) : grid(std::move(g)), data(std::move(d)) {
        if (data.rows() < 2)
            throw std::invalid_argument("CurveSample: need at least two curves");
        if (data.cols() != grid.size())
            throw std::invalid_argument("CurveSample: column count must equal grid size");
    }

    int length() const { return static_cast<int>(data.rows()); }
};

/// Tabulate F(u,s) on the grid.
template <typename F>
Surface tabulate_surface(const Grid& grid, F&& f) {
    const int n = grid.size();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = f(grid.point(i), grid.point(j));
    return Surface(grid, std::move(m));
}

/// Midpoint-Riemann approximation of the L2[0,1]^2 norm:
/// sqrt((1/n^2) sum_ij S(i,j)^2).
double surface_norm(const Surface& s);

/// (1/n) sum_i S(i,i), approximating the integral of S over the diagonal.
double surface_trace(const Surface& s);

/// Squared L2 distance ||A - B||^2. Throws on grid mismatch.
double surface_distance_sq(const Surface& a, const Surface& b);

}  // namespace flrcov
