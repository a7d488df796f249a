#include "flrcov/dgp.hpp"

#include "flrcov/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace flrcov {

namespace {

std::string format_params(const char* fmt, double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, a);
    return buf;
}

void validate(const DgpSpec& spec, const Grid& grid) {
    if (spec.ma_order < 0) throw std::invalid_argument("DgpSpec: p must be nonnegative");
    if (spec.burn_in < 0) throw std::invalid_argument("DgpSpec: burn_in must be nonnegative");
    if (spec.family == DgpFamily::FarScalar && !(std::abs(spec.phi) < 1.0))
        throw std::invalid_argument("DgpSpec: FAR requires |phi| < 1");
    if (spec.family == DgpFamily::MaOperator || spec.family == DgpFamily::FarOperator) {
        if (!spec.psi) throw std::invalid_argument("DgpSpec: operator family needs psi");
        if (spec.psi->grid != grid)
            throw std::invalid_argument("DgpSpec: psi defined on a different grid");
        if (spec.family == DgpFamily::FarOperator && !(surface_norm(*spec.psi) < 1.0))
            throw std::invalid_argument("DgpSpec: FAR operator kernel norm must be < 1");
    }
}

Eigen::VectorXd draw_brownian(const Grid& grid, RngStream& rng) {
    const int n = grid.size();
    Eigen::VectorXd v(n);
    double prev_u = 0.0, level = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = grid.point(i);
        level += std::sqrt(u - prev_u) * rng.normal();
        v[i] = level;
        prev_u = u;
    }
    return v;
}

Eigen::VectorXd apply_kernel_matrix(const Surface& psi, const Eigen::VectorXd& f) {
    return psi.values * f / psi.grid.size();
}

}  // namespace

DgpSpec DgpSpec::ma_scalar(double phi, int p) {
    if (p < 0) throw std::invalid_argument("ma_scalar: p must be nonnegative");
    DgpSpec s;
    s.family = DgpFamily::MaScalar;
    s.phi = phi;
    s.ma_order = p;
    return s;
}

DgpSpec DgpSpec::far_scalar(double phi, int burn_in) {
    if (!(std::abs(phi) < 1.0)) throw std::invalid_argument("far_scalar: requires |phi| < 1");
    if (burn_in < 0) throw std::invalid_argument("far_scalar: burn_in must be nonnegative");
    DgpSpec s;
    s.family = DgpFamily::FarScalar;
    s.phi = phi;
    s.burn_in = burn_in;
    return s;
}

DgpSpec DgpSpec::ma_operator(Surface psi, int p) {
    if (p < 0) throw std::invalid_argument("ma_operator: p must be nonnegative");
    DgpSpec s;
    s.family = DgpFamily::MaOperator;
    s.ma_order = p;
    s.psi = std::move(psi);
    return s;
}

DgpSpec DgpSpec::far_operator(Surface psi, int burn_in) {
    if (!(surface_norm(psi) < 1.0))
        throw std::invalid_argument("far_operator: kernel norm must be < 1");
    if (burn_in < 0) throw std::invalid_argument("far_operator: burn_in must be nonnegative");
    DgpSpec s;
    s.family = DgpFamily::FarOperator;
    s.psi = std::move(psi);
    s.burn_in = burn_in;
    return s;
}

std::string DgpSpec::tag() const {
    switch (family) {
        case DgpFamily::MaScalar:
            return "ma" + format_params("(phi=%g", phi) + ",p=" + std::to_string(ma_order) + ")";
        case DgpFamily::FarScalar:
            return "far" + format_params("(phi=%g", phi) + ")";
        case DgpFamily::MaOperator:
            return "ma-op(p=" + std::to_string(ma_order) + ")";
        case DgpFamily::FarOperator:
            return "far-op";
    }
    return "unknown";
}

DgpSpec make_named_dgp(std::string_view name, const Grid& grid, std::optional<double> phi,
                       std::optional<int> p, std::optional<int> burn_in) {
    DgpSpec s;
    if (name == "ma0")
        s = DgpSpec::ma_scalar(phi.value_or(1.0), p.value_or(0));
    else if (name == "ma1")
        s = DgpSpec::ma_scalar(phi.value_or(0.5), p.value_or(1));
    else if (name == "ma4")
        s = DgpSpec::ma_scalar(phi.value_or(0.5), p.value_or(4));
    else if (name == "ma8")
        s = DgpSpec::ma_scalar(phi.value_or(0.5), p.value_or(8));
    else if (name == "ma-psi4")
        s = DgpSpec::ma_operator(exp_operator_kernel(grid), p.value_or(4));
    else if (name == "far1")
        s = DgpSpec::far_scalar(phi.value_or(0.5), burn_in.value_or(50));
    else if (name == "far-psi1")
        s = DgpSpec::far_operator(min_operator_kernel(grid), burn_in.value_or(50));
    else
        throw std::invalid_argument("unknown dgp name: " + std::string(name));
    if (burn_in) s.burn_in = *burn_in;
    return s;
}

Surface exp_operator_kernel(const Grid& grid) {
    return tabulate_surface(
        grid, [](double t, double s) { return 0.34 * std::exp(0.5 * (t * t + s * s)); });
}

Surface min_operator_kernel(const Grid& grid) {
    return tabulate_surface(grid, [](double t, double s) { return 1.5 * std::min(t, s); });
}

Curve brownian_motion(const Grid& grid, RngStream& rng) {
    return Curve(grid, draw_brownian(grid, rng));
}

Curve apply_operator(const Surface& psi, const Curve& f) {
    if (psi.grid != f.grid)
        throw std::invalid_argument("apply_operator: kernel and curve on different grids");
    return Curve(f.grid, apply_kernel_matrix(psi, f.values));
}

CurveSample simulate(const DgpSpec& spec, int T, const Grid& grid, RngStream& rng) {
    if (T < 2) throw std::invalid_argument("simulate: T must be at least 2");
    validate(spec, grid);
    const int n = grid.size();
    Eigen::MatrixXd data(T, n);

    switch (spec.family) {
        case DgpFamily::MaScalar: {
            const int p = spec.ma_order;
            // p pre-sample innovations make X_1 already stationary.
            Eigen::MatrixXd w(p + T, n);
            for (int i = 0; i < p + T; ++i) w.row(i) = draw_brownian(grid, rng).transpose();
            for (int t = 0; t < T; ++t) {
                data.row(t) = w.row(p + t);
                for (int j = 1; j <= p; ++j) data.row(t) += spec.phi * w.row(p + t - j);
            }
            break;
        }
        case DgpFamily::FarScalar: {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
            for (int i = -spec.burn_in; i < T; ++i) {
                x = spec.phi * x + draw_brownian(grid, rng);
                if (i >= 0) data.row(i) = x.transpose();
            }
            break;
        }
        case DgpFamily::MaOperator: {
            const int p = spec.ma_order;
            Eigen::MatrixXd w(p + T, n);      // raw innovations
            Eigen::MatrixXd mapped(p + T, n);  // psi applied to each
            for (int i = 0; i < p + T; ++i) {
                const Eigen::VectorXd b = draw_brownian(grid, rng);
                w.row(i) = b.transpose();
                mapped.row(i) = apply_kernel_matrix(*spec.psi, b).transpose();
            }
            for (int t = 0; t < T; ++t) {
                data.row(t) = w.row(p + t);
                for (int j = 1; j <= p; ++j) data.row(t) += mapped.row(p + t - j);
            }
            break;
        }
        case DgpFamily::FarOperator: {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
            for (int i = -spec.burn_in; i < T; ++i) {
                x = apply_kernel_matrix(*spec.psi, x) + draw_brownian(grid, rng);
                if (i >= 0) data.row(i) = x.transpose();
            }
            break;
        }
    }
    return CurveSample(grid, std::move(data));
}

std::optional<Surface> true_lrcov(const DgpSpec& spec, const Grid& grid) {
    if (!spec.scalar()) return std::nullopt;
    double factor = 0.0;
    if (spec.family == DgpFamily::MaScalar) {
        const double b = 1.0 + spec.ma_order * spec.phi;
        factor = b * b;
    } else {
        const double b = 1.0 - spec.phi;
        factor = 1.0 / (b * b);
    }
    return tabulate_surface(grid,
                            [factor](double u, double s) { return factor * std::min(u, s); });
}

std::optional<Surface> true_weighted_lrcov(const DgpSpec& spec, const Grid& grid, int q) {
    if (!spec.scalar()) return std::nullopt;
    if (q < 0) throw std::invalid_argument("true_weighted_lrcov: q must be nonnegative");
    double factor = 0.0;
    if (spec.family == DgpFamily::MaScalar) {
        // gamma_l = a_l min(u,s), a_l = sum_j c_j c_{j+l} with c_0 = 1,
        // c_1..c_p = phi; lags beyond p vanish.
        const int p = spec.ma_order;
        auto coef = [&](int j) { return j == 0 ? 1.0 : (j <= p ? spec.phi : 0.0); };
        for (int l = (q == 0 ? 0 : 1); l <= p; ++l) {
            double a = 0.0;
            for (int j = 0; j + l <= p; ++j) a += coef(j) * coef(j + l);
            factor += (l == 0 ? 1.0 : 2.0 * std::pow(static_cast<double>(l), q)) * a;
        }
    } else {
        // gamma_l = phi^|l| min(u,s) / (1 - phi^2); geometric tail cut.
        const double scale = 1.0 / (1.0 - spec.phi * spec.phi);
        if (q == 0) factor += scale;
        double power = 1.0;
        for (int l = 1; std::abs(power *= spec.phi) >= 1e-14; ++l)
            factor += 2.0 * std::pow(static_cast<double>(l), q) * power * scale;
    }
    return tabulate_surface(grid,
                            [factor](double u, double s) { return factor * std::min(u, s); });
}

Surface reference_lrcov_mc(const DgpSpec& spec, const Grid& grid, int J, int T_inner,
                           const RngStream& rng, int threads) {
    if (J < 100 || T_inner < 100)
        throw std::invalid_argument("reference_lrcov_mc: J and T_inner must be at least 100");
    validate(spec, grid);
    const int n = grid.size();
    Eigen::MatrixXd means(J, n);
    parallel_for(J, threads, [&](int j) {
        RngStream sub = rng.substream(static_cast<std::uint64_t>(j));
        const CurveSample s = simulate(spec, T_inner, grid, sub);
        means.row(j) = s.data.colwise().mean();
    });
    // Single deterministic reduction, independent of worker scheduling.
    Eigen::MatrixXd c = means.transpose() * means;
    c *= static_cast<double>(T_inner) / static_cast<double>(J);
    return Surface(grid, std::move(c));
}

}  // namespace flrcov
