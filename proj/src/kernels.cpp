#include "flrcov/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace flrcov {

namespace {

constexpr double kPi = 3.14159265358979323846;

// W_QS(x) = (3/y^2)(sin(y)/y - cos(y)) with y = 6*pi*x/5. Near zero the
// direct form cancels catastrophically, so switch to the series
// 1 - y^2/10 + y^4/280 (next term ~ y^6/15120, below eps for |y| < 1e-2).
double qs_eval(double x) {
    const double y = 1.2 * kPi * x;
    if (std::abs(y) < 1e-2) {
        const double y2 = y * y;
        return 1.0 - y2 / 10.0 + y2 * y2 / 280.0;
    }
    return 3.0 / (y * y) * (std::sin(y) / y - std::cos(y));
}

}  // namespace

KernelSpec KernelSpec::bartlett() {
    KernelSpec k;
    k.family_ = KernelFamily::Bartlett;
    k.name_ = "bartlett";
    k.order_ = 1;
    k.support_bound_ = 1.0;
    k.char_constant_ = 1.0;
    k.l2_integral_ = 2.0 / 3.0;
    return k;
}

KernelSpec KernelSpec::parzen() {
    KernelSpec k;
    k.family_ = KernelFamily::Parzen;
    k.name_ = "parzen";
    k.order_ = 2;
    k.support_bound_ = 1.0;
    k.char_constant_ = 6.0;
    k.l2_integral_ = 151.0 / 280.0;
    return k;
}

KernelSpec KernelSpec::tukey_hanning() {
    KernelSpec k;
    k.family_ = KernelFamily::TukeyHanning;
    k.name_ = "tukey-hanning";
    k.order_ = 2;
    k.support_bound_ = 1.0;
    k.char_constant_ = kPi * kPi / 4.0;
    k.l2_integral_ = 3.0 / 4.0;
    return k;
}

KernelSpec KernelSpec::quadratic_spectral() {
    KernelSpec k;
    k.family_ = KernelFamily::QuadraticSpectral;
    k.name_ = "qs";
    k.order_ = 2;
    k.support_bound_ = std::numeric_limits<double>::infinity();
    k.char_constant_ = 18.0 * kPi * kPi / 125.0;
    k.l2_integral_ = 1.0;
    return k;
}

KernelSpec KernelSpec::flat_top(double k1, double k2) {
    if (!(k1 > 0.0) || !(k2 > k1))
        throw std::invalid_argument("flat_top: requires 0 < k1 < k2");
    KernelSpec k;
    k.family_ = KernelFamily::FlatTop;
    k.name_ = "flat-top";
    k.order_ = 0;
    k.support_bound_ = k2;
    k.l2_integral_ = 2.0 * k1 + 2.0 * (k2 - k1) / 3.0;
    k.k1_ = k1;
    k.k2_ = k2;
    return k;
}

KernelSpec KernelSpec::from_name(std::string_view name, double k1, double k2) {
    if (name == "bartlett") return bartlett();
    if (name == "parzen") return parzen();
    if (name == "tukey-hanning") return tukey_hanning();
    if (name == "qs") return quadratic_spectral();
    if (name == "flat-top") return flat_top(k1, k2);
    throw std::invalid_argument("unknown kernel name: " + std::string(name));
}

int KernelSpec::order() const {
    if (!finite_order())
        throw std::invalid_argument("KernelSpec::order: flat-top has no finite order");
    return order_;
}

double kernel_eval(const KernelSpec& k, double x) {
    const double a = std::abs(x);
    switch (k.family()) {
        case KernelFamily::Bartlett:
            return a <= 1.0 ? 1.0 - a : 0.0;
        case KernelFamily::Parzen:
            if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
            if (a <= 1.0) {
                const double t = 1.0 - a;
                return 2.0 * t * t * t;
            }
            return 0.0;
        case KernelFamily::TukeyHanning:
            return a <= 1.0 ? 0.5 * (1.0 + std::cos(kPi * a)) : 0.0;
        case KernelFamily::QuadraticSpectral:
            return qs_eval(x);
        case KernelFamily::FlatTop:
            if (a < k.k1()) return 1.0;
            if (a < k.k2()) return (k.k2() - a) / (k.k2() - k.k1());
            return 0.0;
    }
    throw std::logic_error("kernel_eval: unreachable");
}

std::vector<double> kernel_weights(const KernelSpec& k, double h, int lag_limit) {
    if (!(h > 0.0)) throw std::invalid_argument("kernel_weights: h must be positive");
    if (lag_limit < 0) throw std::invalid_argument("kernel_weights: negative lag limit");
    int cap = lag_limit;
    if (k.compact_support())
        cap = std::min<long long>(cap, static_cast<long long>(std::ceil(k.support_bound() * h)));
    std::vector<double> w(static_cast<std::size_t>(cap) + 1);
    for (int l = 0; l <= cap; ++l) w[l] = kernel_eval(k, l / h);
    return w;
}

double kernel_order_limit_check(const KernelSpec& k) {
    if (!k.finite_order())
        throw std::invalid_argument("kernel_order_limit_check: unsupported for flat-top");
    const double x = 1e-4;
    return std::abs((kernel_eval(k, x) - 1.0) / std::pow(x, k.order()));
}

}  // namespace flrcov
