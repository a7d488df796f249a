// Lag-window weight functions and their metadata. Each family carries the
// order q (curvature of W at 0, which sets the bias rate h^-q), the
// characteristic constant |w| = |lim x^-q (W(x)-1)|, the L2 integral of W,
// and the support bound m (W = 0 beyond m; infinite for quadratic spectral).

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flrcov {

enum class KernelFamily { Bartlett, Parzen, TukeyHanning, QuadraticSpectral, FlatTop };

class KernelSpec {
public:
    static KernelSpec bartlett();
    static KernelSpec parzen();
    static KernelSpec tukey_hanning();
    static KernelSpec quadratic_spectral();
    /// Flat-top taper: 1 on [0,k1), linear down to 0 at k2. Requires 0 < k1 < k2.
    static KernelSpec flat_top(double k1 = 0.5, double k2 = 1.0);

    /// Accepts "bartlett" | "parzen" | "tukey-hanning" | "qs" | "flat-top".
    static KernelSpec from_name(std::string_view name, double k1 = 0.5, double k2 = 1.0);

    KernelFamily family() const { return family_; }
    const std::string& name() const { return name_; }

    /// False only for the flat-top, whose order exceeds any finite q.
    bool finite_order() const { return order_ > 0; }
    int order() const;  // throws for the flat-top

    bool compact_support() const { return std::isfinite(support_bound_); }
    double support_bound() const { return support_bound_; }

    /// |w| from the small-x expansion; absent for the flat-top.
    std::optional<double> char_constant() const { return char_constant_; }
    double l2_integral() const { return l2_integral_; }

    /// Flat-top plateau/support parameters; meaningful only for FlatTop.
    double k1() const { return k1_; }
    double k2() const { return k2_; }

private:
    KernelSpec() = default;

    KernelFamily family_{};
    std::string name_;
    int order_ = 0;  // 0 encodes infinite order
    double support_bound_ = 0.0;
    std::optional<double> char_constant_;
    double l2_integral_ = 0.0;
    double k1_ = 0.0, k2_ = 0.0;
};

/// W(x) by the family's closed form. Even in x; exactly 0 beyond the
/// support bound; the quadratic spectral removable singularity at 0
/// evaluates to 1.
double kernel_eval(const KernelSpec& k, double x);

/// Weights (W(l/h))_{l=0..L} with L = min(lag_limit, ceil(m*h)) for
/// compactly supported families and L = lag_limit for quadratic spectral.
/// Throws if h <= 0.
std::vector<double> kernel_weights(const KernelSpec& k, double h, int lag_limit);

/// Numeric estimate |x^-q (W(x)-1)| at x = 1e-4, used to validate the
/// stored char_constant. Throws for the flat-top.
double kernel_order_limit_check(const KernelSpec& k);

}  // namespace flrcov
