#pragma once

// Median-preserving transfers: a levy d on incomes above c = x_{1-p0} lifts
// every income below the poverty line b = x_{p0} up to b.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

#include "qineq/coefficients.hpp"
#include "qineq/curves.hpp"
#include "qineq/distributions.hpp"
#include "qineq/empirical.hpp"

namespace qineq {

struct TransferSpec {
    double p0;  // proportion below the poverty line
    double b;   // poverty line x_{p0}
    double c;   // levy threshold x_{1-p0}
    double d;   // levy per person above c
};

/// b = x_{p0}, c = x_{1-p0} and d = b - C(F;p0)/p0, the per-person shortfall
/// below b, which the equally many incomes above c pay.
template <IncomeModel M>
TransferSpec levy_amount(const M& model, double p0) {
    if (!(p0 > 0.0 && p0 < 0.5)) throw domain_error("levy_amount: p0 must lie in (0, 0.5)");
    if (model.mean().is_infinite()) throw heavy_tail_error("levy_amount: infinite mean");
    const double b = model.quantile(p0);
    const double c = model.quantile(1.0 - p0);
    const double d = b - model.cumulative_income(p0) / p0;
    return {p0, b, c, d};
}

/// Income after the transfer, Y = t(X). Quantile function:
///   b          on [0, F(b))
///   Q(p)       on [F(b), F(c))
///   c          on [F(c), F(c+d))
///   Q(p) - d   on [F(c+d), 1]
template <class M>
class TransferredDistribution {
public:
    TransferredDistribution(M base, TransferSpec spec)
        : base_(std::move(base)), spec_(spec), pb_(base_.cdf(spec.b)), pc_(base_.cdf(spec.c)),
          pcd_(base_.cdf(spec.c + spec.d)) {
        if (!(spec.d >= 0.0) || !(spec.b <= spec.c)) throw domain_error("TransferredDistribution: invalid spec");
    }

    const M& base() const { return base_; }
    const TransferSpec& spec() const { return spec_; }
    /// F(b), F(c), F(c+d).
    std::array<double, 3> breakpoints() const { return {pb_, pc_, pcd_}; }

    double quantile(double p) const {
        detail::require_closed_unit(p, "transferred_quantile");
        if (p < pb_) return spec_.b;
        if (p < pc_) return base_.quantile(p);
        if (p < pcd_) return spec_.c;
        return base_.quantile(p) - spec_.d;
    }

    /// Integral of the transferred quantile function over (0,p).
    double cumulative_income(double p) const {
        detail::require_closed_unit(p, "cumulative_income");
        const auto C = [this](double u) { return base_.cumulative_income(u); };
        if (p <= pb_) return spec_.b * p;
        double acc = spec_.b * pb_;
        if (p <= pc_) return acc + C(p) - C(pb_);
        acc += C(pc_) - C(pb_);
        if (p <= pcd_) return acc + spec_.c * (p - pc_);
        acc += spec_.c * (pcd_ - pc_);
        return acc + C(p) - C(pcd_) - spec_.d * (p - pcd_);
    }

    ExtendedReal mean() const {
        if (base_.mean().is_infinite()) return ExtendedReal::infinity();
        return cumulative_income(1.0);
    }

private:
    M base_;
    TransferSpec spec_;
    double pb_, pc_, pcd_;
};

template <class M>
TransferredDistribution<M> apply_levy(const M& model, double p0) {
    return TransferredDistribution<M>(model, levy_amount(model, p0));
}

template <class M>
double transferred_quantile(const TransferredDistribution<M>& t, double p) {
    return t.quantile(p);
}

struct TransferEffect {
    double p0;
    std::array<double, 4> before{};
    std::array<double, 4> after{};
    std::array<double, 4> absolute{};  // G_i(F) - G_i(F_Y)
    std::array<double, 4> relative{};  // absolute / G_i(F)
};

/// Coefficient reductions caused by the levy at each p0.
template <IncomeModel M>
std::vector<TransferEffect> transfer_effect(const M& model, const std::vector<double>& p0s, const Grid& grid = Grid{}) {
    std::array<double, 4> before{};
    before[0] = gini0(model, grid).value;
    const auto g = coefficients(model, grid);
    std::copy(g.begin(), g.end(), before.begin() + 1);

    std::vector<TransferEffect> out;
    out.reserve(p0s.size());
    for (double p0 : p0s) {
        const auto t = apply_levy(model, p0);
        TransferEffect e{p0, before, {}, {}, {}};
        e.after[0] = gini0(t, grid).value;
        const auto ga = coefficients(t, grid);
        std::copy(ga.begin(), ga.end(), e.after.begin() + 1);
        for (int i = 0; i < 4; ++i) {
            e.absolute[i] = e.before[i] - e.after[i];
            e.relative[i] = e.absolute[i] / e.before[i];
        }
        out.push_back(e);
    }
    return out;
}

/// p0 = 0.005, 0.010, ..., 0.495.
inline std::vector<double> default_p0_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 99; ++k) out.push_back(0.005 * k);
    return out;
}

inline void write_transfer_csv(std::ostream& os, const std::vector<TransferEffect>& rows) {
    const auto old = os.precision(10);
    os << "p0,dG0,dG1,dG2,dG3,rG0,rG1,rG2,rG3\n";
    for (const auto& r : rows) {
        os << r.p0;
        for (double v : r.absolute) os << ',' << v;
        for (double v : r.relative) os << ',' << v;
        os << '\n';
    }
    os.precision(old);
}

struct MedianCheck {
    double median_before;
    double median_after;
    std::size_t violations;  // grid points where the ordering condition fails
    bool preserved;
};

/// Checks that the transfer keeps the median and moves every income towards
/// it: Q_Y(p) >= Q(p) below the median and Q_Y(p) <= Q(p) above, on the grid.
template <QuantileModel A, QuantileModel B>
MedianCheck verify_median_preserving(const A& before, const B& after, const Grid& grid = Grid{},
                                     double rel_tol = 1e-9) {
    const double m = before.quantile(0.5);
    const double my = after.quantile(0.5);
    auto close = [rel_tol](double x, double y) { return std::fabs(x - y) <= rel_tol * std::max({1.0, std::fabs(x), std::fabs(y)}); };
    std::size_t bad = 0;
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double p = grid(j);
        const double x = before.quantile(p);
        const double y = after.quantile(p);
        if (close(x, y)) continue;
        if (p < 0.5 && y < x) ++bad;
        if (p > 0.5 && y > x) ++bad;
    }
    return {m, my, bad, close(m, my) && bad == 0};
}

}  // namespace qineq
