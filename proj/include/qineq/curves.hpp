#pragma once

// Population inequality curves. L_1..L_3 need only a quantile function, so
// they are templated on any type with `double quantile(double) const`.

#include <array>
#include <concepts>
#include <cstddef>

#include "qineq/curve_table.hpp"
#include "qineq/distributions.hpp"
#include "qineq/empirical.hpp"
#include "qineq/errors.hpp"

namespace qineq {

template <class M>
concept QuantileModel = requires(const M& m, double p) {
    { m.quantile(p) } -> std::convertible_to<double>;
};

template <class M>
concept IncomeModel = QuantileModel<M> && requires(const M& m, double p) {
    { m.cumulative_income(p) } -> std::convertible_to<double>;
    { m.mean() } -> std::convertible_to<ExtendedReal>;
};

/// L_1(p), L_2(p), L_3(p) sharing the three quantile evaluations.
template <QuantileModel M>
std::array<double, 3> curve_values(const M& model, double p) {
    detail::require_open_unit(p, "curve_values");
    const double lower = model.quantile(p / 2.0);
    const double median = model.quantile(0.5);
    const double upper = model.quantile(1.0 - p / 2.0);
    return {detail::curve_from_quantiles(1, p, lower, median, upper),
            detail::curve_from_quantiles(2, p, lower, median, upper),
            detail::curve_from_quantiles(3, p, lower, median, upper)};
}

/// L_1(p) = p x_{p/2}/x_{1/2}; L_2(p) = p x_{p/2}/x_{1-p/2};
/// L_3(p) = 2p x_{p/2}/(x_{p/2} + x_{1-p/2}).
template <QuantileModel M>
double curve_value(const M& model, int index, double p) {
    detail::require_open_unit(p, "curve_value");
    const double lower = model.quantile(p / 2.0);
    switch (index) {
        case 1: return detail::curve_from_quantiles(1, p, lower, model.quantile(0.5), 0.0);
        case 2:
        case 3: return detail::curve_from_quantiles(index, p, lower, 0.0, model.quantile(1.0 - p / 2.0));
        default: throw domain_error("curve_value: index must be 1, 2 or 3");
    }
}

/// Lorenz curve C(F;p)/mu. With an infinite mean this throws heavy_tail_error,
/// or returns 0 when extend_heavy_tail is set.
template <IncomeModel M>
double lorenz_value(const M& model, double p, bool extend_heavy_tail = false) {
    detail::require_closed_unit(p, "lorenz_value");
    const ExtendedReal mu = model.mean();
    if (mu.is_infinite()) {
        if (!extend_heavy_tail) throw heavy_tail_error("Lorenz curve undefined: infinite mean");
        return p < 1.0 ? 0.0 : 1.0;
    }
    if (p == 1.0) return 1.0;
    return model.cumulative_income(p) / mu.value();
}

/// Curve index 0..3 on the midpoint grid (no endpoints; see with_endpoints()).
template <QuantileModel M>
CurveTable curve_table(const M& model, int index, const Grid& grid, bool extend_heavy_tail = false) {
    if (index < 0 || index > 3) throw domain_error("curve_table: index must be 0..3");
    CurveTable t{index, {}};
    t.points.reserve(grid.size());
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double p = grid(j);
        double v = 0.0;
        if (index == 0) {
            if constexpr (IncomeModel<M>)
                v = lorenz_value(model, p, extend_heavy_tail);
            else
                throw domain_error("curve_table: model has no cumulative income");
        } else {
            v = curve_value(model, index, p);
        }
        t.points.push_back({p, v});
    }
    return t;
}

}  // namespace qineq
