#pragma once

// Numerical convexity checks for L_0..L_3: central second differences, grid
// scans with golden-section refinement, and closed-form L_1'' oracles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <tuple>
#include <utility>
#include <string>
#include <vector>

#include "qineq/curves.hpp"
#include "qineq/distributions.hpp"
#include "qineq/parallel.hpp"
#include "qineq/quadrature.hpp"
#include "qineq/special_functions.hpp"

namespace qineq {

/// (L(p-h) - 2L(p) + L(p+h))/h^2. For the Lorenz curve (index 0) the
/// numerator is computed as the difference of the two integrals of Q over
/// [p, p+h] and [p-h, p], divided by the mean.
template <QuantileModel M>
double second_difference(const M& model, int index, double p, double h) {
    if (!(h > 0.0)) throw domain_error("second_difference: h must be positive");
    if (!(p - h > 0.0 && p + h < 1.0)) throw domain_error("second_difference: step too large near the endpoints");
    if (index == 0) {
        if constexpr (IncomeModel<M>) {
            const double mu = model.mean().value();
            const QuadratureSpec spec{0.0, 1e-14, 50};
            auto Q = [&](double u) { return model.quantile(u); };
            const double right = integrate(Q, p, p + h, spec).value;
            const double left = integrate(Q, p - h, p, spec).value;
            return (right - left) / (mu * h * h);
        } else {
            throw domain_error("second_difference: index 0 needs a model with a mean");
        }
    }
    return (curve_value(model, index, p - h) - 2.0 * curve_value(model, index, p) +
            curve_value(model, index, p + h)) / (h * h);
}

/// Closed-form L_1''(p) for the Uniform, Exponential, Pareto I/II, Weibull
/// and lognormal families.
inline double analytic_L1_second(const DistributionModel& model, double p) {
    detail::require_open_unit(p, "analytic_L1_second");
    using namespace families;
    const auto& v = model.variant();
    if (std::holds_alternative<Uniform>(v)) return 2.0;
    if (std::holds_alternative<Exponential>(v))
        return (4.0 - p) / ((p - 2.0) * (p - 2.0) * std::numbers::ln2);
    if (const auto* d = std::get_if<ParetoI>(&v)) {
        const double a = d->a;
        const double c1 = std::pow(2.0 - p, -1.0 / a) / a;
        return c1 * (2.0 / (2.0 - p) + (1.0 + 1.0 / a) * p / ((2.0 - p) * (2.0 - p)));
    }
    if (const auto* d = std::get_if<ParetoII>(&v)) {
        const double a = d->a;
        return std::pow(1.0 - p / 2.0, -1.0 / a) / (a * a * (p - 2.0) * (p - 2.0) * (std::pow(2.0, 1.0 / a) - 1.0)) *
               (p + a * (4.0 - p));
    }
    if (const auto* d = std::get_if<Weibull>(&v)) {
        const double b = d->beta;
        const double l = std::log(2.0 / (2.0 - p));
        return std::pow(std::numbers::ln2, -1.0 / b) / (b * (p - 2.0) * (p - 2.0)) * std::pow(l, 1.0 / b - 1.0) *
               (4.0 - p - p / l + (p / b) / l);
    }
    if (std::holds_alternative<Lognormal>(v)) {
        const double z = special::normal_quantile(p / 2.0);
        const double phi = special::normal_pdf(z);
        const double L1 = p * std::exp(z);
        return L1 * (1.0 / (p * phi) + (1.0 + z) / (4.0 * phi * phi));
    }
    throw domain_error("analytic_L1_second: no closed form for " + model.label());
}

/// 4 phi(z) + p (1 + z) with z = z_{p/2}; the lognormal L_1'' is positive
/// exactly where this is.
inline double lognormal_convexity_condition(double p) {
    detail::require_open_unit(p, "lognormal_convexity_condition");
    const double z = special::normal_quantile(p / 2.0);
    return 4.0 * special::normal_pdf(z) + p * (1.0 + z);
}

/// p = 0.005, 0.010, ..., 0.995.
inline std::vector<double> default_convexity_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 199; ++k) out.push_back(0.005 * k);
    return out;
}

struct ConvexityReport {
    std::string model;
    int index = 1;
    double tolerance = 1e-6;
    double min_value = std::numeric_limits<double>::infinity();
    double argmin_p = std::nan("");
    double argmin_param = std::nan("");
    // Smallest local minimum strictly inside the p grid (refined).
    bool has_interior_min = false;
    double interior_min = std::numeric_limits<double>::infinity();
    double interior_argmin_p = std::nan("");
    double interior_argmin_param = std::nan("");
    bool convex = true;
};

namespace detail {

template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, int iters = 60) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && b - a > 1e-10; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - r * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + r * (b - a); fd = f(d);
        }
    }
    return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace detail

/// Second differences of L_index on the p grid, with h shrunk near the
/// endpoints to min(h, p/2, (1-p)/2). Minima are refined by golden-section
/// search between the neighbouring grid points.
template <QuantileModel M>
ConvexityReport convexity_scan(const M& model, int index, const std::vector<double>& pgrid,
                               double h = 1e-4, double tolerance = 1e-6) {
    if (pgrid.size() < 3) throw domain_error("convexity_scan: need at least 3 grid points");
    auto d2 = [&](double p) { return second_difference(model, index, p, std::min({h, p / 2.0, (1.0 - p) / 2.0})); };
    std::vector<double> v(pgrid.size());
    for (std::size_t k = 0; k < pgrid.size(); ++k) v[k] = d2(pgrid[k]);

    ConvexityReport rep;
    if constexpr (requires { model.label(); }) rep.model = model.label();
    rep.index = index;
    rep.tolerance = tolerance;

    auto refine = [&](std::size_t k) {
        const double lo = pgrid[k == 0 ? 0 : k - 1];
        const double hi = pgrid[std::min(k + 1, pgrid.size() - 1)];
        auto [p, val] = detail::golden_min(d2, lo, hi);
        if (v[k] <= val) return std::pair{pgrid[k], v[k]};
        return std::pair{p, val};
    };

    const auto kmin = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
    std::tie(rep.argmin_p, rep.min_value) = refine(kmin);
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        if (v[k] <= v[k - 1] && v[k] <= v[k + 1]) {
            auto [p, val] = refine(k);
            if (val < rep.interior_min) {
                rep.has_interior_min = true;
                rep.interior_min = val;
                rep.interior_argmin_p = p;
            }
        }
    }
    rep.convex = rep.min_value >= -tolerance;
    return rep;
}

/// Scans a one-parameter family, reporting the smallest global and interior
/// minima together with the parameter at which they occur.
inline ConvexityReport convexity_sweep(const std::function<DistributionModel(double)>& family,
                                       const std::vector<double>& params, int index,
                                       const std::vector<double>& pgrid = default_convexity_grid(),
                                       double h = 1e-4, double tolerance = 1e-6,
                                       unsigned workers = default_workers()) {
    if (params.empty()) throw domain_error("convexity_sweep: empty parameter grid");
    std::vector<ConvexityReport> reps(params.size());
    parallel_for(params.size(), workers,
                 [&](std::size_t k) { reps[k] = convexity_scan(family(params[k]), index, pgrid, h, tolerance); });

    ConvexityReport out;
    out.model = family(params.front()).label();
    out.index = index;
    out.tolerance = tolerance;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const auto& r = reps[k];
        if (r.min_value < out.min_value) {
            out.min_value = r.min_value;
            out.argmin_p = r.argmin_p;
            out.argmin_param = params[k];
        }
        if (r.has_interior_min && r.interior_min < out.interior_min) {
            out.has_interior_min = true;
            out.interior_min = r.interior_min;
            out.interior_argmin_p = r.interior_argmin_p;
            out.interior_argmin_param = params[k];
        }
    }
    out.convex = out.min_value >= -tolerance;
    return out;
}

}  // namespace qineq
