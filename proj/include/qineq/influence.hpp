#pragma once

// Influence functions of quantiles, of the curves L_1..L_3 and of the
// coefficients G_1..G_3, and the asymptotic standard errors they imply.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "qineq/curves.hpp"
#include "qineq/errors.hpp"
#include "qineq/parallel.hpp"
#include "qineq/quadrature.hpp"

namespace qineq {

template <class M>
concept DensityModel = QuantileModel<M> && requires(const M& m, double v) {
    { m.quantile_density(v) } -> std::convertible_to<double>;
    { m.cdf(v) } -> std::convertible_to<double>;
};

/// IF(z; x_p) = (p-1) q(p) for z < x_p, 0 at z = x_p, p q(p) for z > x_p.
template <DensityModel M>
double if_quantile(const M& model, double p, double z) {
    detail::require_open_unit(p, "if_quantile");
    const double x = model.quantile(p);
    if (z == x) return 0.0;
    const double q = model.quantile_density(p);
    return z < x ? (p - 1.0) * q : p * q;
}

/// IF(z; L_i(p)) = p {IF(z; x_{p/2})/d_i - x_{p/2} IF(z; d_i)/d_i^2} with
/// d_1 = x_{1/2}, d_2 = x_{1-p/2}, d_3 = (x_{p/2} + x_{1-p/2})/2.
template <DensityModel M>
double if_curve(const M& model, int index, double p, double z) {
    detail::require_open_unit(p, "if_curve");
    const double a = model.quantile(p / 2.0);
    const double if_a = if_quantile(model, p / 2.0, z);
    double d = 0.0, if_d = 0.0;
    switch (index) {
        case 1:
            d = model.quantile(0.5);
            if_d = if_quantile(model, 0.5, z);
            break;
        case 2:
            d = model.quantile(1.0 - p / 2.0);
            if_d = if_quantile(model, 1.0 - p / 2.0, z);
            break;
        case 3:
            d = 0.5 * (a + model.quantile(1.0 - p / 2.0));
            if_d = 0.5 * (if_a + if_quantile(model, 1.0 - p / 2.0, z));
            break;
        default: throw domain_error("if_curve: index must be 1, 2 or 3");
    }
    return p * (if_a / d - a * if_d / (d * d));
}

/// IF(z; G_i) = -2 * integral over (0,1) of IF(z; L_i(p)) dp, split at the
/// jumps p = 2F(z) and p = 2(1 - F(z)).
template <DensityModel M>
double if_coefficient(const M& model, int index, double z, const QuadratureSpec& spec = {1e-8, 1e-10, 4000}) {
    if (index < 1 || index > 3) throw domain_error("if_coefficient: index must be 1, 2 or 3");
    const double u = model.cdf(z);
    const std::array<double, 2> breaks{2.0 * u, 2.0 * (1.0 - u)};
    const double integral = integrate_or_throw<double>([&](double p) { return if_curve(model, index, p, z); }, 0.0,
                                                       1.0, breaks, spec, "if_coefficient");
    return -2.0 * integral;
}

struct AsymptoticSE {
    std::array<double, 3> sigma{};    // sqrt Var_F[IF(Z; G_i)]
    std::array<double, 3> if_mean{};  // E_F[IF(Z; G_i)], zero in theory
    std::size_t u_points = 0;
};

namespace detail {

// With u = F(z) the curve IF splits as
//   IF(z; L_i(p)) = K(p) + A(p) 1[u < p/2] + B(p) 1[u < 1-p/2] + M(p) 1[u < 1/2],
// so g(u) = integral of IF dp over p needs only the cumulative integrals of
// K, A, B, M. Layout: 4*(i-1) + {K, A, B, M}.
template <DensityModel M>
std::array<double, 12> if_components(const M& model, double p, double median, double q_median) {
    const double a = model.quantile(p / 2.0);
    const double qa = model.quantile_density(p / 2.0);
    const double b = model.quantile(1.0 - p / 2.0);
    const double qb = model.quantile_density(1.0 - p / 2.0);
    const double lo = p / 2.0, hi = 1.0 - p / 2.0;
    std::array<double, 12> c{};

    // i = 1, d = median.
    {
        const double d = median;
        c[0] = p * (lo * qa / d - a * 0.5 * q_median / (d * d));
        c[1] = -p * qa / d;
        c[2] = 0.0;
        c[3] = p * a * q_median / (d * d);
    }
    // i = 2, d = x_{1-p/2}.
    {
        const double d = b;
        c[4] = p * (lo * qa / d - a * hi * qb / (d * d));
        c[5] = -p * qa / d;
        c[6] = p * a * qb / (d * d);
        c[7] = 0.0;
    }
    // i = 3, d = (x_{p/2} + x_{1-p/2})/2.
    {
        const double d = 0.5 * (a + b);
        c[8] = p * (lo * qa / d - a * 0.5 * (lo * qa + hi * qb) / (d * d));
        c[9] = p * (-qa / d + a * 0.5 * qa / (d * d));
        c[10] = p * a * 0.5 * qb / (d * d);
        c[11] = 0.0;
    }
    return c;
}

}  // namespace detail

/// sigma_i = sqrt Var_F[IF(Z; G_i)] for i = 1, 2, 3, with the outer
/// expectation taken on the midpoint grid u_k = (k - 1/2)/N, N even. Inner
/// p-integrals are cumulated over panels whose edges are the jump points
/// 2u_k and 2 - 2u_k, so every g(u_k) is exact up to quadrature error.
template <DensityModel M>
AsymptoticSE asymptotic_se_all(const M& model, std::size_t N = 10000,
                               const QuadratureSpec& spec = {1e-13, 1e-11, 200},
                               unsigned workers = default_workers()) {
    using V = std::array<double, 12>;
    if (N < 2 || N % 2 != 0) throw domain_error("asymptotic_se: N must be even and >= 2");
    const double median = model.quantile(0.5);
    const double q_median = model.quantile_density(0.5);
    const std::size_t half = N / 2;
    const double dN = static_cast<double>(N);

    // Edges 0, 1/N, 3/N, ..., (N-1)/N, 1.
    std::vector<double> edges{0.0};
    for (std::size_t k = 1; k <= half; ++k) edges.push_back(static_cast<double>(2 * k - 1) / dN);
    edges.push_back(1.0);
    const std::size_t panels = edges.size() - 1;

    std::vector<V> piece(panels);
    std::vector<char> failed(panels, 0);
    auto f = [&](double p) { return detail::if_components(model, p, median, q_median); };
    parallel_for(panels, workers, [&](std::size_t k) {
        auto r = integrate<V>(f, edges[k], edges[k + 1], spec);
        piece[k] = r.value;
        if (!r.converged && r.abs_error > 1e-10) failed[k] = 1;
    });
    for (std::size_t k = 0; k < panels; ++k)
        if (failed[k]) throw numerical_error("asymptotic_se: panel quadrature did not converge");

    // cum[k] = integral over [0, edges[k]].
    std::vector<V> cum(panels + 1, V{});
    for (std::size_t k = 0; k < panels; ++k)
        for (std::size_t c = 0; c < 12; ++c) cum[k + 1][c] = cum[k][c] + piece[k][c];
    const V& total = cum[panels];

    AsymptoticSE out;
    out.u_points = N;
    for (int i = 0; i < 3; ++i) {
        const std::size_t o = 4 * static_cast<std::size_t>(i);
        std::vector<double> g(N), g2(N);
        for (std::size_t k = 1; k <= N; ++k) {
            double v = total[o];
            if (k <= half) {
                v += total[o + 1] - cum[k][o + 1];  // A over (2u, 1)
                v += total[o + 2];                  // B over (0, 1)
                v += total[o + 3];                  // M, u < 1/2
            } else {
                v += cum[N - k + 1][o + 2];         // B over (0, 2 - 2u)
            }
            const double if_g = -2.0 * v;
            g[k - 1] = if_g;
            g2[k - 1] = if_g * if_g;
        }
        const double mean = pairwise_sum(g) / dN;
        const double second = pairwise_sum(g2) / dN;
        out.if_mean[i] = mean;
        out.sigma[i] = std::sqrt(std::max(0.0, second - mean * mean));
    }
    return out;
}

template <DensityModel M>
double asymptotic_se(const M& model, int index, std::size_t N = 10000) {
    if (index < 1 || index > 3) throw domain_error("asymptotic_se: index must be 1, 2 or 3");
    return asymptotic_se_all(model, N).sigma[index - 1];
}

}  // namespace qineq
