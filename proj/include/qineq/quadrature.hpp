#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature with caller-supplied
// break points. The value type may be `double` or `std::array<double, N>`,
// which lets several integrands that share expensive evaluations (quantile
// inversions) be integrated in one pass.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

#include "qineq/errors.hpp"

namespace qineq {

struct QuadratureSpec {
    double abs_tol = 1e-8;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
};

template <class V>
struct QuadratureResult {
    V value{};
    double abs_error = 0.0;
    bool converged = false;
    int evaluations = 0;
};

namespace detail {

template <class V>
struct VectorOps;

template <>
struct VectorOps<double> {
    static double zero() { return 0.0; }
    static double norm(double v) { return std::fabs(v); }
    static void axpy(double& acc, double s, double v) { acc += s * v; }
};

template <std::size_t N>
struct VectorOps<std::array<double, N>> {
    using V = std::array<double, N>;
    static V zero() { return V{}; }
    static double norm(const V& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::fabs(x));
        return m;
    }
    static void axpy(V& acc, double s, const V& v) {
        for (std::size_t i = 0; i < N; ++i) acc[i] += s * v[i];
    }
};

// QUADPACK qk15 abscissae and weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Panel {
    double a, b;
    V value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class V, class F>
Panel<V> gk15(F& f, double a, double b) {
    using Ops = VectorOps<V>;
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    V kronrod = Ops::zero();
    V gauss = Ops::zero();
    const V fc = f(centre);
    Ops::axpy(kronrod, kWgk[7], fc);
    Ops::axpy(gauss, kWg[3], fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const V f1 = f(centre - dx);
        const V f2 = f(centre + dx);
        Ops::axpy(kronrod, kWgk[j], f1);
        Ops::axpy(kronrod, kWgk[j], f2);
        if (j % 2 == 1) {
            Ops::axpy(gauss, kWg[j / 2], f1);
            Ops::axpy(gauss, kWg[j / 2], f2);
        }
    }
    V value = Ops::zero();
    Ops::axpy(value, half, kronrod);
    V diff = value;
    Ops::axpy(diff, -half, gauss);
    return {a, b, value, Ops::norm(diff)};
}

}  // namespace detail

/// Integrates f over [a,b], forcing panel boundaries at every break point
/// strictly inside (a,b). Does not throw on non-convergence; inspect
/// `converged` and `abs_error`.
template <class V = double, class F>
QuadratureResult<V> integrate(F&& f, double a, double b, std::span<const double> breaks,
                              const QuadratureSpec& spec = {}) {
    using Ops = detail::VectorOps<V>;
    QuadratureResult<V> out;
    if (!(b > a)) {
        out.value = Ops::zero();
        out.converged = true;
        return out;
    }

    std::vector<double> cuts{a};
    for (double x : breaks)
        if (x > a && x < b) cuts.push_back(x);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<detail::Panel<V>> heap;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        heap.push(detail::gk15<V>(f, cuts[i], cuts[i + 1]));
        out.evaluations += 15;
    }

    auto totals = [&heap]() {
        auto copy = heap;
        V v = Ops::zero();
        double e = 0.0;
        while (!copy.empty()) {
            Ops::axpy(v, 1.0, copy.top().value);
            e += copy.top().error;
            copy.pop();
        }
        return std::pair{v, e};
    };

    V total = Ops::zero();
    double error = 0.0;
    {
        auto [v, e] = totals();
        total = v;
        error = e;
    }

    int subdivisions = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * Ops::norm(total)) &&
           subdivisions < spec.max_subdivisions) {
        auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
        heap.pop();
        auto left = detail::gk15<V>(f, worst.a, mid);
        auto right = detail::gk15<V>(f, mid, worst.b);
        out.evaluations += 30;
        Ops::axpy(total, -1.0, worst.value);
        Ops::axpy(total, 1.0, left.value);
        Ops::axpy(total, 1.0, right.value);
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
        // Re-sum periodically to stop cancellation drift in the running totals.
        if (subdivisions % 256 == 0) {
            auto [v, e] = totals();
            total = v;
            error = e;
        }
    }
    auto [v, e] = totals();
    out.value = v;
    out.abs_error = e;
    out.converged = e <= std::max(spec.abs_tol, spec.rel_tol * Ops::norm(v));
    return out;
}

template <class V = double, class F>
QuadratureResult<V> integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    return integrate<V>(std::forward<F>(f), a, b, std::span<const double>{}, spec);
}

/// Like integrate(), but throws numerical_error when the tolerance is missed.
template <class V = double, class F>
V integrate_or_throw(F&& f, double a, double b, std::span<const double> breaks,
                     const QuadratureSpec& spec, const char* who) {
    auto r = integrate<V>(std::forward<F>(f), a, b, breaks, spec);
    if (!r.converged) {
        std::ostringstream msg;
        msg << who << ": quadrature did not converge on [" << a << ", " << b
            << "], achieved error " << r.abs_error << " (tolerance " << spec.abs_tol << ")";
        throw numerical_error(msg.str());
    }
    return r.value;
}

}  // namespace qineq
