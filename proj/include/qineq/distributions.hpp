#pragma once

// Parametric income distributions: CDF, density, quantile, quantile density,
// mean and cumulative income, plus inverse-transform sampling.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qineq/errors.hpp"
#include "qineq/quadrature.hpp"
#include "qineq/random.hpp"
#include "qineq/sample.hpp"
#include "qineq/special_functions.hpp"

namespace qineq {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A real number or +infinity (means of heavy-tailed models).
class ExtendedReal {
public:
    constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT: implicit by intent
    static constexpr ExtendedReal infinity() { return ExtendedReal(kInf); }

    constexpr bool is_finite() const { return value_ < kInf; }
    constexpr bool is_infinite() const { return !is_finite(); }

    /// The finite value; throws heavy_tail_error for +inf.
    double value() const {
        if (is_infinite()) throw heavy_tail_error("value is +infinity (infinite mean)");
        return value_;
    }
    constexpr double raw() const { return value_; }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& v) {
        if (v.is_infinite()) return os << "+inf";
        return os << v.value_;
    }

private:
    double value_;
};

enum class Family { Uniform, Exponential, ChiSquare, Lognormal, ParetoI, ParetoII, Weibull, Beta };

namespace detail {

inline std::string format_number(double v) {
    char buf[64];
    if (v == std::trunc(v) && std::fabs(v) < 1e15) {
        auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(v));
        return std::string(buf, res.ptr);
    }
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct TailEval {
    double lower;
    double upper;
    double density;
};

// Solves F(x) = p for x > 0, iterating on y = ln x. Newton steps on the log
// of the relevant tail probability, safeguarded by bisection in y. For
// p <= 1/2 the lower tail is matched, otherwise the upper tail against the
// exactly representable 1 - p. Converges to within a few ulp of x.
template <class Eval>
double invert_cdf_log(Eval&& eval, double p, double guess, double upper_bound) {
    const bool use_lower = p <= 0.5;
    const double target = use_lower ? std::log(p) : std::log1p(-p);
    auto objective = [&](double y, double& slope) {
        const TailEval t = eval(y);
        const double x = std::exp(y);
        if (use_lower) {
            slope = t.density * x / t.lower;
            return std::log(t.lower) - target;
        }
        slope = t.density * x / t.upper;
        return target - std::log(t.upper);
    };

    const double y_max = std::log(upper_bound);
    double y = std::log(std::clamp(guess, 1e-300, upper_bound));
    double slope = 0.0;
    double h = objective(y, slope);
    double lo = -kInf, hi = kInf;
    if (h == 0.0) return std::exp(y);
    if (h < 0.0) lo = y; else hi = y;

    // Expand until bracketed.
    double step = 0.5;
    for (int i = 0; i < 200 && (std::isinf(lo) || std::isinf(hi)); ++i) {
        double y_try = std::isinf(hi) ? y + step : y - step;
        if (std::isinf(hi) && y_try >= y_max) y_try = y_max;
        double s = 0.0;
        const double h_try = objective(y_try, s);
        if (h_try < 0.0) lo = y_try; else hi = y_try;
        y = y_try;
        h = h_try;
        slope = s;
        step *= 2.0;
        if (std::isinf(hi) && y_try == y_max) {
            hi = y_max;  // F(upper_bound) = 1 >= p
        }
    }
    if (std::isinf(lo) || std::isinf(hi)) throw numerical_error("quantile inversion failed to bracket");

    for (int it = 0; it < 400; ++it) {
        double y_new = y - h / slope;
        if (!(std::isfinite(y_new) && y_new > lo && y_new < hi)) y_new = 0.5 * (lo + hi);
        const double dy = std::fabs(y_new - y);
        y = y_new;
        h = objective(y, slope);
        if (h == 0.0) break;
        if (h < 0.0) lo = y; else hi = y;
        if (dy <= 2.0 * special::kEps || hi - lo <= 2.0 * special::kEps * std::max(1.0, std::fabs(y)))
            break;
    }
    return std::exp(y);
}

}  // namespace detail

namespace families {

struct Uniform {
    double sigma = 1.0;
    double cdf(double x) const { return std::clamp(x / sigma, 0.0, 1.0); }
    double sf(double x) const { return 1.0 - cdf(x); }
    double pdf(double x) const { return (x >= 0.0 && x <= sigma) ? 1.0 / sigma : 0.0; }
    double quantile(double p) const { return sigma * p; }
    double quantile_density(double) const { return sigma; }
    ExtendedReal mean() const { return sigma / 2.0; }
    double cumulative_income(double p) const { return sigma * p * p / 2.0; }
    double upper_support() const { return sigma; }
};

struct Exponential {
    double sigma = 1.0;
    double cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-x / sigma); }
    double sf(double x) const { return x <= 0.0 ? 1.0 : std::exp(-x / sigma); }
    double pdf(double x) const { return x < 0.0 ? 0.0 : std::exp(-x / sigma) / sigma; }
    double quantile(double p) const { return -sigma * std::log1p(-p); }
    double quantile_density(double p) const { return sigma / (1.0 - p); }
    ExtendedReal mean() const { return sigma; }
    double cumulative_income(double p) const {
        if (p >= 1.0) return sigma;
        return sigma * (p + (1.0 - p) * std::log1p(-p));
    }
    double upper_support() const { return kInf; }
};

struct ChiSquare {
    double k;
    double cdf(double x) const { return x <= 0.0 ? 0.0 : special::gamma_inc(k / 2.0, x / 2.0).first; }
    double sf(double x) const { return x <= 0.0 ? 1.0 : special::gamma_inc(k / 2.0, x / 2.0).second; }
    double pdf(double x) const {
        if (x < 0.0) return 0.0;
        if (x == 0.0) return k < 2.0 ? kInf : (k == 2.0 ? 0.5 : 0.0);
        const double h = k / 2.0;
        return std::exp((h - 1.0) * std::log(x) - x / 2.0 - h * std::numbers::ln2 - std::lgamma(h));
    }
    double quantile(double p) const {
        const double h = k / 2.0;
        const double z = special::normal_quantile(p);
        const double c = 2.0 / (9.0 * k);
        const double wh = k * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
        const double small = 2.0 * std::exp((std::log(p) + std::lgamma(h + 1.0)) / h);
        const double guess = (wh > 0.0 && p > 0.05) ? wh : std::min(small, wh > 0.0 ? wh : small);
        auto eval = [h, this](double y) {
            const double x = std::exp(y);
            const auto [lower, upper] = special::gamma_inc(h, x / 2.0);
            return detail::TailEval{lower, upper, pdf(x)};
        };
        return detail::invert_cdf_log(eval, p, guess, kInf);
    }
    double quantile_density(double p) const { return 1.0 / pdf(quantile(p)); }
    ExtendedReal mean() const { return k; }
    double cumulative_income(double p) const {
        if (p >= 1.0) return k;
        return k * special::gamma_inc(k / 2.0 + 1.0, quantile(p) / 2.0).first;
    }
    double upper_support() const { return kInf; }
};

struct Lognormal {
    double cdf(double x) const { return x <= 0.0 ? 0.0 : special::normal_cdf(std::log(x)); }
    double sf(double x) const { return x <= 0.0 ? 1.0 : special::normal_sf(std::log(x)); }
    double pdf(double x) const {
        if (x <= 0.0) return 0.0;
        return special::normal_pdf(std::log(x)) / x;
    }
    double quantile(double p) const { return std::exp(special::normal_quantile(p)); }
    double quantile_density(double p) const {
        const double z = special::normal_quantile(p);
        return std::exp(z) / special::normal_pdf(z);
    }
    ExtendedReal mean() const { return std::exp(0.5); }
    double cumulative_income(double p) const {
        if (p >= 1.0) return std::exp(0.5);
        return std::exp(0.5) * special::normal_cdf(special::normal_quantile(p) - 1.0);
    }
    double upper_support() const { return kInf; }
};

struct ParetoI {
    double a;
    double sigma = 1.0;
    double cdf(double x) const { return x <= sigma ? 0.0 : -std::expm1(-a * std::log(x / sigma)); }
    double sf(double x) const { return x <= sigma ? 1.0 : std::pow(x / sigma, -a); }
    double pdf(double x) const { return x < sigma ? 0.0 : a / sigma * std::pow(x / sigma, -a - 1.0); }
    double quantile(double p) const { return sigma * std::exp(-std::log1p(-p) / a); }
    double quantile_density(double p) const {
        return sigma / (a * std::pow(1.0 - p, 1.0 / a + 1.0));
    }
    ExtendedReal mean() const {
        if (a <= 1.0) return ExtendedReal::infinity();
        return a * sigma / (a - 1.0);
    }
    double cumulative_income(double p) const {
        if (p >= 1.0) return mean().value();
        if (a == 1.0) return -sigma * std::log1p(-p);
        const double e = 1.0 - 1.0 / a;
        return sigma * (-std::expm1(e * std::log1p(-p))) / e;
    }
    double upper_support() const { return kInf; }
};

struct ParetoII {
    double a;
    double sigma = 1.0;
    double cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-a * std::log1p(x / sigma)); }
    double sf(double x) const { return x <= 0.0 ? 1.0 : std::exp(-a * std::log1p(x / sigma)); }
    double pdf(double x) const {
        return x < 0.0 ? 0.0 : a / sigma * std::exp((-a - 1.0) * std::log1p(x / sigma));
    }
    /// Unit-scale quantile x_p = (1-p)^(-1/a) - 1.
    double unit_quantile(double p) const { return std::expm1(-std::log1p(-p) / a); }
    double quantile(double p) const { return sigma * unit_quantile(p); }
    double quantile_density(double p) const {
        return sigma / (a * std::pow(1.0 - p, 1.0 / a + 1.0));
    }
    ExtendedReal mean() const {
        if (a <= 1.0) return ExtendedReal::infinity();
        return sigma / (a - 1.0);
    }
    /// sigma/(a-1) {p - a(1-p) x_p}, x_p the unit-scale quantile.
    double cumulative_income(double p) const {
        if (p >= 1.0) return mean().value();
        if (a == 1.0) return sigma * (-std::log1p(-p) - p);
        return sigma / (a - 1.0) * (p - a * (1.0 - p) * unit_quantile(p));
    }
    double upper_support() const { return kInf; }
};

struct Weibull {
    double beta;
    double sigma = 1.0;
    double cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / sigma, beta)); }
    double sf(double x) const { return x <= 0.0 ? 1.0 : std::exp(-std::pow(x / sigma, beta)); }
    double pdf(double x) const {
        if (x < 0.0) return 0.0;
        if (x == 0.0) return beta < 1.0 ? kInf : (beta == 1.0 ? 1.0 / sigma : 0.0);
        const double t = x / sigma;
        return beta / sigma * std::pow(t, beta - 1.0) * std::exp(-std::pow(t, beta));
    }
    double quantile(double p) const { return sigma * std::pow(-std::log1p(-p), 1.0 / beta); }
    double quantile_density(double p) const {
        return sigma * std::pow(-std::log1p(-p), 1.0 / beta - 1.0) / (beta * (1.0 - p));
    }
    ExtendedReal mean() const { return sigma * std::tgamma(1.0 + 1.0 / beta); }
    double cumulative_income(double p) const {
        const double m = mean().value();
        if (p >= 1.0) return m;
        const double h = -std::log1p(-p);  // (x_p/sigma)^beta
        return m * special::gamma_inc(1.0 + 1.0 / beta, h).first;
    }
    double upper_support() const { return kInf; }
};

struct Beta {
    double alpha;
    double beta;
    double cdf(double x) const {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return special::beta_inc(alpha, beta, x).first;
    }
    double sf(double x) const {
        if (x <= 0.0) return 1.0;
        if (x >= 1.0) return 0.0;
        return special::beta_inc(alpha, beta, x).second;
    }
    double pdf(double x) const {
        if (x < 0.0 || x > 1.0) return 0.0;
        return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) -
                        special::log_beta(alpha, beta));
    }
    double quantile(double p) const {
        if (p > 0.5) return 1.0 - lower_quantile(beta, alpha, 1.0 - p);
        return lower_quantile(alpha, beta, p);
    }
    double quantile_density(double p) const { return 1.0 / pdf(quantile(p)); }
    ExtendedReal mean() const { return alpha / (alpha + beta); }
    double cumulative_income(double p) const;
    double upper_support() const { return 1.0; }

private:
    static double lower_quantile(double a, double b, double p) {
        const double guess = std::min(0.999, std::exp((std::log(p) + std::log(a) + special::log_beta(a, b)) / a));
        auto eval = [a, b](double y) {
            const double x = std::exp(y);
            const double cx = -std::expm1(y);
            const auto [lower, upper] = special::beta_inc(a, b, x, cx);
            const double dens = std::exp((a - 1.0) * y + (b - 1.0) * std::log(cx) - special::log_beta(a, b));
            return detail::TailEval{lower, upper, dens};
        };
        return detail::invert_cdf_log(eval, p, guess, 1.0);
    }
};

}  // namespace families

/// An immutable parametric income distribution. Parameters are validated at
/// construction.
class DistributionModel {
public:
    using Variant = std::variant<families::Uniform, families::Exponential, families::ChiSquare,
                                 families::Lognormal, families::ParetoI, families::ParetoII,
                                 families::Weibull, families::Beta>;

    static DistributionModel uniform(double sigma = 1.0) {
        positive(sigma, "uniform: sigma");
        return DistributionModel(families::Uniform{sigma});
    }
    static DistributionModel exponential(double sigma = 1.0) {
        positive(sigma, "exponential: sigma");
        return DistributionModel(families::Exponential{sigma});
    }
    static DistributionModel chi_square(double k) {
        positive(k, "chisq: k");
        return DistributionModel(families::ChiSquare{k});
    }
    static DistributionModel lognormal() { return DistributionModel(families::Lognormal{}); }
    static DistributionModel pareto_I(double a, double sigma = 1.0) {
        positive(a, "paretoI: a");
        positive(sigma, "paretoI: sigma");
        return DistributionModel(families::ParetoI{a, sigma});
    }
    static DistributionModel pareto_II(double a, double sigma = 1.0) {
        positive(a, "paretoII: a");
        positive(sigma, "paretoII: sigma");
        return DistributionModel(families::ParetoII{a, sigma});
    }
    static DistributionModel weibull(double beta, double sigma = 1.0) {
        positive(beta, "weibull: beta");
        positive(sigma, "weibull: sigma");
        return DistributionModel(families::Weibull{beta, sigma});
    }
    static DistributionModel beta(double alpha, double beta) {
        positive(alpha, "beta: alpha");
        positive(beta, "beta: beta");
        return DistributionModel(families::Beta{alpha, beta});
    }

    Family family() const { return static_cast<Family>(v_.index()); }
    const Variant& variant() const { return v_; }

    double cdf(double x) const {
        return std::visit([x](const auto& d) { return d.cdf(x); }, v_);
    }
    double survival(double x) const {
        return std::visit([x](const auto& d) { return d.sf(x); }, v_);
    }
    double density(double x) const {
        return std::visit([x](const auto& d) { return d.pdf(x); }, v_);
    }

    /// Q(p) = inf{x : F(x) >= p}. Q(0) is the lower support endpoint and Q(1)
    /// is the upper endpoint (+inf for unbounded support).
    double quantile(double p) const {
        detail::require_closed_unit(p, "quantile");
        if (p == 0.0) return lower_support();
        if (p == 1.0) return upper_support();
        return std::visit([p](const auto& d) { return d.quantile(p); }, v_);
    }

    /// q(p) = dQ/dp = 1/f(Q(p)).
    double quantile_density(double p) const {
        detail::require_open_unit(p, "quantile_density");
        return std::visit([p](const auto& d) { return d.quantile_density(p); }, v_);
    }

    ExtendedReal mean() const {
        return std::visit([](const auto& d) { return d.mean(); }, v_);
    }

    /// C(F;p) = integral of y dF(y) over [0, x_p] = integral of Q over (0,p).
    /// p = 1 gives the mean and throws heavy_tail_error when it is infinite.
    double cumulative_income(double p) const {
        detail::require_closed_unit(p, "cumulative_income");
        if (p == 0.0) return 0.0;
        if (p == 1.0) return mean().value();
        return std::visit([p](const auto& d) { return d.cumulative_income(p); }, v_);
    }

    double lower_support() const {
        if (const auto* p1 = std::get_if<families::ParetoI>(&v_)) return p1->sigma;
        return 0.0;
    }
    double upper_support() const {
        return std::visit([](const auto& d) { return d.upper_support(); }, v_);
    }

    /// The same family with every scale parameter multiplied by c.
    DistributionModel scaled(double c) const {
        positive(c, "scale factor");
        return std::visit(
            [c](const auto& d) -> DistributionModel {
                using T = std::decay_t<decltype(d)>;
                if constexpr (requires { d.sigma; }) {
                    T copy = d;
                    copy.sigma *= c;
                    return DistributionModel(copy);
                } else {
                    throw domain_error("scaled: family has no scale parameter");
                }
            },
            v_);
    }

    /// Canonical spec string, e.g. "paretoII:a=2,sigma=1".
    std::string spec() const {
        using detail::format_number;
        return std::visit(
            [](const auto& d) -> std::string {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, families::Uniform>)
                    return "uniform:sigma=" + format_number(d.sigma);
                else if constexpr (std::is_same_v<T, families::Exponential>)
                    return "exponential:sigma=" + format_number(d.sigma);
                else if constexpr (std::is_same_v<T, families::ChiSquare>)
                    return "chisq:k=" + format_number(d.k);
                else if constexpr (std::is_same_v<T, families::Lognormal>)
                    return "lognormal";
                else if constexpr (std::is_same_v<T, families::ParetoI>)
                    return "paretoI:a=" + format_number(d.a) + ",sigma=" + format_number(d.sigma);
                else if constexpr (std::is_same_v<T, families::ParetoII>)
                    return "paretoII:a=" + format_number(d.a) + ",sigma=" + format_number(d.sigma);
                else if constexpr (std::is_same_v<T, families::Weibull>)
                    return "weibull:beta=" + format_number(d.beta) + ",sigma=" + format_number(d.sigma);
                else
                    return "beta:alpha=" + format_number(d.alpha) + ",beta=" + format_number(d.beta);
            },
            v_);
    }

    /// Short display label in the style of the coefficient tables.
    std::string label() const {
        using detail::format_number;
        return std::visit(
            [](const auto& d) -> std::string {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, families::Uniform>) return "Uniform";
                else if constexpr (std::is_same_v<T, families::Exponential>) return "Exponential";
                else if constexpr (std::is_same_v<T, families::ChiSquare>)
                    return "ChiSq(" + format_number(d.k) + ")";
                else if constexpr (std::is_same_v<T, families::Lognormal>) return "Lognormal";
                else if constexpr (std::is_same_v<T, families::ParetoI>)
                    return "ParetoI(" + format_number(d.a) + ")";
                else if constexpr (std::is_same_v<T, families::ParetoII>)
                    return "Pareto(" + format_number(d.a) + ")";
                else if constexpr (std::is_same_v<T, families::Weibull>)
                    return "Weibull(" + format_number(d.beta) + ")";
                else
                    return "Beta(" + format_number(d.alpha) + "," + format_number(d.beta) + ")";
            },
            v_);
    }

private:
    explicit DistributionModel(Variant v) : v_(std::move(v)) {}

    static void positive(double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw domain_error(std::string(what) + " must be finite and > 0");
    }

    Variant v_;
};

/// C(F;p) by adaptive quadrature of the quantile function over (0,p). Works
/// for any type with quantile(); independent of the closed forms above.
template <class Model>
double cumulative_income_quadrature(const Model& model, double p, const QuadratureSpec& spec = {1e-13, 1e-13, 4000}) {
    detail::require_closed_unit(p, "cumulative_income_quadrature");
    if (p == 0.0) return 0.0;
    auto r = integrate([&](double u) { return model.quantile(u); }, 0.0, p, spec);
    if (!r.converged && r.abs_error > 1e-9 * std::fabs(r.value))
        throw numerical_error("cumulative_income_quadrature: no convergence");
    return r.value;
}

inline double families::Beta::cumulative_income(double p) const {
    if (p >= 1.0) return mean().value();
    const auto self = *this;
    struct Q {
        families::Beta d;
        double quantile(double u) const { return d.quantile(u); }
    };
    return cumulative_income_quadrature(Q{self}, p);
}

/// Parses "family:key=value,..." (case-insensitive), e.g.
/// "paretoII:a=2,sigma=100000", "weibull:beta=0.5", "chisq:k=3".
inline DistributionModel parse_distribution(std::string_view text) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };

    const std::string whole(text);
    const auto colon = text.find(':');
    const std::string family = lower(trim(text.substr(0, colon)));
    std::map<std::string, double> kv;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw parse_error("distribution '" + whole + "': expected key=value, got '" + std::string(item) + "'");
            const std::string key = lower(trim(item.substr(0, eq)));
            const std::string_view val = trim(item.substr(eq + 1));
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
            if (ec != std::errc{} || ptr != val.data() + val.size())
                throw parse_error("distribution '" + whole + "': value for '" + key + "' is not a number");
            if (!kv.emplace(key, v).second)
                throw parse_error("distribution '" + whole + "': duplicate key '" + key + "'");
        }
    }

    auto take = [&](std::initializer_list<std::string_view> names, std::optional<double> fallback) -> double {
        for (auto n : names) {
            auto it = kv.find(std::string(n));
            if (it != kv.end()) {
                const double v = it->second;
                kv.erase(it);
                return v;
            }
        }
        if (!fallback)
            throw parse_error("distribution '" + whole + "': missing required parameter '" +
                              std::string(*names.begin()) + "'");
        return *fallback;
    };
    auto finish = [&](DistributionModel m) {
        if (!kv.empty())
            throw parse_error("distribution '" + whole + "': unknown parameter '" + kv.begin()->first + "'");
        return m;
    };

    if (family == "uniform") return finish(DistributionModel::uniform(take({"sigma"}, 1.0)));
    if (family == "exponential" || family == "exp")
        return finish(DistributionModel::exponential(take({"sigma"}, 1.0)));
    if (family == "chisq" || family == "chisquare" || family == "chi2")
        return finish(DistributionModel::chi_square(take({"k", "df"}, std::nullopt)));
    if (family == "lognormal" || family == "lnorm") return finish(DistributionModel::lognormal());
    if (family == "paretoi" || family == "pareto1") {
        const double a = take({"a"}, std::nullopt);
        return finish(DistributionModel::pareto_I(a, take({"sigma"}, 1.0)));
    }
    if (family == "paretoii" || family == "pareto2") {
        const double a = take({"a"}, std::nullopt);
        return finish(DistributionModel::pareto_II(a, take({"sigma"}, 1.0)));
    }
    if (family == "weibull") {
        const double b = take({"beta"}, std::nullopt);
        return finish(DistributionModel::weibull(b, take({"sigma"}, 1.0)));
    }
    if (family == "beta") {
        const double a = take({"alpha"}, std::nullopt);
        return finish(DistributionModel::beta(a, take({"beta"}, std::nullopt)));
    }
    throw parse_error("unknown distribution family '" + family +
                      "' (expected uniform, exponential, chisq, lognormal, paretoI, paretoII, weibull, beta)");
}

/// n independent draws by inverse transform, in draw order.
template <class Model>
std::vector<double> draw(const Model& model, std::size_t n, RandomStream& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = model.quantile(rng.uniform());
    return out;
}

/// n i.i.d. draws, sorted ascending. Requires n >= 2.
template <class Model>
Sample sample(const Model& model, std::size_t n, RandomStream& rng) {
    return Sample(draw(model, n, rng));
}

/// The fourteen models of the coefficient comparison table, in table order.
inline std::vector<DistributionModel> table_models() {
    return {DistributionModel::uniform(),      DistributionModel::chi_square(0.5),
            DistributionModel::chi_square(1),  DistributionModel::chi_square(3),
            DistributionModel::chi_square(5),  DistributionModel::lognormal(),
            DistributionModel::pareto_II(0.5), DistributionModel::pareto_II(1),
            DistributionModel::pareto_II(1.5), DistributionModel::pareto_II(2),
            DistributionModel::weibull(0.25),  DistributionModel::weibull(0.5),
            DistributionModel::weibull(1),     DistributionModel::weibull(4)};
}

}  // namespace qineq
