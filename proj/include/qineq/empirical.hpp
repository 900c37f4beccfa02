#pragma once

// Distribution-free estimators: Hyndman-Fan type 8 sample quantiles, the
// empirical Lorenz curve, plug-in quantile curves and the grid estimator of
// the coefficients.

#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qineq/curve_table.hpp"
#include "qineq/errors.hpp"
#include "qineq/sample.hpp"

namespace qineq {

/// Midpoint grid p_j = (j - 1/2)/J, j = 1..J.
class Grid {
public:
    explicit Grid(std::size_t J = 1000) : J_(J) {
        if (J < 2) throw domain_error("Grid: J must be at least 2, got " + std::to_string(J));
    }
    std::size_t size() const { return J_; }
    /// 1-based grid point.
    double operator()(std::size_t j) const { return (static_cast<double>(j) - 0.5) / static_cast<double>(J_); }
    std::vector<double> points() const {
        std::vector<double> out(J_);
        for (std::size_t j = 1; j <= J_; ++j) out[j - 1] = (*this)(j);
        return out;
    }

private:
    std::size_t J_;
};

/// Type 8 sample quantile: linear interpolation between (p_[k], x_(k)) with
/// p_[k] = (k - 1/3)/(n + 1/3), clamped to the extreme order statistics.
inline double hf8_quantile(const Sample& s, double p) {
    detail::require_open_unit(p, "hf8_quantile");
    const double n = static_cast<double>(s.size());
    const double h = (n + 1.0 / 3.0) * p + 1.0 / 3.0;
    if (h < 1.0) return s[0];
    if (h >= n) return s[s.size() - 1];
    const double k = std::floor(h);
    const auto i = static_cast<std::size_t>(k) - 1;
    const double lo = s[i];
    return lo + (h - k) * (s[i + 1] - lo);
}

/// Points (i/n, sum_{j<=i} x_(j) / sum x) for i = 0..n.
inline CurveTable empirical_lorenz(const Sample& s) {
    const std::size_t n = s.size();
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) cum[i + 1] = cum[i] + s[i];
    const double total = cum[n];
    if (!(total > 0.0)) throw zero_denominator_error("empirical_lorenz: total income is zero");
    CurveTable t{0, {}};
    t.points.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        t.points.push_back({static_cast<double>(i) / static_cast<double>(n), cum[i] / total});
    return t;
}

namespace detail {

inline double curve_from_quantiles(int index, double p, double lower, double median, double upper) {
    double denom = 0.0;
    switch (index) {
        case 1: denom = median; break;
        case 2: denom = upper; break;
        case 3: denom = 0.5 * (lower + upper); break;
        default: throw domain_error("curve index must be 1, 2 or 3");
    }
    if (!(denom > 0.0)) throw zero_denominator_error("curve denominator is zero");
    return p * lower / denom;
}

}  // namespace detail

/// Plug-in estimate of L_i(p), i in {1,2,3}, from type 8 quantiles.
inline double empirical_curve(const Sample& s, int index, double p) {
    detail::require_open_unit(p, "empirical_curve");
    const double lower = hf8_quantile(s, p / 2.0);
    const double median = index == 1 ? hf8_quantile(s, 0.5) : 0.0;
    const double upper = index == 1 ? 0.0 : hf8_quantile(s, 1.0 - p / 2.0);
    return detail::curve_from_quantiles(index, p, lower, median, upper);
}

/// Estimates of G_0..G_3 in one pass. G_0 is the exact area of the empirical
/// Lorenz polygon, 1 - (1/n) sum (L_{k-1} + L_k); G_1..G_3 use the grid rule
/// (2/J) sum_j {p_j - L_i(p_j)}.
inline std::array<double, 4> gini_hat_all(const Sample& s, const Grid& grid = Grid{}) {
    std::array<double, 4> out{};
    const std::size_t n = s.size();

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += s[i];
    if (!(total > 0.0)) throw zero_denominator_error("gini_hat: total income is zero");
    double cum = 0.0, area = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cum += s[i];
        const double cur = cum / total;
        area += prev + cur;
        prev = cur;
    }
    out[0] = 1.0 - area / static_cast<double>(n);

    const double median = hf8_quantile(s, 0.5);
    std::array<double, 3> acc{};
    const std::size_t J = grid.size();
    for (std::size_t j = 1; j <= J; ++j) {
        const double p = grid(j);
        const double lower = hf8_quantile(s, p / 2.0);
        const double upper = hf8_quantile(s, 1.0 - p / 2.0);
        for (int i = 1; i <= 3; ++i)
            acc[i - 1] += p - detail::curve_from_quantiles(i, p, lower, median, upper);
    }
    for (int i = 1; i <= 3; ++i) out[i] = 2.0 * acc[i - 1] / static_cast<double>(J);
    return out;
}

/// Single-index version of gini_hat_all.
inline double gini_hat(const Sample& s, int index, const Grid& grid = Grid{}) {
    if (index < 0 || index > 3) throw domain_error("gini_hat: index must be 0..3");
    if (index == 0) return gini_hat_all(s, Grid{2})[0];
    const std::size_t J = grid.size();
    double acc = 0.0;
    const double median = index == 1 ? hf8_quantile(s, 0.5) : 0.0;
    for (std::size_t j = 1; j <= J; ++j) {
        const double p = grid(j);
        const double lower = hf8_quantile(s, p / 2.0);
        const double upper = index == 1 ? 0.0 : hf8_quantile(s, 1.0 - p / 2.0);
        acc += p - detail::curve_from_quantiles(index, p, lower, median, upper);
    }
    return 2.0 * acc / static_cast<double>(J);
}

/// Reads one income per line. Blank lines and '#' comments are skipped; a
/// single non-numeric first line is taken as a header. A line may hold
/// several comma-separated fields, in which case the first is used.
inline Sample read_incomes(std::istream& in, const std::string& source = "<input>") {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (const auto comma = line.find(','); comma != std::string::npos) line.erase(comma);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string field = line.substr(first, last - first + 1);

        std::size_t used = 0;
        double v = 0.0;
        bool numeric = true;
        try {
            v = std::stod(field, &used);
        } catch (const std::exception&) {
            numeric = false;
        }
        if (numeric && used != field.size()) numeric = false;
        if (!numeric) {
            if (!seen_data_line) {
                seen_data_line = true;  // header
                continue;
            }
            throw parse_error(source + ":" + std::to_string(line_no) + ": not a number: '" + field + "'");
        }
        seen_data_line = true;
        if (!std::isfinite(v))
            throw parse_error(source + ":" + std::to_string(line_no) + ": income is not finite");
        if (v < 0.0)
            throw parse_error(source + ":" + std::to_string(line_no) + ": negative income " + field);
        values.push_back(v);
    }
    if (values.size() < 2)
        throw parse_error(source + ": need at least 2 incomes, found " + std::to_string(values.size()));
    return Sample(std::move(values));
}

inline Sample read_incomes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open income file '" + path + "'");
    return read_incomes(in, path);
}

}  // namespace qineq
