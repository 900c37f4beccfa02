#pragma once

// Population coefficients G_0..G_3 on the midpoint grid, the expectation
// form of G_1..G_3 as a Monte Carlo oracle, and rank comparisons.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "qineq/curves.hpp"
#include "qineq/distributions.hpp"
#include "qineq/empirical.hpp"
#include "qineq/random.hpp"

namespace qineq {

/// G_1, G_2, G_3 by the grid rule (2/J) sum_j {p_j - L_i(p_j)}.
template <QuantileModel M>
std::array<double, 3> coefficients(const M& model, const Grid& grid = Grid{}) {
    std::array<double, 3> acc{};
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double p = grid(j);
        const auto L = curve_values(model, p);
        for (int i = 0; i < 3; ++i) acc[i] += p - L[i];
    }
    const double J = static_cast<double>(grid.size());
    for (double& a : acc) a = 2.0 * a / J;
    return acc;
}

template <QuantileModel M>
double coefficient(const M& model, int index, const Grid& grid = Grid{}) {
    if (index < 1 || index > 3) throw domain_error("coefficient: index must be 1, 2 or 3");
    double acc = 0.0;
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double p = grid(j);
        acc += p - curve_value(model, index, p);
    }
    return 2.0 * acc / static_cast<double>(grid.size());
}

struct Gini0 {
    double value;
    bool extended;  // mean is infinite; value is the conventional 1
};

/// G_0 = (2/J) sum_j {p_j - L_0(p_j)}; 1 (flagged extended) for infinite means.
template <IncomeModel M>
Gini0 gini0(const M& model, const Grid& grid = Grid{}) {
    const ExtendedReal mu = model.mean();
    if (mu.is_infinite()) return {1.0, true};
    double acc = 0.0;
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double p = grid(j);
        acc += p - model.cumulative_income(p) / mu.value();
    }
    return {2.0 * acc / static_cast<double>(grid.size()), false};
}

struct MonteCarloEstimate {
    double mean;
    double standard_error;
    std::size_t reps;
};

/// Expectation form of G_1..G_3. With Y_1, Y_2 drawn from the lower half of F,
/// V = max(Y_1, Y_2), W = Q(1 - F(V)) and m the median:
/// G_1 = E[(m-V)/m], G_2 = E[(W-V)/W], G_3 = E[(W-V)/(V+W)].
template <QuantileModel M>
std::array<MonteCarloEstimate, 3> prop1_oracle_all(const M& model, std::size_t reps, RandomStream& rng) {
    if (reps < 2) throw domain_error("prop1_oracle: need at least 2 replicates");
    const double m = model.quantile(0.5);
    std::array<double, 3> sum{}, sum_sq{};
    for (std::size_t r = 0; r < reps; ++r) {
        const double u = std::max(rng.uniform(), rng.uniform()) / 2.0;  // F(V)
        const double v = model.quantile(u);
        const double w = model.quantile(1.0 - u);
        const std::array<double, 3> t{(m - v) / m, (w - v) / w, (w - v) / (v + w)};
        for (int i = 0; i < 3; ++i) {
            sum[i] += t[i];
            sum_sq[i] += t[i] * t[i];
        }
    }
    std::array<MonteCarloEstimate, 3> out{};
    const double n = static_cast<double>(reps);
    for (int i = 0; i < 3; ++i) {
        const double mean = sum[i] / n;
        const double var = std::max(0.0, (sum_sq[i] - n * mean * mean) / (n - 1.0));
        out[i] = {mean, std::sqrt(var / n), reps};
    }
    return out;
}

template <QuantileModel M>
MonteCarloEstimate prop1_oracle(const M& model, int index, std::size_t reps, RandomStream& rng) {
    if (index < 1 || index > 3) throw domain_error("prop1_oracle: index must be 1, 2 or 3");
    return prop1_oracle_all(model, reps, rng)[index - 1];
}

/// Ranks with ties sharing the average rank; rank 1 is the smallest value.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

/// Pearson correlation of the average ranks.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw domain_error("spearman: need two equal-length lists, n >= 2");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw domain_error("spearman: constant list");
    return sxy / std::sqrt(sxx * syy);
}

struct CoefficientReport {
    std::string label;
    std::string spec;
    std::array<double, 4> G{};
    bool g0_extended = false;
    std::size_t J = 1000;
};

inline CoefficientReport coefficient_report(const DistributionModel& model, const Grid& grid = Grid{}) {
    CoefficientReport r;
    r.label = model.label();
    r.spec = model.spec();
    r.J = grid.size();
    const auto g0 = gini0(model, grid);
    r.G[0] = g0.value;
    r.g0_extended = g0.extended;
    const auto g = coefficients(model, grid);
    std::copy(g.begin(), g.end(), r.G.begin() + 1);
    return r;
}

struct RankTable {
    std::vector<std::array<double, 4>> ranks;  // per model, per index
    std::array<double, 3> spearman_g0{};       // G_0 against G_1, G_2, G_3
};

/// Ranks every column of a models x {G_0..G_3} block and correlates G_0's
/// ranking with each quantile coefficient. With decimals >= 0 the values are
/// rounded first, so that coefficients equal to the displayed precision tie.
inline RankTable rank_table(const std::vector<std::array<double, 4>>& values, int decimals = -1) {
    if (values.size() < 2) throw domain_error("rank_table: need at least 2 models");
    const double scale = decimals >= 0 ? std::pow(10.0, decimals) : 0.0;
    RankTable t;
    t.ranks.resize(values.size());
    std::array<std::vector<double>, 4> cols;
    for (int i = 0; i < 4; ++i) {
        for (const auto& row : values)
            cols[i].push_back(decimals >= 0 ? std::round(row[i] * scale) / scale : row[i]);
        const auto r = average_ranks(cols[i]);
        for (std::size_t k = 0; k < values.size(); ++k) t.ranks[k][i] = r[k];
    }
    auto constant = [](const std::vector<double>& v) { return std::equal(v.begin() + 1, v.end(), v.begin()); };
    for (int i = 1; i <= 3; ++i)
        t.spearman_g0[i - 1] = constant(cols[0]) || constant(cols[i]) ? std::nan("") : spearman(cols[0], cols[i]);
    return t;
}

inline RankTable rank_table(const std::vector<CoefficientReport>& reports, int decimals = -1) {
    std::vector<std::array<double, 4>> values;
    for (const auto& r : reports) values.push_back(r.G);
    return rank_table(values, decimals);
}

/// CSV in the coefficient-table column order: model, G_0, R_0, ..., G_3, R_3.
/// Ranks are taken on values rounded to rank_decimals.
inline void write_coefficient_csv(std::ostream& os, const std::vector<CoefficientReport>& reports,
                                  int rank_decimals = 3) {
    const RankTable ranks = reports.size() >= 2 ? rank_table(reports, rank_decimals) : RankTable{};
    const auto old = os.precision(10);
    os << "model,spec,J,G0,R0,G1,R1,G2,R2,G3,R3,G0_extended\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        os << r.label << ",\"" << r.spec << "\"," << r.J;
        for (int i = 0; i < 4; ++i) {
            os << ',' << r.G[i] << ',';
            if (!ranks.ranks.empty()) os << ranks.ranks[k][i];
        }
        os << ',' << (r.g0_extended ? "true" : "false") << '\n';
    }
    os.precision(old);
}

}  // namespace qineq
