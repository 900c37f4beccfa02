#pragma once

// Monte Carlo studies of the estimators: sqrt(n) * RMSE, bias, and coverage
// and width of the intervals G_hat +- 1.96 sigma/sqrt(n).

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qineq/coefficients.hpp"
#include "qineq/distributions.hpp"
#include "qineq/empirical.hpp"
#include "qineq/parallel.hpp"
#include "qineq/random.hpp"

namespace qineq {

inline constexpr double kZ95 = 1.96;

struct StudyConfig {
    std::vector<int> indices{1, 2, 3};
    std::vector<std::size_t> ns{25, 100};
    std::size_t reps = 1000;
    std::size_t J = 1000;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
};

struct StudyCell {
    int index;
    std::size_t n;
    double true_value;     // G_i(J), or 1 for an extended G_0
    double mean_estimate;
    double bias;
    double root_n_se;      // sqrt(n) * sqrt(mean squared error)
    double coverage;       // NaN unless sigma was supplied
    double mean_width;     // NaN unless sigma was supplied
};

struct StudyResult {
    std::string model;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<StudyCell> cells;

    const StudyCell& cell(int index, std::size_t n) const {
        for (const auto& c : cells)
            if (c.index == index && c.n == n) return c;
        throw domain_error("StudyResult: no cell for index " + std::to_string(index) + ", n = " + std::to_string(n));
    }

    void write_csv(std::ostream& os) const {
        const auto old = os.precision(10);
        os << "model,index,n,reps,true_value,mean_estimate,bias,root_n_se,coverage,mean_width\n";
        for (const auto& c : cells)
            os << model << ',' << c.index << ',' << c.n << ',' << reps << ',' << c.true_value << ','
               << c.mean_estimate << ',' << c.bias << ',' << c.root_n_se << ',' << c.coverage << ','
               << c.mean_width << '\n';
        os.precision(old);
    }
};

namespace detail {

inline void validate(const StudyConfig& cfg) {
    if (cfg.reps < 2) throw domain_error("study: need at least 2 replicates");
    if (cfg.ns.empty() || cfg.indices.empty()) throw domain_error("study: empty n or index list");
    for (auto n : cfg.ns)
        if (n < 2) throw domain_error("study: every n must be >= 2");
    for (int i : cfg.indices)
        if (i < 0 || i > 3) throw domain_error("study: index must be 0..3");
    if (cfg.J < 2) throw domain_error("study: J must be >= 2");
}

template <class M>
std::array<double, 4> true_coefficients(const M& model, const Grid& grid, bool need_g0) {
    std::array<double, 4> g{};
    const auto q = coefficients(model, grid);
    std::copy(q.begin(), q.end(), g.begin() + 1);
    if (need_g0) {
        if constexpr (IncomeModel<M>)
            g[0] = gini0(model, grid).value;
        else
            throw domain_error("study: index 0 needs a model with cumulative income");
    }
    return g;
}

template <class M>
std::string model_name(const M& model) {
    if constexpr (requires { model.label(); })
        return model.label();
    else
        return "model";
}

// Replicate r at sample size n draws from substream (seed, n, r), so results
// do not depend on the worker count or scheduling.
template <QuantileModel M>
StudyResult run_study(const M& model, const StudyConfig& cfg, const std::optional<std::array<double, 4>>& sigma) {
    validate(cfg);
    const Grid grid(cfg.J);
    bool need_g0 = false;
    for (int i : cfg.indices) need_g0 = need_g0 || i == 0;
    const auto truth = true_coefficients(model, grid, need_g0);

    StudyResult out;
    out.model = model_name(model);
    out.reps = cfg.reps;
    out.seed = cfg.seed;
    for (std::size_t n : cfg.ns) {
        std::vector<std::array<double, 4>> est(cfg.reps);
        parallel_for(cfg.reps, cfg.workers, [&](std::size_t r) {
            RandomStream rng = RandomStream::substream(cfg.seed, {static_cast<std::uint64_t>(n), r});
            est[r] = gini_hat_all(sample(model, n, rng), grid);
        });
        const double root_n = std::sqrt(static_cast<double>(n));
        for (int i : cfg.indices) {
            std::vector<double> x(cfg.reps), sq(cfg.reps), hit(cfg.reps);
            const double half_width = sigma ? kZ95 * (*sigma)[i] / root_n : 0.0;
            for (std::size_t r = 0; r < cfg.reps; ++r) {
                x[r] = est[r][i];
                const double e = est[r][i] - truth[i];
                sq[r] = e * e;
                hit[r] = std::fabs(e) <= half_width ? 1.0 : 0.0;
            }
            const double reps = static_cast<double>(cfg.reps);
            const double mean = pairwise_sum(x) / reps;
            const double mse = pairwise_sum(sq) / reps;
            StudyCell c{i, n, truth[i], mean, mean - truth[i], root_n * std::sqrt(mse),
                        std::nan(""), std::nan("")};
            if (sigma) {
                c.coverage = pairwise_sum(hit) / reps;
                c.mean_width = 2.0 * half_width;
            }
            out.cells.push_back(c);
        }
    }
    return out;
}

}  // namespace detail

/// sqrt(n) * RMSE of G_hat_i about G_i(J) per (index, n).
template <QuantileModel M>
StudyResult se_study(const M& model, const StudyConfig& cfg) {
    return detail::run_study(model, cfg, std::nullopt);
}

/// Coverage and width of G_hat_i +- 1.96 sigma_i/sqrt(n); sigma is indexed
/// by coefficient index (entry 0 is used only when index 0 is studied).
template <QuantileModel M>
StudyResult ci_study(const M& model, const StudyConfig& cfg, const std::array<double, 4>& sigma) {
    for (int i : cfg.indices)
        if (!(sigma[i] > 0.0)) throw domain_error("ci_study: sigma must be positive for every studied index");
    return detail::run_study(model, cfg, sigma);
}

/// Smallest n with the rule-of-thumb SE at most c: (0.55/c)^2 for G_1 and
/// (0.43/c)^2 for G_2, G_3.
inline std::size_t sample_size_for_se(double c, int index) {
    if (!(c > 0.0) || !std::isfinite(c)) throw domain_error("sample_size_for_se: c must be positive");
    double k = 0.0;
    switch (index) {
        case 1: k = 0.55; break;
        case 2:
        case 3: k = 0.43; break;
        default: throw domain_error("sample_size_for_se: index must be 1, 2 or 3");
    }
    const double n = (k / c) * (k / c);
    // (0.55/0.01)^2 evaluates to 3025.0000000000005; strip that rounding noise.
    return static_cast<std::size_t>(std::max(1.0, std::ceil(n - 1e-9 * n)));
}

}  // namespace qineq
