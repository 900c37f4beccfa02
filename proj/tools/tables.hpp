#pragma once

// Reproduction targets: the coefficient, standard-error, interval and
// catalogue tables, and the data behind each figure.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qineq/qineq.hpp"
#include "report.hpp"

namespace qineq::cli {

struct TableOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> reps;
    unsigned workers = default_workers();
    std::size_t J = 1000;
};

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

inline Report table1(const TableOptions& opt) {
    const Grid grid(opt.J);
    std::vector<CoefficientReport> reps;
    for (const auto& m : table_models()) reps.push_back(coefficient_report(m, grid));
    const auto ranks = rank_table(reps, 3);
    Report r{{"model", "G0", "R0", "G1", "R1", "G2", "R2", "G3", "R3", "G0_extended"}, {}};
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto& c = reps[k];
        r.add({c.label, c.G[0], ranks.ranks[k][0], c.G[1], ranks.ranks[k][1], c.G[2], ranks.ranks[k][2], c.G[3],
               ranks.ranks[k][3], c.g0_extended});
    }
    return r;
}

inline Report spearman_summary(const TableOptions& opt) {
    const Grid grid(opt.J);
    std::vector<CoefficientReport> reps;
    for (const auto& m : table_models()) reps.push_back(coefficient_report(m, grid));
    const auto t = rank_table(reps, 3);
    Report r{{"pair", "spearman"}, {}};
    for (int i = 1; i <= 3; ++i) r.add({"G0~G" + std::to_string(i), t.spearman_g0[i - 1]});
    return r;
}

inline std::uint64_t require_seed(const TableOptions& opt, const std::string& target) {
    if (!opt.seed) throw parse_error("tables " + target + " is stochastic: --seed is required");
    return *opt.seed;
}

inline Report table2(const TableOptions& opt) {
    StudyConfig cfg;
    cfg.indices = {1, 2, 3};
    cfg.ns = {25, 100};
    cfg.reps = opt.reps.value_or(4000);
    cfg.J = opt.J;
    cfg.seed = require_seed(opt, "table2");
    cfg.workers = opt.workers;
    Report r{{"model", "index", "se_n25", "se_n100", "asymptotic"}, {}};
    for (const auto& m : table_models()) {
        const auto study = se_study(m, cfg);
        const auto ase = asymptotic_se_all(m, 10000, {1e-13, 1e-11, 200}, opt.workers);
        for (int i = 1; i <= 3; ++i)
            r.add({m.label(), std::int64_t{i}, study.cell(i, 25).root_n_se, study.cell(i, 100).root_n_se,
                   ase.sigma[i - 1]});
    }
    return r;
}

/// Interval half-widths use these sigma_i (G_1, G_2, G_3) for the two models.
inline const std::map<std::string, std::array<double, 4>>& reference_sigmas() {
    static const std::map<std::string, std::array<double, 4>> s{
        {"Lognormal", {0.0, 0.417, 0.351, 0.322}},
        {"Pareto(2)", {0.0, 0.485, 0.381, 0.379}},
    };
    return s;
}

inline Report table3(const TableOptions& opt) {
    StudyConfig cfg;
    cfg.indices = {1, 2, 3};
    cfg.ns = {25, 100, 400};
    cfg.reps = opt.reps.value_or(10000);
    cfg.J = opt.J;
    cfg.seed = require_seed(opt, "table3");
    cfg.workers = opt.workers;
    Report r{{"model", "index", "n", "coverage", "width"}, {}};
    for (const auto& m : {DistributionModel::lognormal(), DistributionModel::pareto_II(2)}) {
        const auto study = ci_study(m, cfg, reference_sigmas().at(m.label()));
        for (const auto& c : study.cells) r.add({m.label(), std::int64_t{c.index}, as_int(c.n), c.coverage, c.mean_width});
    }
    return r;
}

inline Report table4(const TableOptions&) {
    Report r{{"model", "p", "quantile", "quantile_density", "survival"}, {}};
    const std::vector<DistributionModel> models{DistributionModel::exponential(), DistributionModel::lognormal(),
                                                DistributionModel::pareto_I(2), DistributionModel::pareto_II(2),
                                                DistributionModel::weibull(0.5), DistributionModel::chi_square(3),
                                                DistributionModel::beta(0.1, 0.05), DistributionModel::uniform()};
    for (const auto& m : models)
        for (int k = 1; k <= 9; ++k) {
            const double p = 0.1 * k;
            const double x = m.quantile(p);
            r.add({m.label(), p, x, m.quantile_density(p), m.survival(x)});
        }
    return r;
}

inline void add_curves(Report& r, const DistributionModel& m, const std::string& label, std::size_t points) {
    const auto grid = Grid(points);
    std::vector<CurveTable> tabs;
    for (int i = 0; i <= 3; ++i) tabs.push_back(curve_table(m, i, grid, true).with_endpoints());
    for (std::size_t k = 0; k < tabs[0].size(); ++k)
        r.add({label, tabs[0].points[k].p, tabs[0].points[k].value, tabs[1].points[k].value, tabs[2].points[k].value,
               tabs[3].points[k].value});
}

inline Report fig1(const TableOptions&) {
    Report r{{"model", "p", "L0", "L1", "L2", "L3"}, {}};
    for (const auto& m : {DistributionModel::uniform(), DistributionModel::exponential(), DistributionModel::lognormal(),
                          DistributionModel::chi_square(1), DistributionModel::weibull(0.5), DistributionModel::weibull(4)})
        add_curves(r, m, m.label(), 100);
    return r;
}

inline Report fig2(const TableOptions&) {
    Report r{{"model", "p", "L0", "L1", "L2", "L3"}, {}};
    for (double a : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        const auto m = DistributionModel::pareto_II(a);
        add_curves(r, m, m.label(), 100);
    }
    return r;
}

inline Report fig3(const TableOptions& opt) {
    Report r{{"model", "p0", "dG0", "dG1", "dG2", "dG3", "rG0", "rG1", "rG2", "rG3"}, {}};
    for (double a : {1.1, 2.0, 3.0}) {
        const auto m = DistributionModel::pareto_II(a);
        for (const auto& e : transfer_effect(m, default_p0_grid(), Grid(opt.J)))
            r.add({m.label(), e.p0, e.absolute[0], e.absolute[1], e.absolute[2], e.absolute[3], e.relative[0],
                   e.relative[1], e.relative[2], e.relative[3]});
    }
    return r;
}

inline Report fig4(const TableOptions& opt) {
    StudyConfig cfg;
    cfg.indices = {0, 1, 2, 3};
    cfg.ns = {25, 50, 100, 200, 400, 800, 1600};
    cfg.reps = opt.reps.value_or(1000);
    cfg.J = opt.J;
    cfg.seed = require_seed(opt, "fig4");
    cfg.workers = opt.workers;
    Report r{{"model", "index", "n", "ln_n", "root_n_se"}, {}};
    for (const auto& m : {DistributionModel::uniform(), DistributionModel::lognormal(), DistributionModel::chi_square(1),
                          DistributionModel::pareto_II(2), DistributionModel::weibull(0.5)}) {
        for (const auto& c : se_study(m, cfg).cells)
            r.add({m.label(), std::int64_t{c.index}, as_int(c.n), std::log(static_cast<double>(c.n)), c.root_n_se});
    }
    return r;
}

inline Report fig5(const TableOptions& opt) {
    StudyConfig cfg;
    cfg.indices = {1, 2, 3};
    cfg.ns = {100};
    cfg.reps = opt.reps.value_or(1000);
    cfg.J = opt.J;
    cfg.seed = require_seed(opt, "fig5");
    cfg.workers = opt.workers;
    Report r{{"a", "index", "n", "root_n_se"}, {}};
    for (int k = 1; k <= 20; ++k) {
        const double a = 0.25 * k;
        for (const auto& c : se_study(DistributionModel::pareto_II(a), cfg).cells)
            r.add({a, std::int64_t{c.index}, as_int(c.n), c.root_n_se});
    }
    return r;
}

inline std::vector<double> z_grid(const DistributionModel& m, std::size_t points) {
    std::vector<double> z;
    for (std::size_t k = 1; k <= points; ++k) z.push_back(m.quantile(static_cast<double>(k) / static_cast<double>(points + 1)));
    return z;
}

inline Report fig6(const TableOptions&) {
    const auto m = DistributionModel::pareto_II(1);
    Report r{{"p", "z", "IF_L1", "IF_L2", "IF_L3"}, {}};
    for (double p : {0.1, 0.25, 0.5, 0.9})
        for (double z : z_grid(m, 199))
            r.add({p, z, if_curve(m, 1, p, z), if_curve(m, 2, p, z), if_curve(m, 3, p, z)});
    return r;
}

inline Report fig7(const TableOptions&) {
    const auto m = DistributionModel::pareto_II(1);
    Report r{{"z", "p", "IF_L1", "IF_L2", "IF_L3"}, {}};
    const Grid grid(200);
    for (double z : {0.25, 0.5, 1.1, 1.5})
        for (std::size_t j = 1; j <= grid.size(); ++j) {
            const double p = grid(j);
            r.add({z, p, if_curve(m, 1, p, z), if_curve(m, 2, p, z), if_curve(m, 3, p, z)});
        }
    return r;
}

inline Report fig8(const TableOptions&) {
    Report r{{"model", "z", "IF_G1", "IF_G2", "IF_G3"}, {}};
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const auto m = DistributionModel::pareto_II(a);
        for (double z : z_grid(m, 99))
            r.add({m.label(), z, if_coefficient(m, 1, z), if_coefficient(m, 2, z), if_coefficient(m, 3, z)});
    }
    return r;
}

inline Report fig9(const TableOptions&) {
    const auto m = DistributionModel::beta(0.1, 0.05);
    Report r{{"t", "density", "L0", "L1", "L2", "L3"}, {}};
    const Grid grid(200);
    for (std::size_t j = 1; j <= grid.size(); ++j) {
        const double t = grid(j);
        r.add({t, m.density(t), lorenz_value(m, t), curve_value(m, 1, t), curve_value(m, 2, t), curve_value(m, 3, t)});
    }
    return r;
}

using TableFn = std::function<Report(const TableOptions&)>;

inline const std::vector<std::pair<std::string, TableFn>>& table_targets() {
    static const std::vector<std::pair<std::string, TableFn>> t{
        {"table1", table1}, {"spearman", spearman_summary}, {"table2", table2}, {"table3", table3},
        {"table4", table4}, {"fig1", fig1}, {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4}, {"fig5", fig5},
        {"fig6", fig6}, {"fig7", fig7}, {"fig8", fig8}, {"fig9", fig9}};
    return t;
}

inline bool is_stochastic(const std::string& target) {
    return target == "table2" || target == "table3" || target == "fig4" || target == "fig5";
}

}  // namespace qineq::cli
