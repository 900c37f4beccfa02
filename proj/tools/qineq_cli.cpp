// qineq: command-line front end for the quantile inequality library.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qineq/qineq.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace {

using namespace qineq;
using qineq::cli::Cell;
using qineq::cli::Report;

std::vector<int> parse_indices(const std::string& text, int lowest) {
    if (text == "all") {
        std::vector<int> out;
        for (int i = lowest; i <= 3; ++i) out.push_back(i);
        return out;
    }
    if (text.size() == 1 && text[0] >= '0' && text[0] <= '3') {
        const int i = text[0] - '0';
        if (i < lowest) throw parse_error("--index " + text + " is not available here (use " + std::to_string(lowest) + "..3)");
        return {i};
    }
    throw parse_error("--index must be 0, 1, 2, 3 or all, got '" + text + "'");
}

struct Common {
    std::string dist;
    std::string index = "all";
    std::size_t grid = 1000;
    std::string out;
    bool extend = false;
    unsigned workers = default_workers();
};

void add_dist(CLI::App* sub, Common& c, bool required = true) {
    auto* o = sub->add_option("--dist", c.dist,
                              "Distribution spec family:key=value,... e.g. paretoII:a=2,sigma=100000, "
                              "weibull:beta=0.5, chisq:k=3, beta:alpha=0.1,beta=0.05, lognormal, uniform");
    if (required) o->required();
}

void add_grid(CLI::App* sub, Common& c) {
    sub->add_option("--grid", c.grid, "Grid size J for p_j = (j - 1/2)/J")->capture_default_str()->check(CLI::Range(2, 100000000));
}

void add_out(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "Write results to a .csv or .json file instead of stdout");
}

void add_workers(CLI::App* sub, Common& c) {
    sub->add_option("--workers", c.workers, "Worker threads (results do not depend on this)")->capture_default_str()->check(CLI::PositiveNumber);
}

Report cmd_curve(const Common& c, std::optional<double> p) {
    const auto model = parse_distribution(c.dist);
    const auto idx = parse_indices(c.index, 0);
    if (p) {
        Report r{{"index", "p", "value"}, {}};
        for (int i : idx)
            r.add({std::int64_t{i}, *p, i == 0 ? lorenz_value(model, *p, c.extend) : curve_value(model, i, *p)});
        return r;
    }
    std::vector<std::string> cols{"p"};
    for (int i : idx) cols.push_back("L" + std::to_string(i));
    Report r{cols, {}};
    std::vector<CurveTable> tabs;
    for (int i : idx) tabs.push_back(curve_table(model, i, Grid(c.grid), c.extend).with_endpoints());
    for (std::size_t k = 0; k < tabs[0].size(); ++k) {
        std::vector<Cell> row{tabs[0].points[k].p};
        for (const auto& t : tabs) row.emplace_back(t.points[k].value);
        r.add(std::move(row));
    }
    return r;
}

Report cmd_gini(const Common& c, std::size_t oracle_reps, std::optional<std::uint64_t> seed) {
    const auto model = parse_distribution(c.dist);
    const auto idx = parse_indices(c.index, 0);
    const Grid grid(c.grid);
    std::vector<std::string> cols{"index", "value", "note"};
    std::array<MonteCarloEstimate, 3> oracle{};
    if (oracle_reps > 0) {
        if (!seed) throw parse_error("--oracle-reps needs --seed");
        RandomStream rng(*seed);
        oracle = prop1_oracle_all(model, oracle_reps, rng);
        cols.insert(cols.end(), {"oracle_mean", "oracle_se"});
    }
    Report r{cols, {}};
    for (int i : idx) {
        std::vector<Cell> row;
        if (i == 0) {
            const auto g0 = gini0(model, grid);
            if (g0.extended && !c.extend)
                throw heavy_tail_error("G0 is undefined for an infinite mean; pass --extend-heavy-tail to report 1");
            row = {std::int64_t{0}, g0.value, std::string(g0.extended ? "extended" : "")};
            if (oracle_reps > 0) row.insert(row.end(), {std::nan(""), std::nan("")});
        } else {
            row = {std::int64_t{i}, coefficient(model, i, grid), std::string("")};
            if (oracle_reps > 0) row.insert(row.end(), {oracle[i - 1].mean, oracle[i - 1].standard_error});
        }
        r.add(std::move(row));
    }
    return r;
}

Report cmd_estimate(const Common& c, const std::string& data) {
    const Sample s = read_incomes_file(data);
    const auto idx = parse_indices(c.index, 0);
    const auto g = gini_hat_all(s, Grid(c.grid));
    Report r{{"index", "estimate", "n"}, {}};
    for (int i : idx) r.add({std::int64_t{i}, g[i], static_cast<std::int64_t>(s.size())});
    return r;
}

Report cmd_influence(const Common& c, std::optional<double> p, std::optional<double> z, std::size_t points) {
    const auto model = parse_distribution(c.dist);
    const auto idx = parse_indices(c.index, 1);
    auto header = [&](const std::string& lead, const std::string& prefix) {
        std::vector<std::string> cols{lead};
        for (int i : idx) cols.push_back(prefix + std::to_string(i));
        return cols;
    };
    if (p && z) {
        Report r{{"index", "p", "z", "IF_L"}, {}};
        for (int i : idx) r.add({std::int64_t{i}, *p, *z, if_curve(model, i, *p, *z)});
        return r;
    }
    const auto zs = cli::z_grid(model, points);
    if (p) {
        Report r{header("z", "IF_L"), {}};
        for (double zz : zs) {
            std::vector<Cell> row{zz};
            for (int i : idx) row.emplace_back(if_curve(model, i, *p, zz));
            r.add(std::move(row));
        }
        return r;
    }
    if (z) {
        Report r{header("p", "IF_L"), {}};
        const Grid grid(c.grid);
        for (std::size_t j = 1; j <= grid.size(); ++j) {
            std::vector<Cell> row{grid(j)};
            for (int i : idx) row.emplace_back(if_curve(model, i, grid(j), *z));
            r.add(std::move(row));
        }
        return r;
    }
    Report r{header("z", "IF_G"), {}};
    for (double zz : zs) {
        std::vector<Cell> row{zz};
        for (int i : idx) row.emplace_back(if_coefficient(model, i, zz));
        r.add(std::move(row));
    }
    return r;
}

Report cmd_se(const Common& c, std::size_t u_points) {
    const auto model = parse_distribution(c.dist);
    const auto idx = parse_indices(c.index, 1);
    const auto ase = asymptotic_se_all(model, u_points, {1e-13, 1e-11, 200}, c.workers);
    Report r{{"index", "sigma", "if_mean"}, {}};
    for (int i : idx) r.add({std::int64_t{i}, ase.sigma[i - 1], ase.if_mean[i - 1]});
    return r;
}

Report study_report(const StudyResult& s) {
    Report r{{"model", "index", "n", "reps", "true_value", "mean_estimate", "bias", "root_n_se", "coverage", "mean_width"}, {}};
    for (const auto& c : s.cells)
        r.add({s.model, std::int64_t{c.index}, static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(s.reps),
               c.true_value, c.mean_estimate, c.bias, c.root_n_se, c.coverage, c.mean_width});
    return r;
}

StudyConfig study_config(const Common& c, const std::vector<std::size_t>& ns, std::size_t reps, std::uint64_t seed, int lowest) {
    StudyConfig cfg;
    cfg.indices = parse_indices(c.index, lowest);
    cfg.ns = ns;
    cfg.reps = reps;
    cfg.J = c.grid;
    cfg.seed = seed;
    cfg.workers = c.workers;
    return cfg;
}

Report cmd_simulate(const Common& c, const std::vector<std::size_t>& ns, std::size_t reps, std::uint64_t seed) {
    const auto model = parse_distribution(c.dist);
    const auto cfg = study_config(c, ns, reps, seed, 0);
    for (int i : cfg.indices)
        if (i == 0 && model.mean().is_infinite() && !c.extend)
            throw heavy_tail_error("G0 is undefined for an infinite mean; pass --extend-heavy-tail or choose --index 1..3");
    return study_report(se_study(model, cfg));
}

Report cmd_ci(const Common& c, const std::vector<std::size_t>& ns, std::size_t reps, std::uint64_t seed,
              const std::vector<double>& sigma_in) {
    const auto model = parse_distribution(c.dist);
    const auto cfg = study_config(c, ns, reps, seed, 1);
    std::array<double, 4> sigma{};
    if (sigma_in.empty()) {
        const auto ase = asymptotic_se_all(model, 10000, {1e-13, 1e-11, 200}, c.workers);
        for (int i = 1; i <= 3; ++i) sigma[i] = ase.sigma[i - 1];
    } else {
        if (sigma_in.size() != cfg.indices.size())
            throw parse_error("--sigma needs one value per studied index (" + std::to_string(cfg.indices.size()) + ")");
        for (std::size_t k = 0; k < sigma_in.size(); ++k) sigma[cfg.indices[k]] = sigma_in[k];
    }
    return study_report(ci_study(model, cfg, sigma));
}

Report cmd_transfer(const Common& c, std::optional<double> p0) {
    const auto model = parse_distribution(c.dist);
    const Grid grid(c.grid);
    if (!p0) {
        Report r{{"p0", "dG0", "dG1", "dG2", "dG3", "rG0", "rG1", "rG2", "rG3"}, {}};
        for (const auto& e : transfer_effect(model, default_p0_grid(), grid))
            r.add({e.p0, e.absolute[0], e.absolute[1], e.absolute[2], e.absolute[3], e.relative[0], e.relative[1],
                   e.relative[2], e.relative[3]});
        return r;
    }
    const auto t = apply_levy(model, *p0);
    const auto& s = t.spec();
    const auto check = verify_median_preserving(model, t, grid);
    const auto e = transfer_effect(model, {*p0}, grid).front();
    Report r{{"quantity", "value"}, {}};
    r.add({std::string("p0"), s.p0});
    r.add({std::string("poverty_line_b"), s.b});
    r.add({std::string("mean_cumulative_income"), model.cumulative_income(s.p0) / s.p0});
    r.add({std::string("levy_d"), s.d});
    r.add({std::string("threshold_c"), s.c});
    r.add({std::string("F(c+d)"), t.breakpoints()[2]});
    r.add({std::string("median_before"), check.median_before});
    r.add({std::string("median_after"), check.median_after});
    r.add({std::string("median_preserving"), check.preserved ? 1.0 : 0.0});
    for (int i = 0; i < 4; ++i) r.add({"dG" + std::to_string(i), e.absolute[i]});
    for (int i = 0; i < 4; ++i) r.add({"rG" + std::to_string(i), e.relative[i]});
    return r;
}

std::vector<double> parse_range(const std::string& text) {
    double from = 0, to = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> from >> c1 >> to >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) || to < from)
        throw parse_error("--sweep must look like from:to:step with step > 0, got '" + text + "'");
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) out.push_back(from + step * static_cast<double>(k));
    return out;
}

Report cmd_convexity(const Common& c, double h, std::optional<double> p, const std::string& sweep_key,
                     const std::string& sweep) {
    const auto idx = parse_indices(c.index, 0);
    if (!sweep.empty()) {
        if (sweep_key.empty()) throw parse_error("--sweep needs --sweep-key (the parameter name, e.g. a)");
        const auto params = parse_range(sweep);
        const std::string base = c.dist.find(':') == std::string::npos ? c.dist + ":" : c.dist + ",";
        auto family = [&](double v) { return parse_distribution(base + sweep_key + "=" + detail::format_number(v)); };
        Report r{{"model", "index", "min", "argmin_p", "argmin_param", "interior_min", "interior_argmin_p",
                  "interior_argmin_param", "convex"}, {}};
        for (int i : idx) {
            const auto rep = convexity_sweep(family, params, i, default_convexity_grid(), h, 1e-6, c.workers);
            r.add({c.dist, std::int64_t{i}, rep.min_value, rep.argmin_p, rep.argmin_param, rep.interior_min,
                   rep.interior_argmin_p, rep.interior_argmin_param, rep.convex});
        }
        return r;
    }
    const auto model = parse_distribution(c.dist);
    if (p) {
        Report r{{"index", "p", "second_difference", "analytic"}, {}};
        for (int i : idx) {
            double analytic = std::nan("");
            if (i == 1) {
                try {
                    analytic = analytic_L1_second(model, *p);
                } catch (const domain_error&) {
                }
            }
            r.add({std::int64_t{i}, *p, second_difference(model, i, *p, h), analytic});
        }
        return r;
    }
    if (!c.out.empty()) {
        std::vector<std::string> cols{"p"};
        for (int i : idx) cols.push_back("d2L" + std::to_string(i));
        Report table{cols, {}};
        for (double pp : default_convexity_grid()) {
            std::vector<Cell> row{pp};
            const double hh = std::min({h, pp / 2.0, (1.0 - pp) / 2.0});
            for (int i : idx) row.emplace_back(second_difference(model, i, pp, hh));
            table.add(std::move(row));
        }
        cli::emit(table, c.out);
    }
    Report r{{"model", "index", "min", "argmin_p", "convex"}, {}};
    for (int i : idx) {
        const auto rep = convexity_scan(model, i, default_convexity_grid(), h);
        r.add({model.label(), std::int64_t{i}, rep.min_value, rep.argmin_p, rep.convex});
    }
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"Quantile versions of the Lorenz curve and Gini coefficient.\n"
                 "Incomes are in the units of the distribution's scale parameter (or of the data file)."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Common common;
    std::optional<double> p, z, p0;
    double p_val = 0, z_val = 0, p0_val = 0;
    std::uint64_t seed = 0;
    std::size_t reps = 0, oracle_reps = 0, u_points = 10000, points = 99;
    std::vector<std::size_t> ns;
    std::vector<double> sigma;
    std::string data, which = "table1", out_dir, sweep_key, sweep;
    double h = 1e-4;

    auto* curve = app.add_subcommand("curve", "Population curves L0..L3 on the grid, with (0,0) and (1,1) added");
    add_dist(curve, common);
    curve->add_option("--index", common.index, "0 (Lorenz), 1, 2, 3 or all")->capture_default_str();
    add_grid(curve, common);
    auto* curve_p = curve->add_option("--p", p_val, "Evaluate at a single p in (0,1) instead of the grid");
    curve->add_flag("--extend-heavy-tail", common.extend, "Use L0 = 0 on (0,1) when the mean is infinite");
    add_out(curve, common);

    auto* gini = app.add_subcommand("gini", "Population coefficients G0..G3 (grid rule, default J = 1000)");
    add_dist(gini, common);
    gini->add_option("--index", common.index, "0, 1, 2, 3 or all")->capture_default_str();
    add_grid(gini, common);
    gini->add_flag("--extend-heavy-tail", common.extend, "Report G0 = 1 when the mean is infinite");
    gini->add_option("--oracle-reps", oracle_reps, "Also report the Monte Carlo expectation form with this many draws");
    auto* gini_seed = gini->add_option("--seed", seed, "Seed for --oracle-reps");
    add_out(gini, common);

    auto* estimate = app.add_subcommand("estimate", "Estimate G0..G3 from a CSV of incomes (one per line, '#' comments, optional header)");
    estimate->add_option("--data", data, "CSV income file")->required();
    estimate->add_option("--index", common.index, "0, 1, 2, 3 or all")->capture_default_str();
    add_grid(estimate, common);
    add_out(estimate, common);

    auto* influence = app.add_subcommand(
        "influence", "Influence functions. --p and --z: IF of L_i(p) at z; --p: IF over a z grid; "
                     "--z: IF over the p grid; neither: IF of G_i over a z grid");
    add_dist(influence, common);
    influence->add_option("--index", common.index, "1, 2, 3 or all")->capture_default_str();
    auto* inf_p = influence->add_option("--p", p_val, "Curve ordinate p in (0,1)");
    auto* inf_z = influence->add_option("--z", z_val, "Contamination point z (income units)");
    influence->add_option("--points", points, "Number of z grid points (quantiles at k/(points+1))")->capture_default_str();
    add_grid(influence, common);
    add_out(influence, common);

    auto* se = app.add_subcommand("se", "Asymptotic standard errors sigma_i = sqrt Var[IF(Z; G_i)]");
    add_dist(se, common);
    se->add_option("--index", common.index, "1, 2, 3 or all")->capture_default_str();
    se->add_option("--u-points", u_points, "Midpoint grid size for the outer expectation (even)")->capture_default_str();
    add_workers(se, common);
    add_out(se, common);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sqrt(n) * RMSE and bias of G_hat_i (requires --seed)");
    add_dist(simulate, common);
    simulate->add_option("--index", common.index, "0, 1, 2, 3 or all")->capture_default_str();
    simulate->add_option("--n", ns, "Sample sizes, comma separated (default 25,100)")->delimiter(',');
    simulate->add_option("--reps", reps, "Replicates per sample size (default 1000)");
    simulate->add_option("--seed", seed, "Master seed (required)")->required();
    simulate->add_flag("--extend-heavy-tail", common.extend, "Allow index 0 with an infinite mean (true G0 = 1)");
    add_grid(simulate, common);
    add_workers(simulate, common);
    add_out(simulate, common);

    auto* ci = app.add_subcommand("ci", "Coverage and width of G_hat_i +- 1.96 sigma_i/sqrt(n) (requires --seed)");
    add_dist(ci, common);
    ci->add_option("--index", common.index, "1, 2, 3 or all")->capture_default_str();
    ci->add_option("--n", ns, "Sample sizes, comma separated (default 25,100,400)")->delimiter(',');
    ci->add_option("--reps", reps, "Replicates per sample size (default 10000)");
    ci->add_option("--seed", seed, "Master seed (required)")->required();
    ci->add_option("--sigma", sigma, "sigma_i per studied index (default: computed asymptotic SEs)")->delimiter(',');
    add_grid(ci, common);
    add_workers(ci, common);
    add_out(ci, common);

    auto* transfer = app.add_subcommand(
        "transfer", "Poverty-line levy: with --p0, the levy and its effect; without, the 99-point p0 sweep");
    add_dist(transfer, common);
    auto* tr_p0 = transfer->add_option("--p0", p0_val, "Proportion below the poverty line, in (0, 0.5)");
    add_grid(transfer, common);
    add_out(transfer, common);

    auto* convexity = app.add_subcommand("convexity", "Second differences of L_i; grid minima; family sweeps");
    add_dist(convexity, common);
    convexity->add_option("--index", common.index, "0, 1, 2, 3 or all")->capture_default_str();
    convexity->add_option("--step", h, "Second-difference step")->capture_default_str();
    auto* cv_p = convexity->add_option("--p", p_val, "Evaluate at a single p");
    convexity->add_option("--sweep-key", sweep_key, "Parameter to sweep, e.g. a");
    convexity->add_option("--sweep", sweep, "Sweep range from:to:step, e.g. 0.1:10:0.1");
    add_workers(convexity, common);
    add_out(convexity, common);

    auto* tables = app.add_subcommand("tables", "Reproduce a table or figure data set");
    std::string targets_help = "Target: all";
    for (const auto& [name, fn] : cli::table_targets()) targets_help += ", " + name;
    tables->add_option("--which", which, targets_help)->capture_default_str();
    auto* tb_seed = tables->add_option("--seed", seed, "Master seed (required for table2, table3, fig4, fig5)");
    auto* tb_reps = tables->add_option("--reps", reps, "Override the replicate count");
    tables->add_option("--out-dir", out_dir, "Directory for --which all (one CSV per target)");
    add_grid(tables, common);
    add_workers(tables, common);
    add_out(tables, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (curve_p->count() || inf_p->count() || cv_p->count()) p = p_val;
    if (inf_z->count()) z = z_val;
    if (tr_p0->count()) p0 = p0_val;

    if (*curve) cli::emit(cmd_curve(common, p), common.out);
    if (*gini) cli::emit(cmd_gini(common, oracle_reps, gini_seed->count() ? std::optional(seed) : std::nullopt), common.out);
    if (*estimate) cli::emit(cmd_estimate(common, data), common.out);
    if (*influence) cli::emit(cmd_influence(common, p, z, points), common.out);
    if (*se) cli::emit(cmd_se(common, u_points), common.out);
    if (*simulate) cli::emit(cmd_simulate(common, ns.empty() ? std::vector<std::size_t>{25, 100} : ns, reps ? reps : 1000, seed), common.out);
    if (*ci) cli::emit(cmd_ci(common, ns.empty() ? std::vector<std::size_t>{25, 100, 400} : ns, reps ? reps : 10000, seed, sigma), common.out);
    if (*transfer) cli::emit(cmd_transfer(common, p0), common.out);
    if (*convexity) {
        const auto summary = cmd_convexity(common, h, p, sweep_key, sweep);
        cli::emit(summary, (p || !sweep.empty()) ? common.out : std::string());
    }
    if (*tables) {
        cli::TableOptions opt;
        if (tb_seed->count()) opt.seed = seed;
        if (tb_reps->count()) opt.reps = reps;
        opt.workers = common.workers;
        opt.J = common.grid;
        if (which == "all") {
            const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
            std::filesystem::create_directories(dir);
            for (const auto& [name, fn] : cli::table_targets()) {
                if (cli::is_stochastic(name) && !opt.seed) throw parse_error("tables all: --seed is required");
                cli::emit(fn(opt), (dir / (name + ".csv")).string());
                std::cout << "wrote " << (dir / (name + ".csv")).string() << '\n';
            }
        } else {
            bool found = false;
            for (const auto& [name, fn] : cli::table_targets())
                if (name == which) {
                    found = true;
                    cli::emit(fn(opt), common.out);
                }
            if (!found) throw parse_error("unknown --which target '" + which + "'");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qineq::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
