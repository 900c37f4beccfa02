#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "qineq/coefficients.hpp"
#include "qineq/empirical.hpp"

using namespace qineq;

namespace {

// Hyndman-Fan type 8 written out from the plotting positions (k - 1/3)/(n + 1/3).
double hf8_by_positions(std::vector<double> x, double p) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    auto pos = [n](std::size_t k) { return (static_cast<double>(k) - 1.0 / 3.0) / (n + 1.0 / 3.0); };
    if (p <= pos(1)) return x.front();
    if (p >= pos(x.size())) return x.back();
    std::size_t k = 1;
    while (pos(k + 1) < p) ++k;
    const double w = (p - pos(k)) / (pos(k + 1) - pos(k));
    return x[k - 1] + w * (x[k] - x[k - 1]);
}

}  // namespace

TEST(Empirical, Hf8HandExample) {
    const Sample s({1, 2, 3, 4});
    EXPECT_NEAR(hf8_quantile(s, 0.5), 2.5, 1e-15);
}

TEST(Empirical, Hf8MatchesPlottingPositions) {
    RandomStream rng(5);
    const auto x = draw(DistributionModel::lognormal(), 37, rng);
    const Sample s(x);
    for (double p = 0.001; p < 1.0; p += 0.0173) EXPECT_NEAR(hf8_quantile(s, p), hf8_by_positions(x, p), 1e-12) << p;
}

TEST(Empirical, Hf8ClampsAndIsMonotone) {
    const Sample s({3, 1, 4, 1, 5, 9, 2, 6});
    EXPECT_EQ(hf8_quantile(s, 0.0001), 1.0);
    EXPECT_EQ(hf8_quantile(s, 0.9999), 9.0);
    double prev = 0.0;
    for (double p = 0.001; p < 1.0; p += 0.001) {
        const double q = hf8_quantile(s, p);
        EXPECT_GE(q, prev);
        prev = q;
    }
}

TEST(Empirical, ConstantSample) {
    const Sample s(std::vector<double>(10, 4.2));
    for (double p : {0.01, 0.5, 0.99}) {
        EXPECT_DOUBLE_EQ(hf8_quantile(s, p), 4.2);
        EXPECT_NEAR(empirical_curve(s, 1, p), p, 1e-15);
        EXPECT_NEAR(empirical_curve(s, 2, p), p, 1e-15);
        EXPECT_NEAR(empirical_curve(s, 3, p), p, 1e-15);
    }
    for (int i = 0; i <= 3; ++i) EXPECT_NEAR(gini_hat(s, i), 0.0, 1e-12) << i;
}

TEST(Empirical, LorenzOrdinates) {
    auto vals = [](const CurveTable& t) {
        std::vector<double> v;
        for (const auto& pt : t.points) v.push_back(pt.value);
        return v;
    };
    const auto a = vals(empirical_lorenz(Sample({1, 2, 3, 4})));
    const std::vector<double> ea{0, 0.1, 0.3, 0.6, 1.0};
    ASSERT_EQ(a.size(), ea.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], ea[k], 1e-15);
    const auto b = vals(empirical_lorenz(Sample({2, 2, 2})));
    for (std::size_t k = 0; k < b.size(); ++k) EXPECT_NEAR(b[k], k / 3.0, 1e-15);
    const auto c = vals(empirical_lorenz(Sample({0, 0, 1})));
    EXPECT_EQ(c, (std::vector<double>{0, 0, 0, 1}));
}

TEST(Empirical, PolygonGini) {
    EXPECT_NEAR(gini_hat(Sample({1, 2, 3, 4}), 0), 0.25, 1e-15);
    EXPECT_THROW(gini_hat(Sample({0, 0, 0}), 0), domain_error);
}

TEST(Empirical, AllIndicesAgreeWithSingle) {
    RandomStream rng(9);
    const auto s = sample(DistributionModel::chi_square(3), 200, rng);
    const auto all = gini_hat_all(s);
    for (int i = 0; i <= 3; ++i) EXPECT_DOUBLE_EQ(all[i], gini_hat(s, i)) << i;
}

TEST(Empirical, LargeSampleConsistency) {
    RandomStream rng(11);
    auto e = sample(DistributionModel::exponential(), 100000, rng);
    EXPECT_NEAR(hf8_quantile(e, 0.5), std::log(2.0), 0.01);
    auto u = sample(DistributionModel::uniform(), 100000, rng);
    EXPECT_NEAR(empirical_curve(u, 1, 0.5), 0.25, 0.01);
    EXPECT_NEAR(gini_hat(u, 1), 0.333, 0.01);
    auto l = sample(DistributionModel::lognormal(), 100000, rng);
    EXPECT_NEAR(empirical_curve(l, 2, 0.5), 0.125, 0.02);
}

TEST(Empirical, ConsistencyForCatalogue) {
    auto models = table_models();
    models.push_back(DistributionModel::beta(0.1, 0.05));
    for (std::size_t k = 0; k < models.size(); ++k) {
        RandomStream rng = RandomStream::substream(77, {k});
        const auto s = sample(models[k], 100000, rng);
        const auto est = gini_hat_all(s);
        for (int i = 1; i <= 3; ++i)
            EXPECT_LT(std::fabs(est[i] - coefficient(models[k], i)), 0.02) << models[k].label() << " i=" << i;
        const auto g0 = gini0(models[k]);
        if (!g0.extended && models[k].family() != Family::ParetoII) {
            EXPECT_LT(std::fabs(est[0] - g0.value), 0.02) << models[k].label();
        }
    }
}

TEST(Empirical, ScaleInvarianceExact) {
    RandomStream rng(3);
    const auto s = sample(DistributionModel::weibull(0.5), 150, rng);
    const auto base = gini_hat_all(s);
    for (double c : {0.25, 2.0, 1024.0}) {
        const auto scaled = gini_hat_all(s.scaled(c));
        for (int i = 0; i <= 3; ++i) EXPECT_EQ(scaled[i], base[i]) << c << ' ' << i;
    }
    for (double c : {3.7, 1e5}) {
        const auto scaled = gini_hat_all(s.scaled(c));
        for (int i = 0; i <= 3; ++i) EXPECT_NEAR(scaled[i], base[i], 1e-13) << c << ' ' << i;
    }
}

TEST(Empirical, BoundsAndGridRefinement) {
    for (std::size_t n : {100u, 500u}) {
        RandomStream rng = RandomStream::substream(8, {n});
        const auto s = sample(DistributionModel::pareto_II(1.5), n, rng);
        const auto g1000 = gini_hat_all(s, Grid(1000));
        const auto g2000 = gini_hat_all(s, Grid(2000));
        for (int i = 0; i <= 3; ++i) {
            EXPECT_GE(g1000[i], 0.0);
            EXPECT_LE(g1000[i], 1.0);
            EXPECT_LT(std::fabs(g2000[i] - g1000[i]), 1e-3);
        }
        for (double p = 0.01; p < 1.0; p += 0.01)
            for (int i = 1; i <= 3; ++i) EXPECT_GE(empirical_curve(s, i, p), 0.0);
    }
}

TEST(Empirical, ZeroMedianIsReported) {
    EXPECT_THROW(empirical_curve(Sample({0, 0, 0, 5}), 1, 0.5), zero_denominator_error);
}

TEST(Empirical, ReadIncomes) {
    std::istringstream in("income,id\n# comment\n\n 3.5,a\n1\n2e1\n");
    const auto s = read_incomes(in, "mem");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], 1.0);
    EXPECT_EQ(s[2], 20.0);
}

TEST(Empirical, ReadIncomesErrors) {
    auto message = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_incomes(in, "data.csv");
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("1\n2\n-3\n").find("data.csv:3"), std::string::npos);
    EXPECT_NE(message("1\nabc\n3\n").find("data.csv:2"), std::string::npos);
    EXPECT_NE(message("x\ny\n").find("data.csv:2"), std::string::npos);
    EXPECT_NE(message("5\n").find("at least 2"), std::string::npos);
    EXPECT_THROW(read_incomes_file("/nonexistent/file.csv"), std::exception);
}
