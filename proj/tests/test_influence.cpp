#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qineq/influence.hpp"

using namespace qineq;

TEST(Influence, QuantileExamples) {
    const auto e = DistributionModel::exponential();
    const auto u = DistributionModel::uniform();
    EXPECT_NEAR(if_quantile(e, 0.5, 10.0), 1.0, 1e-14);
    EXPECT_NEAR(if_quantile(u, 0.25, 0.1), -0.75, 1e-15);
    for (const auto& m : table_models())
        for (double p : {0.1, 0.5, 0.9}) EXPECT_EQ(if_quantile(m, p, m.quantile(p)), 0.0);
}

TEST(Influence, QuantileZeroMeanAndVariance) {
    for (const auto& m : table_models())
        for (double p : {0.05, 0.3, 0.5, 0.8}) {
            const std::array<double, 1> br{p};
            auto f = [&](double u) { return if_quantile(m, p, m.quantile(u)); };
            auto f2 = [&](double u) { return std::pow(if_quantile(m, p, m.quantile(u)), 2); };
            const double mean = integrate(f, 0.0, 1.0, br, {1e-12, 1e-12, 200}).value;
            const double var = integrate(f2, 0.0, 1.0, br, {1e-12, 1e-12, 200}).value;
            const double q = m.quantile_density(p);
            EXPECT_LT(std::fabs(mean), 1e-8 * std::max(1.0, q)) << m.label() << ' ' << p;
            EXPECT_NEAR(var, p * (1 - p) * q * q, 1e-6 * p * (1 - p) * q * q) << m.label() << ' ' << p;
        }
}

TEST(Influence, CurveMatchesContaminationFiniteDifference) {
    const double eps = 1e-5;
    for (const auto& m : {DistributionModel::pareto_II(1), DistributionModel::lognormal(), DistributionModel::chi_square(3),
                          DistributionModel::weibull(0.5), DistributionModel::uniform()}) {
        auto q = [&](double r) { return m.quantile(r); };
        for (double p : {0.1, 0.4, 0.75})
            for (double uz : {0.02, 0.3, 0.47, 0.6, 0.97}) {
                const double z = m.quantile(uz);
                for (int i = 1; i <= 3; ++i) {
                    const double analytic = if_curve(m, i, p, z);
                    const double fd = oracle::curve_if_finite_difference(q, uz, z, i, p, eps);
                    EXPECT_NEAR(fd, analytic, 1e-3 * std::fabs(analytic) + 1e-9)
                        << m.label() << " i=" << i << " p=" << p << " u=" << uz;
                }
            }
    }
}

TEST(Influence, CurveUpperLimitParetoOne) {
    // Pareto a=1: Q(p) = p/(1-p), q(p) = 1/(1-p)^2. For z beyond every quantile
    // involved, IF(x_r) = r q(r).
    const auto m = DistributionModel::pareto_II(1);
    const double p = 0.5;
    auto Q = [](double r) { return r / (1 - r); };
    auto q = [](double r) { return 1 / ((1 - r) * (1 - r)); };
    const double a = Q(p / 2), med = Q(0.5);
    const double expected = p * ((p / 2) * q(p / 2) / med - a * 0.5 * q(0.5) / (med * med));
    EXPECT_LT(expected, 0.0);
    EXPECT_NEAR(if_curve(m, 1, p, 1e9), expected, 1e-12);
}

TEST(Influence, CurveSmallPAndSignChange) {
    const auto m = DistributionModel::pareto_II(1);
    double prev = 1e300;
    for (double p : {0.1, 0.01, 0.001}) {
        double worst = 0.0;
        for (double uz = 0.005; uz < 1.0; uz += 0.005)
            for (int i = 1; i <= 3; ++i) worst = std::max(worst, std::fabs(if_curve(m, i, p, m.quantile(uz))));
        EXPECT_LT(worst, prev);
        prev = worst;
    }
    EXPECT_LT(prev, 1e-2);
    const double p = 0.4, med = m.quantile(0.5);
    EXPECT_LT(if_curve(m, 1, p, 0.9 * med) * if_curve(m, 1, p, 1.1 * med), 0.0);
    EXPECT_GT(if_curve(m, 1, p, 0.9 * med), 0.0);
}

TEST(Influence, CoefficientDenseRiemann) {
    const auto u = DistributionModel::uniform();
    for (int i = 1; i <= 3; ++i) {
        const double dense =
            -2.0 * oracle::midpoint([&](double p) { return if_curve(u, i, p, 0.5); }, 0.0, 1.0, 2000000);
        EXPECT_NEAR(if_coefficient(u, i, 0.5), dense, 1e-5) << i;
    }
}

TEST(Influence, CoefficientBoundedWithPeakAtMedian) {
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const auto m = DistributionModel::pareto_II(a);
        const double med = std::pow(2.0, 1.0 / a) - 1.0;
        for (int i = 1; i <= 3; ++i) {
            double best = 0.0, arg = 0.0;
            for (int k = 1; k < 400; ++k) {
                const double z = m.quantile(k / 400.0);
                const double v = std::fabs(if_coefficient(m, i, z));
                if (v > best) best = v, arg = z;
            }
            EXPECT_TRUE(std::isfinite(best));
            EXPECT_NEAR(m.cdf(arg), 0.5, 0.01) << "a=" << a << " i=" << i;
            EXPECT_NEAR(arg, med, 0.05 * med) << "a=" << a << " i=" << i;
        }
    }
}

TEST(Influence, AsymptoticExamples) {
    EXPECT_NEAR(asymptotic_se(DistributionModel::lognormal(), 1), 0.417, 0.005);
    EXPECT_NEAR(asymptotic_se(DistributionModel::pareto_II(2), 2), 0.381, 0.005);
    EXPECT_NEAR(asymptotic_se(DistributionModel::weibull(4), 3), 0.140, 0.005);
}

TEST(Influence, AsymptoticZeroMean) {
    for (const auto& m : table_models()) {
        const auto r = asymptotic_se_all(m);
        for (int i = 0; i < 3; ++i) EXPECT_LT(std::fabs(r.if_mean[i]), 1e-6) << m.label() << ' ' << i + 1;
    }
}

TEST(Influence, DecompositionMatchesDirectRoute) {
    // sigma^2 = E[IF(Z;G)^2] with IF(Z;G) from per-z adaptive quadrature on a
    // midpoint u-grid, against the cumulative-panel decomposition.
    for (const auto& m : {DistributionModel::lognormal(), DistributionModel::pareto_II(2), DistributionModel::uniform()}) {
        const std::size_t N = 2000;
        std::array<double, 3> s1{}, s2{};
        for (std::size_t k = 0; k < N; ++k) {
            const double z = m.quantile((k + 0.5) / N);
            for (int i = 1; i <= 3; ++i) {
                const double v = if_coefficient(m, i, z, {1e-11, 1e-11, 4000});
                s1[i - 1] += v / N;
                s2[i - 1] += v * v / N;
            }
        }
        const auto fast = asymptotic_se_all(m, N);
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(std::sqrt(s2[i] - s1[i] * s1[i]), fast.sigma[i], 1e-7) << m.label() << ' ' << i + 1;
            EXPECT_NEAR(s1[i], fast.if_mean[i], 1e-7);
        }
    }
}

TEST(Influence, WorkerCountInvariant) {
    const auto m = DistributionModel::chi_square(3);
    const auto a = asymptotic_se_all(m, 2000, {1e-13, 1e-11, 200}, 1);
    const auto b = asymptotic_se_all(m, 2000, {1e-13, 1e-11, 200}, 3);
    EXPECT_EQ(a.sigma, b.sigma);
}
