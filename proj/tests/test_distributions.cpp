#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "qineq/distributions.hpp"

using namespace qineq;

namespace {

std::vector<DistributionModel> catalogue() {
    auto m = table_models();
    for (double a : {0.7, 1.0, 3.0}) m.push_back(DistributionModel::pareto_I(a));
    m.push_back(DistributionModel::exponential(2.5));
    m.push_back(DistributionModel::weibull(2.0, 3.0));
    m.push_back(DistributionModel::pareto_II(3.0, 10.0));
    m.push_back(DistributionModel::chi_square(12));
    for (auto [a, b] : {std::pair{0.1, 0.05}, {0.05, 0.05}, {2.0, 3.0}, {0.5, 0.5}})
        m.push_back(DistributionModel::beta(a, b));
    return m;
}

std::vector<double> p_grid() {
    std::vector<double> p;
    for (int k = 1; k <= 999; ++k) p.push_back(k / 1000.0);
    return p;
}

}  // namespace

TEST(Distributions, CdfExamples) {
    EXPECT_DOUBLE_EQ(DistributionModel::uniform().cdf(0.5), 0.5);
    EXPECT_NEAR(DistributionModel::pareto_II(2).cdf(std::sqrt(2.0) - 1.0), 0.5, 1e-15);
    EXPECT_NEAR(DistributionModel::exponential().cdf(std::log(2.0)), 0.5, 1e-15);
}

TEST(Distributions, QuantileExamples) {
    EXPECT_DOUBLE_EQ(DistributionModel::uniform().quantile(0.25), 0.25);
    EXPECT_NEAR(DistributionModel::pareto_II(2, 100000).quantile(0.5), 41421.36, 0.01);
    EXPECT_NEAR(DistributionModel::chi_square(1).quantile(0.5), oracle::chisq_quantile_bisect(1, 0.5), 1e-9);
    EXPECT_NEAR(DistributionModel::chi_square(1).quantile(0.5), 0.4549, 1e-3);
}

TEST(Distributions, QuantileEndpoints) {
    EXPECT_EQ(DistributionModel::exponential().quantile(0.0), 0.0);
    EXPECT_TRUE(std::isinf(DistributionModel::exponential().quantile(1.0)));
    EXPECT_EQ(DistributionModel::pareto_I(2).quantile(0.0), 1.0);
    EXPECT_EQ(DistributionModel::beta(0.1, 0.05).quantile(1.0), 1.0);
}

TEST(Distributions, QuantileDensityExamples) {
    EXPECT_NEAR(DistributionModel::exponential().quantile_density(0.5), 2.0, 1e-14);
    for (double p : {0.1, 0.5, 0.9}) EXPECT_DOUBLE_EQ(DistributionModel::uniform().quantile_density(p), 1.0);
    EXPECT_NEAR(DistributionModel::pareto_II(2).quantile_density(0.5), 0.5 * std::pow(0.5, -1.5), 1e-12);
}

TEST(Distributions, Means) {
    EXPECT_NEAR(DistributionModel::pareto_II(2, 100000).mean().value(), 100000.0, 1e-9);
    EXPECT_TRUE(DistributionModel::pareto_I(1).mean().is_infinite());
    EXPECT_THROW(DistributionModel::pareto_I(1).mean().value(), heavy_tail_error);
    EXPECT_NEAR(DistributionModel::beta(0.1, 0.05).mean().value(), 2.0 / 3.0, 1e-15);
}

TEST(Distributions, CumulativeIncomeExamples) {
    EXPECT_NEAR(DistributionModel::pareto_II(2, 100000).cumulative_income(0.2), 1114.56, 0.01);
    EXPECT_NEAR(DistributionModel::pareto_II(2, 100000).cumulative_income(0.2) / 0.2, 5572.80, 0.01);
    EXPECT_EQ(DistributionModel::lognormal().cumulative_income(0.0), 0.0);
    EXPECT_NEAR(DistributionModel::uniform().cumulative_income(0.5), 0.125, 1e-15);
    EXPECT_THROW(DistributionModel::pareto_II(1).cumulative_income(1.0), heavy_tail_error);
}

TEST(Distributions, RoundTripAndMonotone) {
    for (const auto& m : catalogue()) {
        double prev = -1.0;
        for (double p : p_grid()) {
            const double x = m.quantile(p);
            if (x == m.upper_support()) continue;  // p beyond the last representable x
            if (std::fabs(m.cdf(x) - p) > 1e-9) {
                // Only acceptable when no double gets closer: p lies between
                // the cdf values of the neighbouring doubles.
                const double lo = m.cdf(std::nextafter(x, 0.0)), hi = m.cdf(std::nextafter(x, 2.0 * x + 1.0));
                EXPECT_TRUE(lo <= p && p <= hi) << m.spec() << " p=" << p;
            }
            if (m.family() != Family::Beta || p < 0.6) {
                EXPECT_GT(x, prev) << m.spec() << " p=" << p;
            }
            prev = x;
        }
    }
}

TEST(Distributions, QuantileDensityIsReciprocalDensity) {
    for (const auto& m : catalogue())
        for (double p : p_grid()) {
            const double x = m.quantile(p);
            const double f = m.density(x);
            if (!(f > 0.0) || !std::isfinite(f)) continue;
            if (x == m.upper_support()) continue;
            const double q = m.quantile_density(p);
            EXPECT_LT(std::fabs(q - 1.0 / f) / q, 1e-8) << m.spec() << " p=" << p;
        }
}

TEST(Distributions, QuantilesAgainstBoost) {
    for (double k : {0.5, 1.0, 3.0, 5.0})
        for (double p : {0.001, 0.05, 0.3, 0.5, 0.8, 0.999}) {
            const double ref = oracle::chisq_quantile(k, p);
            EXPECT_NEAR(DistributionModel::chi_square(k).quantile(p), ref, 1e-10 * std::max(1.0, ref));
        }
    for (double p : {0.01, 0.25, 0.5}) {
        const double ref = oracle::beta_quantile(2.0, 3.0, p);
        EXPECT_NEAR(DistributionModel::beta(2, 3).quantile(p), ref, 1e-10);
    }
    for (double p : {0.001, 0.3, 0.97})
        EXPECT_NEAR(DistributionModel::lognormal().quantile(p), std::exp(oracle::normal_quantile(p)), 1e-9);
}

TEST(Distributions, CumulativeIncomeAgreesWithQuadrature) {
    for (const auto& m : catalogue()) {
        if (m.family() == Family::Beta) continue;  // is itself the quadrature
        for (double p : {0.01, 0.2, 0.5, 0.8, 0.99}) {
            const double closed = m.cumulative_income(p);
            const double quad = cumulative_income_quadrature(m, p, {1e-14, 1e-12, 4000});
            EXPECT_LT(std::fabs(closed - quad), 1e-6 * std::fabs(quad) + 1e-14) << m.spec() << " p=" << p;
        }
    }
}

TEST(Distributions, BetaCumulativeIncomeTail) {
    const auto m = DistributionModel::beta(0.1, 0.05);
    EXPECT_NEAR(m.cumulative_income(1.0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(m.cumulative_income(0.999), 2.0 / 3.0 - 0.001, 1e-6);
}

TEST(Distributions, ScaleEquivariance) {
    const double c = 7.25;
    for (const auto& m : {DistributionModel::pareto_II(2), DistributionModel::pareto_I(1.5), DistributionModel::weibull(0.5),
                          DistributionModel::exponential(), DistributionModel::uniform()}) {
        const auto s = m.scaled(c);
        for (double p : {0.01, 0.3, 0.5, 0.9, 0.999})
            EXPECT_NEAR(s.quantile(p), c * m.quantile(p), 1e-13 * c * m.quantile(p)) << m.spec();
    }
    EXPECT_THROW(DistributionModel::lognormal().scaled(2.0), domain_error);
}

TEST(Distributions, SamplingDeterministic) {
    RandomStream a(17), b(17);
    const auto m = DistributionModel::chi_square(3);
    EXPECT_EQ(draw(m, 5, a), draw(m, 5, b));
}

TEST(Distributions, SamplingConsistency) {
    RandomStream rng(2024);
    const auto u = draw(DistributionModel::uniform(), 1000000, rng);
    EXPECT_NEAR(std::accumulate(u.begin(), u.end(), 0.0) / 1e6, 0.5, 0.002);
    auto s = sample(DistributionModel::pareto_II(2), 1000000, rng);
    EXPECT_NEAR(0.5 * (s[499999] + s[500000]), std::sqrt(2.0) - 1.0, 0.005);
    EXPECT_THROW(sample(DistributionModel::uniform(), 1, rng), domain_error);
}

TEST(Distributions, ParameterValidation) {
    EXPECT_THROW(DistributionModel::pareto_II(0), domain_error);
    EXPECT_THROW(DistributionModel::pareto_II(-1), domain_error);
    EXPECT_THROW(DistributionModel::chi_square(0), domain_error);
    EXPECT_THROW(DistributionModel::beta(1, 0), domain_error);
    EXPECT_THROW(DistributionModel::weibull(2, -1), domain_error);
    EXPECT_THROW(DistributionModel::uniform().quantile(1.5), domain_error);
}

TEST(Distributions, ParseSpecs) {
    EXPECT_EQ(parse_distribution("paretoII:a=2,sigma=100000").spec(), "paretoII:a=2,sigma=100000");
    EXPECT_EQ(parse_distribution("WEIBULL:beta=0.5").spec(), "weibull:beta=0.5,sigma=1");
    EXPECT_EQ(parse_distribution("chisq:k=3").label(), "ChiSq(3)");
    EXPECT_EQ(parse_distribution("beta:alpha=0.1,beta=0.05").spec(), "beta:alpha=0.1,beta=0.05");
    EXPECT_EQ(parse_distribution("lognormal").family(), Family::Lognormal);
    EXPECT_EQ(parse_distribution("uniform").family(), Family::Uniform);
    for (const auto& m : catalogue()) EXPECT_EQ(parse_distribution(m.spec()).spec(), m.spec());
}

TEST(Distributions, ParseErrors) {
    EXPECT_THROW(parse_distribution("gamma:k=2"), parse_error);
    EXPECT_THROW(parse_distribution("paretoII:a=2,scale=3"), parse_error);
    EXPECT_THROW(parse_distribution("paretoII:a=2,a=3"), parse_error);
    EXPECT_THROW(parse_distribution("paretoII"), parse_error);
    EXPECT_THROW(parse_distribution("weibull:beta=abc"), parse_error);
    EXPECT_THROW(parse_distribution(""), parse_error);
}

TEST(Distributions, TableModelOrder) {
    const auto m = table_models();
    ASSERT_EQ(m.size(), 14u);
    EXPECT_EQ(m.front().label(), "Uniform");
    EXPECT_EQ(m[9].label(), "Pareto(2)");
    EXPECT_EQ(m[9].family(), Family::ParetoII);
    EXPECT_EQ(m.back().label(), "Weibull(4)");
}
