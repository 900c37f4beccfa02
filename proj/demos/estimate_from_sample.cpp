// Draws lognormal samples of increasing size and compares the estimated
// coefficients with their population values and asymptotic standard errors.

#include <cmath>
#include <cstdio>

#include "qineq/qineq.hpp"

int main() {
    using namespace qineq;
    const auto F = DistributionModel::lognormal();
    const auto G = coefficients(F);
    const double g0 = gini0(F).value;
    const auto se = asymptotic_se_all(F);

    std::printf("population  G0 %.4f  G1 %.4f  G2 %.4f  G3 %.4f\n", g0, G[0], G[1], G[2]);
    std::printf("sigma_i           G1 %.4f  G2 %.4f  G3 %.4f\n\n", se.sigma[0], se.sigma[1], se.sigma[2]);

    RandomStream rng(20240101);
    for (std::size_t n : {100, 1000, 10000, 100000}) {
        const auto s = sample(F, n, rng);
        const auto g = gini_hat_all(s);
        const double half = 1.96 / std::sqrt(static_cast<double>(n));
        std::printf("n=%6zu  G0 %.4f  G1 %.4f+-%.4f  G2 %.4f+-%.4f  G3 %.4f+-%.4f\n", n, g[0], g[1],
                    half * se.sigma[0], g[2], half * se.sigma[1], g[3], half * se.sigma[2]);
    }
}
