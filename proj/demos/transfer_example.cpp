// Poverty-line levy on a Pareto II income distribution (a = 2, sigma = 100000):
// incomes below the 20% quantile are lifted to it, paid for by a flat levy on
// incomes above the 80% quantile.

#include <cstdio>

#include "qineq/qineq.hpp"

int main() {
    using namespace qineq;
    const auto F = DistributionModel::pareto_II(2.0, 100000.0);
    const auto Y = apply_levy(F, 0.2);
    const auto& s = Y.spec();

    std::printf("median income          %12.2f\n", F.quantile(0.5));
    std::printf("mean income            %12.2f\n", F.mean().value());
    std::printf("poverty line b         %12.2f\n", s.b);
    std::printf("mean income below b    %12.2f\n", F.cumulative_income(s.p0) / s.p0);
    std::printf("levy d                 %12.2f\n", s.d);
    std::printf("levy threshold c       %12.2f\n", s.c);
    std::printf("median after transfer  %12.2f\n", Y.quantile(0.5));

    const auto e = transfer_effect(F, {0.2}).front();
    std::printf("\n      before    after     change\n");
    for (int i = 0; i < 4; ++i)
        std::printf("G%d  %8.4f  %8.4f  %8.4f (%.1f%%)\n", i, e.before[i], e.after[i], e.absolute[i], 100 * e.relative[i]);
}
