#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qineq/errors.hpp"

namespace qineq {

/// Sorted, non-negative incomes with at least two observations.
class Sample {
public:
    explicit Sample(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < 2)
            throw domain_error("Sample: need at least 2 observations, got " +
                               std::to_string(values_.size()));
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double x = values_[i];
            if (!std::isfinite(x) || x < 0.0)
                throw domain_error("Sample: observation " + std::to_string(i + 1) +
                                   " is negative or not finite");
        }
        std::sort(values_.begin(), values_.end());
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    /// 1-based order statistic x_(k).
    double order_statistic(std::size_t k) const { return values_.at(k - 1); }
    std::span<const double> values() const noexcept { return values_; }

    Sample scaled(double c) const {
        if (!(c > 0.0)) throw domain_error("Sample::scaled: factor must be positive");
        std::vector<double> v(values_);
        for (double& x : v) x *= c;
        return Sample(std::move(v));
    }

private:
    std::vector<double> values_;
};

}  // namespace qineq
