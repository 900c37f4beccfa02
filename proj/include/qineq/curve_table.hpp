#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qineq {

struct CurvePoint {
    double p;
    double value;
};

/// Sampled points (p, L_i(p)) of an inequality curve; index 0 is the Lorenz curve.
struct CurveTable {
    int index = 0;
    std::vector<CurvePoint> points;

    std::size_t size() const { return points.size(); }

    /// Copy with (0,0) prepended and (1,1) appended when not already present.
    CurveTable with_endpoints() const {
        CurveTable out{index, {}};
        out.points.reserve(points.size() + 2);
        if (points.empty() || points.front().p > 0.0) out.points.push_back({0.0, 0.0});
        out.points.insert(out.points.end(), points.begin(), points.end());
        if (out.points.back().p < 1.0) out.points.push_back({1.0, 1.0});
        return out;
    }

    void write_csv(std::ostream& os) const {
        const auto old = os.precision(17);
        os << "p,value\n";
        for (const auto& pt : points) os << pt.p << ',' << pt.value << '\n';
        os.precision(old);
    }

    nlohmann::json to_json() const {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& pt : points) pts.push_back({{"p", pt.p}, {"value", pt.value}});
        return {{"index", index}, {"points", std::move(pts)}};
    }
};

}  // namespace qineq
