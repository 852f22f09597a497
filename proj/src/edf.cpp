#include "charn/edf.hpp"

#include <algorithm>
#include <cmath>

#include "charn/errors.hpp"

namespace charn {

StepEDF StepEDF::from_points(std::vector<std::pair<double, double>> points) {
    std::erase_if(points, [](const auto& p) { return p.second == 0.0; });
    if (points.empty()) throw CharnError("empirical distribution needs positive total weight");

    for (const auto& [value, weight] : points) {
        if (!std::isfinite(value)) throw CharnError("non-finite jump location in EDF");
        if (!(weight > 0.0)) throw CharnError("negative weight in EDF");
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> jumps, cum;
    jumps.reserve(points.size());
    cum.reserve(points.size());
    double running = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        running += points[i].second;
        if (!jumps.empty() && jumps.back() == points[i].first)
            cum.back() = running;  // exact tie: merge into one jump
        else {
            jumps.push_back(points[i].first);
            cum.push_back(running);
        }
    }
    // One rounding renormalization so the terminal value is exactly 1.
    const double total = cum.back();
    for (double& w : cum) w /= total;
    cum.back() = 1.0;
    return StepEDF(std::move(jumps), std::move(cum));
}

double StepEDF::operator()(double y) const {
    auto it = std::upper_bound(jumps_.begin(), jumps_.end(), y);
    if (it == jumps_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

}  // namespace charn
