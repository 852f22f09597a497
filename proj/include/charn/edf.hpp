#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace charn {

/// Right-continuous weighted step distribution function: 0 before the first
/// jump, 1 from the last jump on. Jump locations are strictly increasing
/// (exactly tied inputs are merged) and cumulative weights end at 1.
class StepEDF {
public:
    /// Builds from (value, weight) points. Weights must be >= 0 with a
    /// positive total; zero-weight points are dropped, exact ties merged,
    /// and the cumulative weights rescaled so the last one is exactly 1.
    static StepEDF from_points(std::vector<std::pair<double, double>> points);

    /// F(y) = sum of merged weights at jumps <= y.
    double operator()(double y) const;

    const std::vector<double>& jumps() const noexcept { return jumps_; }
    const std::vector<double>& cum() const noexcept { return cum_; }
    std::size_t jump_count() const noexcept { return jumps_.size(); }

private:
    StepEDF(std::vector<double> jumps, std::vector<double> cum)
        : jumps_(std::move(jumps)), cum_(std::move(cum)) {}

    std::vector<double> jumps_;  // u_1 < ... < u_k
    std::vector<double> cum_;    // 0 < W_1 <= ... <= W_k = 1
};

}  // namespace charn
