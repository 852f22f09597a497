#pragma once

#include <vector>

#include "charn/rng.hpp"

namespace charn {

/// Location, scale and shape of the mean-zero unit-variance skew-normal
/// parametrized by zeta (shape = 5 zeta).
struct SkewNormalParams {
    double location;
    double scale;
    double shape;
};

SkewNormalParams skew_normal_params(double zeta);

/// A sampleable centered unit-variance innovation law.
class InnovationSpec {
public:
    enum class Kind { standard_normal, skew_normal, standardized_t };

    static InnovationSpec standard_normal() { return InnovationSpec(Kind::standard_normal, 0.0, 0); }
    static InnovationSpec skew_normal(double zeta);
    /// Student-t(df) scaled by sqrt((df-2)/df); df <= 2 is rejected since
    /// the variance would not exist.
    static InnovationSpec standardized_t(int df);

    Kind kind() const noexcept { return kind_; }
    double zeta() const noexcept { return zeta_; }
    int df() const noexcept { return df_; }

    /// One draw from the law.
    double sample(RandomStream& rng) const;

private:
    InnovationSpec(Kind kind, double zeta, int df) : kind_(kind), zeta_(zeta), df_(df) {}

    Kind kind_;
    double zeta_;  // skew-normal parameter
    int df_;       // Student-t degrees of freedom
};

/// count iid draws.
std::vector<double> sample_innovations(const InnovationSpec& spec, long count, RandomStream& rng);

}  // namespace charn
