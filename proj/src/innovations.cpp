#include "charn/innovations.hpp"

#include <cmath>

#include "charn/errors.hpp"

namespace charn {

SkewNormalParams skew_normal_params(double zeta) {
    if (!(zeta >= 0.0)) throw CharnError("skew-normal parameter zeta must be >= 0");
    constexpr double pi = 3.14159265358979323846;
    const double a = 5.0 * zeta;  // shape
    const double a2 = a * a;
    const double a4 = a2 * a2;
    const double scale = std::sqrt(pi * (1.0 + a2)) / std::sqrt(pi + (pi - 2.0) * a2);
    const double location =
        -std::sqrt(2.0 * pi * (a2 + a4) /
                   (pi * pi + (2.0 * pi * pi - 2.0 * pi) * a2 + (pi * pi - 2.0 * pi) * a4));
    return SkewNormalParams{location, scale, a};
}

InnovationSpec InnovationSpec::skew_normal(double zeta) {
    if (!(zeta >= 0.0)) throw CharnError("skew-normal parameter zeta must be >= 0");
    return InnovationSpec(Kind::skew_normal, zeta, 0);
}

InnovationSpec InnovationSpec::standardized_t(int df) {
    if (df <= 2)
        throw CharnError("standardized Student-t needs more than 2 degrees of freedom");
    return InnovationSpec(Kind::standardized_t, 0.0, df);
}

double InnovationSpec::sample(RandomStream& rng) const {
    switch (kind_) {
        case Kind::standard_normal:
            return rng.next_normal();
        case Kind::skew_normal: {
            // Exact representation: delta |U0| + sqrt(1-delta^2) U1 is
            // skew-normal with shape delta/sqrt(1-delta^2).
            const SkewNormalParams p = skew_normal_params(zeta_);
            const double delta = p.shape / std::sqrt(1.0 + p.shape * p.shape);
            const double u0 = rng.next_normal();
            const double u1 = rng.next_normal();
            const double z = delta * std::fabs(u0) + std::sqrt(1.0 - delta * delta) * u1;
            return p.location + p.scale * z;
        }
        case Kind::standardized_t: {
            // t = Z / sqrt(V/df) with V a sum of df squared normals, then
            // scaled to unit variance.
            const double z = rng.next_normal();
            double v = 0.0;
            for (int i = 0; i < df_; ++i) {
                const double g = rng.next_normal();
                v += g * g;
            }
            const double t = z / std::sqrt(v / static_cast<double>(df_));
            return t * std::sqrt((df_ - 2.0) / static_cast<double>(df_));
        }
    }
    return 0.0;  // unreachable
}

std::vector<double> sample_innovations(const InnovationSpec& spec, long count, RandomStream& rng) {
    if (count < 1) throw CharnError("sample_innovations requires count >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (double& x : out) x = spec.sample(rng);
    return out;
}

}  // namespace charn
