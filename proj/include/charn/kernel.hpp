#pragma once

#include <cmath>
#include <limits>

#include "charn/errors.hpp"

namespace charn {

/// Symmetric probability-density kernel. The compact variants live on
/// [-C, C]; the Gaussian kernel has unbounded support (the simulation
/// protocol uses it even though the theory assumes compact support, its
/// exponential tails make the difference negligible).
class Kernel {
public:
    enum class Shape { gaussian, quartic, triweight };

    static Kernel gaussian() { return Kernel(Shape::gaussian, 0.0); }
    static Kernel quartic(double support) { return Kernel(Shape::quartic, checked(support)); }
    static Kernel triweight(double support) { return Kernel(Shape::triweight, checked(support)); }

    double operator()(double u) const {
        switch (shape_) {
            case Shape::gaussian:
                return 0.3989422804014326779 * std::exp(-0.5 * u * u);
            case Shape::quartic: {
                const double v = u / c_;
                if (std::fabs(v) > 1.0) return 0.0;
                const double w = 1.0 - v * v;
                return 0.9375 * w * w / c_;
            }
            case Shape::triweight: {
                const double v = u / c_;
                if (std::fabs(v) > 1.0) return 0.0;
                const double w = 1.0 - v * v;
                return 1.09375 * w * w * w / c_;
            }
        }
        return 0.0;  // unreachable
    }

    Shape shape() const noexcept { return shape_; }

    /// Half-width of the support; infinity for the Gaussian kernel.
    double support() const noexcept {
        return shape_ == Shape::gaussian ? std::numeric_limits<double>::infinity() : c_;
    }

private:
    Kernel(Shape shape, double c) : shape_(shape), c_(c) {}

    static double checked(double support) {
        if (!(support > 0.0)) throw CharnError("compact kernel support must be positive");
        return support;
    }

    Shape shape_;
    double c_;
};

}  // namespace charn
