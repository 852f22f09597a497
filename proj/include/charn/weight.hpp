#pragma once

#include "charn/errors.hpp"

namespace charn {

/// Weight function w_n: 1 on a central interval, 0 outside [a, b]. The
/// indicator form is the simulation default; the smooth form ramps between
/// 0 and 1 with a three-times-differentiable polynomial so it satisfies
/// the differentiability the theory asks of w_n.
class WeightFn {
public:
    enum class Kind { indicator, smooth };

    /// 1 on the closed interval [a, b] (both endpoints included), else 0.
    static WeightFn indicator(double a, double b) {
        check_interval(a, b);
        return WeightFn(Kind::indicator, a, b, 0.0);
    }

    /// 1 on [a+kappa, b-kappa], 0 outside [a, b], degree-7 C^3 ramps on
    /// the transition bands. Requires 2 kappa <= b - a.
    static WeightFn smooth(double a, double b, double kappa) {
        check_interval(a, b);
        if (!(kappa > 0.0)) throw CharnError("smooth weight needs kappa > 0");
        if (2.0 * kappa > b - a) throw CharnError("smooth weight needs 2*kappa <= b - a");
        return WeightFn(Kind::smooth, a, b, kappa);
    }

    double operator()(double x) const {
        if (x < a_ || x > b_) return 0.0;
        if (kind_ == Kind::indicator) return 1.0;
        if (x < a_ + kappa_) return ramp((x - a_) / kappa_);
        if (x > b_ - kappa_) return ramp((b_ - x) / kappa_);
        return 1.0;
    }

    Kind kind() const noexcept { return kind_; }
    double lower() const noexcept { return a_; }
    double upper() const noexcept { return b_; }
    double kappa() const noexcept { return kappa_; }

private:
    WeightFn(Kind kind, double a, double b, double kappa)
        : kind_(kind), a_(a), b_(b), kappa_(kappa) {}

    static void check_interval(double a, double b) {
        if (!(a < b)) throw CharnError("weight interval needs a < b");
    }

    // The unique degree-7 polynomial with s(0)=0, s(1)=1 and vanishing
    // first three derivatives at both ends.
    static double ramp(double t) {
        const double t4 = t * t * t * t;
        return t4 * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
    }

    Kind kind_;
    double a_;
    double b_;
    double kappa_;
};

}  // namespace charn
