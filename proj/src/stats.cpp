#include "charn/stats.hpp"

#include <cmath>

#include "charn/errors.hpp"

namespace charn {

double normal_cdf(double y) {
    // 0.5 erfc(-y/sqrt(2)); erfc keeps full relative accuracy in the left
    // tail where 1 - Phi would lose all digits.
    return 0.5 * std::erfc(-y * 0.7071067811865475244);
}

double normal_pdf(double y) {
    constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * y * y);
}

// Wichura's algorithm AS 241 (PPND16): rational approximations on three
// regimes of q = u - 1/2, accurate to about 1 part in 1e16.
double normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw CharnError("normal_quantile requires u strictly inside (0,1)");

    const double q = u - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) *
                        r +
                    4.5921953931549871457e+4) *
                       r +
                   1.3731693765509461125e+4) *
                      r +
                  1.9715909503065514427e+3) *
                     r +
                 1.3314166789178437745e+2) *
                    r +
                3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) *
                        r +
                    2.1213794301586595867e+4) *
                       r +
                   5.3941960214247511077e+3) *
                      r +
                  6.8718700749205790830e+2) *
                     r +
                 4.2313330701600911252e+1) *
                    r +
                1.0);
    }

    double r = q < 0.0 ? u : 1.0 - u;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) *
                     r +
                 1.27045825245236838258e+0) *
                    r +
                3.64784832476320460504e+0) *
                   r +
               5.76949722146069140550e+0) *
                  r +
              4.63033784615654529590e+0) *
                 r +
             1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) *
                     r +
                 1.48103976427480074590e-1) *
                    r +
                6.89767334985100004550e-1) *
                   r +
               1.67638483018380384940e+0) *
                  r +
              2.05319162663775882187e+0) *
                 r +
             1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) *
                     r +
                 2.65321895265761230930e-2) *
                    r +
                2.96560571828504891230e-1) *
                   r +
               1.78482653991729133580e+0) *
                  r +
              5.46378491116411436990e+0) *
                 r +
             6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) *
                     r +
                 7.86869131145613259100e-4) *
                    r +
                1.48753612908506148525e-2) *
                   r +
               1.36929880922735805310e-1) *
                  r +
              5.99832206555887937690e-1) *
                 r +
             1.0);
    }
    return q < 0.0 ? -x : x;
}

double chi2_1_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw CharnError("chi2_1_quantile requires p strictly inside (0,1)");
    const double z = normal_quantile(0.5 * (1.0 + p));
    return z * z;
}

CvmValue cvm_vs_normal(const StepEDF& edf, long n) {
    if (n < 1) throw CharnError("cvm_vs_normal requires n >= 1");
    const auto& jumps = edf.jumps();
    const auto& cum = edf.cum();
    const std::size_t k = jumps.size();

    // Segment j covers u in [Phi(jump_j), Phi(jump_{j+1})) where the step
    // function has value W_j; W_0 = 0 below the first jump, W_k = 1 above
    // the last. Each segment contributes ((W-a)^3 - (W-b)^3)/3.
    double total = 0.0;
    double u_prev = 0.0;
    double w_prev = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
        const double u_next = (j == k) ? 1.0 : normal_cdf(jumps[j]);
        const double a = w_prev - u_prev;
        const double b = w_prev - u_next;
        total += (a * a * a - b * b * b) / 3.0;
        if (j < k) {
            u_prev = u_next;
            w_prev = cum[j];
        }
    }
    return CvmValue{static_cast<double>(n) * total, n};
}

double l2_distance_edfs(const StepEDF& f, const StepEDF& g) {
    const auto& fj = f.jumps();
    const auto& gj = g.jumps();

    // Walk the merged jump grid; between consecutive grid points both step
    // functions are constant, and the difference vanishes outside the
    // union of the supports.
    double total = 0.0;
    std::size_t i = 0, j = 0;
    double y_prev = 0.0;
    double fv = 0.0, gv = 0.0;
    bool started = false;
    while (i < fj.size() || j < gj.size()) {
        double y;
        if (j >= gj.size() || (i < fj.size() && fj[i] <= gj[j]))
            y = fj[i];
        else
            y = gj[j];

        if (started && y > y_prev) {
            const double d = fv - gv;
            total += d * d * (y - y_prev);
        }
        while (i < fj.size() && fj[i] == y) fv = f.cum()[i++];
        while (j < gj.size() && gj[j] == y) gv = g.cum()[j++];
        y_prev = y;
        started = true;
    }
    return total;
}

}  // namespace charn
