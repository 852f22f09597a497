#pragma once

#include <cstdint>

#include "charn/edf.hpp"

namespace charn {

/// Standard normal distribution function. Absolute error below 1e-12 on
/// |y| <= 8 (in practice close to machine precision everywhere).
double normal_cdf(double y);

/// Standard normal density.
double normal_pdf(double y);

/// Inverse of normal_cdf on (0, 1). Throws CharnError outside (0, 1).
double normal_quantile(double u);

/// Quantile of the chi-squared distribution with one degree of freedom,
/// i.e. normal_quantile((1+p)/2)^2. Throws outside (0, 1).
double chi2_1_quantile(double p);

/// A Cramér-von Mises distance with the sample-size multiplier applied.
struct CvmValue {
    double value;  // >= 0
    long n;        // multiplier already folded into value
};

/// n * integral of (F(y) - Phi(y))^2 phi(y) dy, evaluated in closed form.
///
/// Substituting u = Phi(y) turns the integrand into a piecewise quadratic
/// in u, so the integral is a finite sum of cubics over the segments
/// between consecutive jump images u_j = Phi(jump_j); no quadrature grid
/// is involved.
CvmValue cvm_vs_normal(const StepEDF& edf, long n);

/// integral of (f(y) - g(y))^2 dy over the merged jump grid (exact; the
/// integrand is piecewise constant and vanishes outside the union of the
/// supports). The caller applies any prefactor such as 2 sqrt(pi) n.
double l2_distance_edfs(const StepEDF& f, const StepEDF& g);

}  // namespace charn
