#pragma once

#include <span>
#include <vector>

#include "charn/kernel.hpp"
#include "charn/weight.hpp"

namespace charn {

/// Nadaraya-Watson conditional mean at x:
///   sum_i K((x - lag_i)/bandwidth) resp_i / sum_i K((x - lag_i)/bandwidth).
/// Throws EmptyNeighborhood when every kernel weight vanishes.
double nw_mean(double x, std::span<const double> lags, std::span<const double> responses,
               double bandwidth, const Kernel& kernel);

/// Conditional variance centered at the local mean estimate:
///   sum_i K(.)(resp_i - nw_mean(x))^2 / sum_i K(.).
double nw_var(double x, std::span<const double> lags, std::span<const double> responses,
              double bandwidth, const Kernel& kernel);

/// Variance estimator for the zero-mean model: sum K(.) resp_i^2 / sum K(.).
double nw_var_arch(double x, std::span<const double> lags, std::span<const double> responses,
                   double bandwidth, const Kernel& kernel);

/// Rule-of-thumb bandwidth sigma2_hat * n^(-2/(6+sqrt(3))).
double bandwidth_rule(double sigma2_hat, long n);

/// Simulation-default weight: indicator of [-log n, log n].
WeightFn default_weight(long n);

/// Fitted values of the conditional mean and variance at a set of points.
struct FittedCurves {
    std::vector<double> m_hat;
    std::vector<double> sigma2_hat;  // empty when the fit skips the variance
};

enum class VarianceFit {
    none,      // mean only
    centered,  // sum K (y - m_hat(x))^2 / sum K
    squares,   // sum K y^2 / sum K (zero-mean model)
};

/// Evaluates the kernel fits at each point. The parallel driver distributes
/// points over OpenMP threads; every point is computed independently with a
/// fixed accumulation order, so the result is identical to the serial
/// reference below for any thread count.
FittedCurves fit_curves(std::span<const double> eval_points, std::span<const double> lags,
                        std::span<const double> responses, double bandwidth, const Kernel& kernel,
                        VarianceFit variance);

/// Serial reference implementation, kept for tests and benchmarks.
FittedCurves fit_curves_serial(std::span<const double> eval_points, std::span<const double> lags,
                               std::span<const double> responses, double bandwidth,
                               const Kernel& kernel, VarianceFit variance);

}  // namespace charn
