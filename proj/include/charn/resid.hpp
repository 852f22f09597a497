#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "charn/edf.hpp"
#include "charn/series.hpp"
#include "charn/smooth.hpp"

namespace charn {

enum class ModelVariant { ar_arch, ar, arch };

/// Estimated residuals eps_hat_1..eps_hat_n with their normalized weights
/// v_{n,t} and the fitted curves they came from.
///
/// Weights are >= 0 and sum to exactly 1. A residual whose lag carries zero
/// weight may be NaN when its variance estimate degenerated; such points
/// never enter the empirical distribution function.
struct ResidualSet {
    std::vector<double> residuals;
    std::vector<double> weights;
    ModelVariant variant;
    std::optional<double> sigma2_const;  // constant variance, ar variant only
    FittedCurves curves;                 // m_hat / sigma2_hat at the lags
};

/// Builds residuals for the chosen model variant:
///   ar_arch: (X_t - m_hat(X_{t-1})) / sigma_hat(X_{t-1})
///   ar:      (X_t - m_hat(X_{t-1})) / sigma_hat,
///            sigma_hat^2 = sum_t v_{n,t} (X_t - m_hat(X_{t-1}))^2
///   arch:    X_t / sigma_hat(X_{t-1}) with the squares-based variance fit
/// Weights v_{n,t} = w(X_{t-1}) / sum_s w(X_{s-1}).
ResidualSet residuals(const Series& series, ModelVariant variant, double bandwidth,
                      const Kernel& kernel, const WeightFn& weight);

/// Same construction from externally supplied fitted curves (test seam for
/// injecting the true m and sigma).
ResidualSet residuals_from_curves(const Series& series, ModelVariant variant, FittedCurves curves,
                                  const WeightFn& weight);

/// Weighted EDF F_n(y) = sum_t v_{n,t} I{eps_hat_t <= y}.
StepEDF edf(const ResidualSet& rs);

/// Parametric-null residual EDF for the linear AR(1) model: standardizes
/// e_t = X_t - theta_hat X_{t-1} by sigma_hat^2 = n^{-1} sum e_t^2 and
/// gives every point mass 1/n. Returns the EDF and sigma_hat^2.
std::pair<StepEDF, double> edf_null_linear_ar(const Series& series, double theta_hat);

/// Null EDF for the multiplicative hypothesis m = c sigma, reusing the
/// weights and volatility fit of an existing ar_arch residual set:
/// eps0_t = X_t / sigma_hat(X_{t-1}) - c_hat.
StepEDF edf_null_multiplicative(const ResidualSet& ararch_fit, const Series& series, double c_hat);

/// Convenience overload running the ar_arch smoothing pipeline internally.
StepEDF edf_null_multiplicative(const Series& series, double c_hat, double bandwidth,
                                const Kernel& kernel, const WeightFn& weight);

}  // namespace charn
