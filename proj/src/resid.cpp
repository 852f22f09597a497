#include "charn/resid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charn/errors.hpp"

namespace charn {

namespace {

std::span<const double> lags_of(const Series& s) {
    return {s.values().data(), s.pair_count()};
}

std::span<const double> responses_of(const Series& s) {
    return {s.values().data() + 1, s.pair_count()};
}

// Normalized weights v_{n,t}; the largest entry absorbs the rounding
// remainder so the sum is exactly 1.
std::vector<double> normalized_weights(std::span<const double> lags, const WeightFn& weight) {
    std::vector<double> v(lags.size());
    double total = 0.0;
    for (std::size_t t = 0; t < lags.size(); ++t) {
        v[t] = weight(lags[t]);
        total += v[t];
    }
    if (total == 0.0) throw DegenerateWeights();
    double sum = 0.0;
    std::size_t imax = 0;
    for (std::size_t t = 0; t < v.size(); ++t) {
        v[t] /= total;
        sum += v[t];
        if (v[t] > v[imax]) imax = t;
    }
    v[imax] += 1.0 - sum;
    return v;
}

}  // namespace

ResidualSet residuals_from_curves(const Series& series, ModelVariant variant, FittedCurves curves,
                                  const WeightFn& weight) {
    const std::size_t n = series.pair_count();
    if (n < 2) throw CharnError("residuals need a series of length >= 3");
    const auto lags = lags_of(series);
    const auto resp = responses_of(series);
    if (curves.m_hat.size() != n && variant != ModelVariant::arch)
        throw CharnError("fitted mean curve does not match the series");
    if (variant != ModelVariant::ar && curves.sigma2_hat.size() != n)
        throw CharnError("fitted variance curve does not match the series");

    ResidualSet rs;
    rs.variant = variant;
    rs.weights = normalized_weights(lags, weight);
    rs.residuals.resize(n);

    if (variant == ModelVariant::ar) {
        double s2 = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double d = resp[t] - curves.m_hat[t];
            s2 += rs.weights[t] * d * d;
        }
        if (!(s2 > 0.0))
            throw NonpositiveVariance("constant variance estimate is nonpositive (" +
                                      std::to_string(s2) + ")");
        const double sd = std::sqrt(s2);
        for (std::size_t t = 0; t < n; ++t) rs.residuals[t] = (resp[t] - curves.m_hat[t]) / sd;
        rs.sigma2_const = s2;
    } else {
        for (std::size_t t = 0; t < n; ++t) {
            const double s2 = curves.sigma2_hat[t];
            if (!(s2 > 0.0)) {
                if (rs.weights[t] > 0.0) throw NonpositiveVariance(t + 1, s2);
                rs.residuals[t] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const double num =
                variant == ModelVariant::arch ? resp[t] : resp[t] - curves.m_hat[t];
            rs.residuals[t] = num / std::sqrt(s2);
        }
    }
    rs.curves = std::move(curves);
    return rs;
}

ResidualSet residuals(const Series& series, ModelVariant variant, double bandwidth,
                      const Kernel& kernel, const WeightFn& weight) {
    const auto lags = lags_of(series);
    const auto resp = responses_of(series);
    const VarianceFit vfit = variant == ModelVariant::ar_arch ? VarianceFit::centered
                             : variant == ModelVariant::arch  ? VarianceFit::squares
                                                              : VarianceFit::none;
    FittedCurves curves = fit_curves(lags, lags, resp, bandwidth, kernel, vfit);
    return residuals_from_curves(series, variant, std::move(curves), weight);
}

StepEDF edf(const ResidualSet& rs) {
    std::vector<std::pair<double, double>> points;
    points.reserve(rs.residuals.size());
    for (std::size_t t = 0; t < rs.residuals.size(); ++t)
        if (rs.weights[t] > 0.0) {
            if (!std::isfinite(rs.residuals[t]))
                throw CharnError("non-finite residual with positive weight at index " +
                                 std::to_string(t + 1));
            points.emplace_back(rs.residuals[t], rs.weights[t]);
        }
    return StepEDF::from_points(std::move(points));
}

std::pair<StepEDF, double> edf_null_linear_ar(const Series& series, double theta_hat) {
    const std::size_t n = series.pair_count();
    if (n < 2) throw CharnError("edf_null_linear_ar needs a series of length >= 3");
    const auto lags = lags_of(series);
    const auto resp = responses_of(series);

    std::vector<double> raw(n);
    for (std::size_t t = 0; t < n; ++t) raw[t] = resp[t] - theta_hat * lags[t];
    const auto [mn, mx] = std::minmax_element(raw.begin(), raw.end());
    if (*mn == *mx) throw ZeroVariance();

    double s2 = 0.0;
    for (double e : raw) s2 += e * e;
    s2 /= static_cast<double>(n);

    const double sd = std::sqrt(s2);
    std::vector<std::pair<double, double>> points;
    points.reserve(n);
    const double mass = 1.0 / static_cast<double>(n);
    for (double e : raw) points.emplace_back(e / sd, mass);
    return {StepEDF::from_points(std::move(points)), s2};
}

StepEDF edf_null_multiplicative(const ResidualSet& ararch_fit, const Series& series, double c_hat) {
    if (ararch_fit.variant != ModelVariant::ar_arch)
        throw CharnError("edf_null_multiplicative needs an ar_arch residual set");
    const auto resp = responses_of(series);
    const std::size_t n = resp.size();
    if (ararch_fit.residuals.size() != n)
        throw CharnError("residual set does not match the series");

    std::vector<std::pair<double, double>> points;
    points.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (ararch_fit.weights[t] <= 0.0) continue;
        const double s2 = ararch_fit.curves.sigma2_hat[t];
        points.emplace_back(resp[t] / std::sqrt(s2) - c_hat, ararch_fit.weights[t]);
    }
    return StepEDF::from_points(std::move(points));
}

StepEDF edf_null_multiplicative(const Series& series, double c_hat, double bandwidth,
                                const Kernel& kernel, const WeightFn& weight) {
    const ResidualSet rs = residuals(series, ModelVariant::ar_arch, bandwidth, kernel, weight);
    return edf_null_multiplicative(rs, series, c_hat);
}

}  // namespace charn
