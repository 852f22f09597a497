#include "charn/smooth.hpp"

#include <cmath>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charn {

namespace {

struct PointFit {
    double m_hat = 0.0;
    double sigma2_hat = 0.0;
    bool empty = false;  // all kernel weights vanished
};

// One evaluation point. `scratch` holds the kernel weights so the variance
// pass does not recompute them; accumulation order is fixed (ascending i)
// to keep serial and parallel drivers bit-identical.
PointFit fit_point(double x, std::span<const double> lags, std::span<const double> responses,
                   double bandwidth, const Kernel& kernel, VarianceFit variance,
                   std::vector<double>& scratch) {
    const std::size_t n = lags.size();
    double sw = 0.0, swy = 0.0, swyy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = kernel((x - lags[i]) / bandwidth);
        scratch[i] = w;
        sw += w;
        swy += w * responses[i];
        if (variance == VarianceFit::squares) swyy += w * responses[i] * responses[i];
    }
    PointFit fit;
    if (sw == 0.0) {
        fit.empty = true;
        return fit;
    }
    fit.m_hat = swy / sw;
    if (variance == VarianceFit::centered) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = responses[i] - fit.m_hat;
            acc += scratch[i] * d * d;
        }
        fit.sigma2_hat = acc / sw;
    } else if (variance == VarianceFit::squares) {
        fit.sigma2_hat = swyy / sw;
    }
    return fit;
}

void validate(std::span<const double> lags, std::span<const double> responses, double bandwidth) {
    if (lags.empty() || lags.size() != responses.size())
        throw CharnError("kernel fit needs matching, nonempty lag/response data");
    if (!(bandwidth > 0.0)) throw CharnError("bandwidth must be positive");
}

}  // namespace

double nw_mean(double x, std::span<const double> lags, std::span<const double> responses,
               double bandwidth, const Kernel& kernel) {
    validate(lags, responses, bandwidth);
    std::vector<double> scratch(lags.size());
    const PointFit fit = fit_point(x, lags, responses, bandwidth, kernel, VarianceFit::none, scratch);
    if (fit.empty) throw EmptyNeighborhood(x);
    return fit.m_hat;
}

double nw_var(double x, std::span<const double> lags, std::span<const double> responses,
              double bandwidth, const Kernel& kernel) {
    validate(lags, responses, bandwidth);
    std::vector<double> scratch(lags.size());
    const PointFit fit =
        fit_point(x, lags, responses, bandwidth, kernel, VarianceFit::centered, scratch);
    if (fit.empty) throw EmptyNeighborhood(x);
    return fit.sigma2_hat;
}

double nw_var_arch(double x, std::span<const double> lags, std::span<const double> responses,
                   double bandwidth, const Kernel& kernel) {
    validate(lags, responses, bandwidth);
    std::vector<double> scratch(lags.size());
    const PointFit fit =
        fit_point(x, lags, responses, bandwidth, kernel, VarianceFit::squares, scratch);
    if (fit.empty) throw EmptyNeighborhood(x);
    return fit.sigma2_hat;
}

double bandwidth_rule(double sigma2_hat, long n) {
    if (!(sigma2_hat > 0.0)) throw CharnError("bandwidth rule needs sigma2_hat > 0");
    if (n < 1) throw CharnError("bandwidth rule needs n >= 1");
    const double exponent = -2.0 / (6.0 + std::sqrt(3.0));
    return sigma2_hat * std::pow(static_cast<double>(n), exponent);
}

WeightFn default_weight(long n) {
    if (n < 2) throw CharnError("default weight needs n >= 2");
    const double l = std::log(static_cast<double>(n));
    return WeightFn::indicator(-l, l);
}

FittedCurves fit_curves(std::span<const double> eval_points, std::span<const double> lags,
                        std::span<const double> responses, double bandwidth, const Kernel& kernel,
                        VarianceFit variance) {
    validate(lags, responses, bandwidth);
    const std::size_t m = eval_points.size();
    FittedCurves out;
    out.m_hat.resize(m);
    if (variance != VarianceFit::none) out.sigma2_hat.resize(m);

    // Exceptions must not cross the parallel region; record the first
    // failing point and rethrow after the join.
    std::ptrdiff_t first_empty = -1;

#ifdef _OPENMP
    const bool use_threads = !omp_in_parallel();
#else
    const bool use_threads = false;
#endif

#pragma omp parallel if (use_threads)
    {
        std::vector<double> scratch(lags.size());
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
            const PointFit fit = fit_point(eval_points[static_cast<std::size_t>(i)], lags,
                                           responses, bandwidth, kernel, variance, scratch);
            if (fit.empty) {
#pragma omp critical
                if (first_empty < 0 || i < first_empty) first_empty = i;
                continue;
            }
            out.m_hat[static_cast<std::size_t>(i)] = fit.m_hat;
            if (variance != VarianceFit::none)
                out.sigma2_hat[static_cast<std::size_t>(i)] = fit.sigma2_hat;
        }
    }

    if (first_empty >= 0) throw EmptyNeighborhood(eval_points[static_cast<std::size_t>(first_empty)]);
    return out;
}

FittedCurves fit_curves_serial(std::span<const double> eval_points, std::span<const double> lags,
                               std::span<const double> responses, double bandwidth,
                               const Kernel& kernel, VarianceFit variance) {
    validate(lags, responses, bandwidth);
    const std::size_t m = eval_points.size();
    FittedCurves out;
    out.m_hat.resize(m);
    if (variance != VarianceFit::none) out.sigma2_hat.resize(m);

    std::vector<double> scratch(lags.size());
    for (std::size_t i = 0; i < m; ++i) {
        const PointFit fit =
            fit_point(eval_points[i], lags, responses, bandwidth, kernel, variance, scratch);
        if (fit.empty) throw EmptyNeighborhood(eval_points[i]);
        out.m_hat[i] = fit.m_hat;
        if (variance != VarianceFit::none) out.sigma2_hat[i] = fit.sigma2_hat;
    }
    return out;
}

}  // namespace charn
