#include "charn/gof.hpp"

#include <cmath>

#include "charn/errors.hpp"
#include "charn/stats.hpp"

namespace charn {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

std::span<const double> lags_of(const Series& s) { return {s.values().data(), s.pair_count()}; }
std::span<const double> responses_of(const Series& s) {
    return {s.values().data() + 1, s.pair_count()};
}

}  // namespace

double CriticalTable::critical_at(double alpha, bool interpolate) const {
    constexpr double tol = 1e-12;
    for (const Row& row : rows)
        if (std::fabs(row.alpha - alpha) <= tol) return row.critical;
    if (!interpolate) throw UntabulatedAlpha(alpha);
    if (alpha < rows.front().alpha || alpha > rows.back().alpha) throw UntabulatedAlpha(alpha);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (alpha >= rows[i].alpha && alpha <= rows[i + 1].alpha) {
            const double t = (std::log(alpha) - std::log(rows[i].alpha)) /
                             (std::log(rows[i + 1].alpha) - std::log(rows[i].alpha));
            return rows[i].critical + t * (rows[i + 1].critical - rows[i].critical);
        }
    }
    throw UntabulatedAlpha(alpha);
}

const CriticalTable& table_ararch() {
    static const CriticalTable table{
        {{0.01, 0.237}, {0.025, 0.196}, {0.05, 0.165}, {0.1, 0.135}, {0.15, 0.118}},
        LimitKind::shifted_bridge};
    return table;
}

const CriticalTable& table_arch() {
    static const CriticalTable table{
        {{0.01, 0.743}, {0.02, 0.6198}, {0.05, 0.461}, {0.1, 0.347}, {0.15, 0.284}},
        LimitKind::brownian_bridge};
    return table;
}

namespace {

// Inputs shared by all the decision procedures once defaults are resolved.
struct Prepared {
    long n;
    double bandwidth;
    WeightFn weight;
    Diagnostics diag;
};

double sample_variance(const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double acc = 0.0;
    for (double v : x) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(x.size());
}

// Resolves the default bandwidth the way the simulation protocol does:
// the rule of thumb needs the AR-pipeline residual variance, which itself
// needs a mean fit, so a pilot fit with the sample-variance bandwidth
// bootstraps the rule.
Prepared prepare(const Series& series, const TestConfig& cfg) {
    const long n = static_cast<long>(series.pair_count());
    Prepared prep{n, 0.0, cfg.weight ? *cfg.weight : default_weight(n), {}};

    if (n < 20)
        prep.diag.warnings.push_back(
            "sample size n = " + std::to_string(n) +
            " is below the recommended floor of 20; the asymptotic calibration may be poor");

    const auto lags = lags_of(series);
    const auto resp = responses_of(series);

    double w_total = 0.0;
    for (double x : lags) w_total += prep.weight(x);
    if (w_total == 0.0) throw DegenerateWeights();

    if (cfg.bandwidth) {
        if (!(*cfg.bandwidth > 0.0)) throw CharnError("bandwidth override must be positive");
        prep.bandwidth = *cfg.bandwidth;
    } else {
        const double pilot = bandwidth_rule(sample_variance(series.values()), n);
        const FittedCurves mfit = fit_curves(lags, lags, resp, pilot, cfg.kernel, VarianceFit::none);
        double s2 = 0.0;
        for (std::size_t t = 0; t < lags.size(); ++t) {
            const double d = resp[t] - mfit.m_hat[t];
            s2 += prep.weight(lags[t]) / w_total * d * d;
        }
        if (!(s2 > 0.0))
            throw NonpositiveVariance("pilot residual variance is nonpositive (" +
                                      std::to_string(s2) + ")");
        prep.bandwidth = bandwidth_rule(s2, n);
    }

    prep.diag.n = n;
    prep.diag.bandwidth = prep.bandwidth;
    prep.diag.weight_lower = prep.weight.lower();
    prep.diag.weight_upper = prep.weight.upper();
    prep.diag.weight_mass = w_total / static_cast<double>(n);
    return prep;
}

TestReport gaussianity_test(const Series& series, const TestConfig& cfg, ModelVariant variant,
                            const CriticalTable& table, const char* name) {
    Prepared prep = prepare(series, cfg);
    const ResidualSet rs = residuals(series, variant, prep.bandwidth, cfg.kernel, prep.weight);
    const CvmValue t = cvm_vs_normal(edf(rs), prep.n);

    TestReport report;
    report.statistic = t.value;
    report.alpha = cfg.alpha;
    report.critical = table.critical_at(cfg.alpha, cfg.interpolate_alpha);
    report.reject = report.statistic > report.critical;
    report.variant = name;
    report.diagnostics = std::move(prep.diag);
    return report;
}

}  // namespace

TestReport test_gaussian_ararch(const Series& series, const TestConfig& cfg) {
    return gaussianity_test(series, cfg, ModelVariant::ar_arch, table_ararch(), "gaussian-ar-arch");
}

TestReport test_gaussian_ar(const Series& series, const TestConfig& cfg) {
    return gaussianity_test(series, cfg, ModelVariant::ar, table_ararch(), "gaussian-ar");
}

TestReport test_gaussian_arch(const Series& series, const TestConfig& cfg) {
    return gaussianity_test(series, cfg, ModelVariant::arch, table_arch(), "gaussian-arch");
}

double estimate_theta(const Series& series, ThetaMethod method) {
    const auto lags = lags_of(series);
    const auto resp = responses_of(series);
    if (lags.size() < 2) throw CharnError("estimate_theta needs a series of length >= 3");

    double num = 0.0;
    for (std::size_t t = 0; t < lags.size(); ++t) num += resp[t] * lags[t];

    double den = 0.0;
    if (method == ThetaMethod::ols) {
        for (double x : lags) den += x * x;
    } else {
        // gamma_hat(1)/gamma_hat(0) with uncentered moments over all
        // observations; the common 1/N factors cancel in the ratio.
        for (double x : series.values()) den += x * x;
    }
    if (den == 0.0) throw ZeroDenominator("zero denominator in AR(1) coefficient estimate");
    return num / den;
}

TestReport test_linear_ar1(const Series& series, const TestConfig& cfg) {
    Prepared prep = prepare(series, cfg);
    const double theta = estimate_theta(series, cfg.theta_method);
    if (std::fabs(theta) >= 1.0)
        prep.diag.warnings.push_back("theta_hat = " + std::to_string(theta) +
                                     " is outside (-1,1); the null model is nonstationary");

    const ResidualSet rs = residuals(series, ModelVariant::ar, prep.bandwidth, cfg.kernel, prep.weight);
    const StepEDF f_n = edf(rs);
    const auto [f_0, sigma2] = edf_null_linear_ar(series, theta);
    (void)sigma2;

    TestReport report;
    report.statistic = 2.0 * kSqrtPi * static_cast<double>(prep.n) * l2_distance_edfs(f_n, f_0);
    report.alpha = cfg.alpha;
    report.critical = chi2_1_quantile(1.0 - cfg.alpha);
    report.reject = report.statistic > report.critical;
    report.variant = "linear-ar1";
    report.diagnostics = std::move(prep.diag);
    report.diagnostics.theta_hat = theta;
    return report;
}

double estimate_c(const ResidualSet& ararch_fit) {
    if (ararch_fit.variant != ModelVariant::ar_arch)
        throw CharnError("estimate_c needs an ar_arch residual set");
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < ararch_fit.weights.size(); ++t) {
        const double v = ararch_fit.weights[t];
        if (v <= 0.0) continue;
        const double s2 = ararch_fit.curves.sigma2_hat[t];
        num += v * ararch_fit.curves.m_hat[t] * s2 * std::sqrt(s2);
        den += v * s2 * s2;
    }
    if (den == 0.0) throw ZeroDenominator("zero denominator in multiplicative-constant estimate");
    return num / den;
}

double estimate_c(const Series& series, double bandwidth, const Kernel& kernel,
                  const WeightFn& weight) {
    return estimate_c(residuals(series, ModelVariant::ar_arch, bandwidth, kernel, weight));
}

namespace {

TestReport multiplicative_core(const Series& series, const TestConfig& cfg, const ResidualSet& rs,
                               Diagnostics diag) {
    const double c_hat = estimate_c(rs);
    double s4 = 0.0, s8 = 0.0;
    for (std::size_t t = 0; t < rs.weights.size(); ++t) {
        const double v = rs.weights[t];
        if (v <= 0.0) continue;
        const double s2 = rs.curves.sigma2_hat[t];
        s4 += v * s2 * s2;
        s8 += v * s2 * s2 * s2 * s2;
    }
    if (s4 == 0.0) throw ZeroDenominator("zero s_4 in multiplicative test");
    const double tau2 = s8 / (s4 * s4) - 1.0;
    if (tau2 <= cfg.tau_min) throw DegenerateTau(tau2);

    const StepEDF f_n = edf(rs);
    const StepEDF f_0 = edf_null_multiplicative(rs, series, c_hat);
    const long n = static_cast<long>(series.pair_count());

    TestReport report;
    const double scale = std::pow(0.75 * c_hat * c_hat + 1.0, cfg.mult_exponent) * tau2;
    report.statistic =
        2.0 * kSqrtPi * static_cast<double>(n) * l2_distance_edfs(f_n, f_0) / scale;
    report.alpha = cfg.alpha;
    report.critical = chi2_1_quantile(1.0 - cfg.alpha);
    report.reject = report.statistic > report.critical;
    report.variant = "multiplicative";
    report.diagnostics = std::move(diag);
    report.diagnostics.c_hat = c_hat;
    report.diagnostics.tau2_hat = tau2;
    return report;
}

}  // namespace

TestReport test_multiplicative(const Series& series, const TestConfig& cfg) {
    Prepared prep = prepare(series, cfg);
    const ResidualSet rs =
        residuals(series, ModelVariant::ar_arch, prep.bandwidth, cfg.kernel, prep.weight);
    return multiplicative_core(series, cfg, rs, std::move(prep.diag));
}

TestReport test_multiplicative(const Series& series, const TestConfig& cfg,
                               const ResidualSet& ararch_fit) {
    Diagnostics diag;
    diag.n = static_cast<long>(series.pair_count());
    return multiplicative_core(series, cfg, ararch_fit, std::move(diag));
}

}  // namespace charn
