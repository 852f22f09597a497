#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charn/resid.hpp"
#include "charn/series.hpp"

namespace charn {

/// Which limit law a critical-value table belongs to.
enum class LimitKind {
    shifted_bridge,   // int G^2: Brownian bridge minus the normal score term
    brownian_bridge,  // int B^2
    chi2_1,
};

/// Tabulated asymptotic critical values; rows ordered by increasing alpha
/// with strictly decreasing critical values.
struct CriticalTable {
    struct Row {
        double alpha;
        double critical;
    };
    std::vector<Row> rows;
    LimitKind limit;

    /// Exact lookup by default; with interpolate, a monotone interpolation
    /// linear in log(alpha) is applied inside the tabulated range (clearly
    /// an approximation). Throws UntabulatedAlpha otherwise.
    double critical_at(double alpha, bool interpolate = false) const;
};

/// Critical values for the AR-ARCH (and AR) Gaussianity test.
const CriticalTable& table_ararch();

/// Critical values for the ARCH Gaussianity test.
const CriticalTable& table_arch();

struct Diagnostics {
    long n = 0;
    double bandwidth = 0.0;
    double weight_lower = 0.0;
    double weight_upper = 0.0;
    double weight_mass = 0.0;  // sum_t w(X_{t-1}) / n
    std::optional<double> theta_hat;
    std::optional<double> c_hat;
    std::optional<double> tau2_hat;
    std::vector<std::string> warnings;
};

struct TestReport {
    double statistic = 0.0;
    double alpha = 0.0;
    double critical = 0.0;
    bool reject = false;  // statistic > critical
    std::string variant;
    Diagnostics diagnostics;
};

enum class ThetaMethod { yule_walker, ols };

/// Shared configuration of the decision procedures. Absent bandwidth or
/// weight fall back to the simulation-protocol defaults: the rule-of-thumb
/// bandwidth seeded by a sample-variance pilot fit, and the indicator
/// weight on [-log n, log n].
struct TestConfig {
    double alpha = 0.05;
    std::optional<double> bandwidth;
    Kernel kernel = Kernel::gaussian();
    std::optional<WeightFn> weight;
    bool interpolate_alpha = false;
    ThetaMethod theta_method = ThetaMethod::ols;  // test_linear_ar1 only
    double mult_exponent = 1.0;                   // test_multiplicative only; 2 gives the printed form
    double tau_min = 1e-8;                        // test_multiplicative only
};

/// Cramér-von Mises Gaussianity test in the full AR-ARCH model.
TestReport test_gaussian_ararch(const Series& series, const TestConfig& cfg);

/// Same test in the homoscedastic AR model (constant variance estimate);
/// shares the AR-ARCH limit law and critical values.
TestReport test_gaussian_ar(const Series& series, const TestConfig& cfg);

/// Same test in the zero-mean ARCH model; Brownian-bridge critical values.
TestReport test_gaussian_arch(const Series& series, const TestConfig& cfg);

/// AR(1) coefficient estimate. Yule-Walker uses mean-uncentered
/// autocovariances (the lack-of-fit theory assumes E[X_0] = 0).
double estimate_theta(const Series& series, ThetaMethod method);

/// Lack-of-fit test of the linear AR(1) null against the nonparametric AR
/// alternative: 2 sqrt(pi) n int (F_n - F_{0,n})^2 dy against chi^2_1.
/// Assumes Gaussianity of the innovations has been established.
TestReport test_linear_ar1(const Series& series, const TestConfig& cfg);

/// Least-squares estimate of c under the multiplicative hypothesis
/// m = c sigma, weighted by sigma_hat^2:
///   c_hat = sum_t v_t m_hat sigma_hat^3 / sum_t v_t sigma_hat^4.
double estimate_c(const ResidualSet& ararch_fit);
double estimate_c(const Series& series, double bandwidth, const Kernel& kernel,
                  const WeightFn& weight);

/// Test of the multiplicative structure m = c sigma. The normalization
/// divides by (3/4 c_hat^2 + 1)^p tau_hat^2 with p = cfg.mult_exponent.
/// Throws DegenerateTau when tau_hat^2 <= cfg.tau_min.
TestReport test_multiplicative(const Series& series, const TestConfig& cfg);

/// Same decision on an existing ar_arch fit (any bandwidth/weight override
/// in cfg is ignored; the fit is taken as given).
TestReport test_multiplicative(const Series& series, const TestConfig& cfg,
                               const ResidualSet& ararch_fit);

}  // namespace charn
