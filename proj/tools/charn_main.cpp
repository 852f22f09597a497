// Command-line front end: run the innovation-Gaussianity and specification
// tests on a series file, simulate the study's processes, and reproduce the
// Monte Carlo tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charn/errors.hpp"
#include "charn/gof.hpp"
#include "charn/mc.hpp"
#include "charn/rng.hpp"
#include "charn/series_io.hpp"
#include "charn/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDataError = 2;
constexpr int kExitRejected = 3;

struct TestOptions {
    std::string variant = "ar-arch";
    double alpha = 0.05;
    std::string input;
    std::optional<double> bandwidth;
    std::string kernel = "gaussian";
    double kernel_support = 1.0;
    std::optional<double> weight_a;
    std::optional<double> weight_b;
    std::optional<double> weight_kappa;
    bool interpolate = false;
    std::string theta_method = "ols";
    double mult_exponent = 1.0;
    std::string format = "text";
    std::string output;
};

struct SimulateOptions {
    std::string model = "ar1";
    double theta = 0.5;
    double arch_a = 0.75;
    double arch_b = 0.25;
    std::string innovation = "skew-normal";
    double zeta = 0.0;
    long n = 100;
    std::uint64_t seed = 0;
    double x0 = 0.0;
    std::string output;
};

struct McOptions {
    std::string preset = "table3";
    int reps = 500;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    std::string format = "csv";
    std::string output;
    bool quiet = false;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw charn::CharnError("cannot open output file '" + path + "'");
    return file;
}

charn::TestConfig make_config(const TestOptions& opt) {
    charn::TestConfig cfg;
    cfg.alpha = opt.alpha;
    cfg.bandwidth = opt.bandwidth;
    cfg.interpolate_alpha = opt.interpolate;
    cfg.mult_exponent = opt.mult_exponent;
    if (opt.kernel == "gaussian")
        cfg.kernel = charn::Kernel::gaussian();
    else if (opt.kernel == "quartic")
        cfg.kernel = charn::Kernel::quartic(opt.kernel_support);
    else if (opt.kernel == "triweight")
        cfg.kernel = charn::Kernel::triweight(opt.kernel_support);
    else
        throw CLI::ValidationError("--kernel", "unknown kernel '" + opt.kernel + "'");
    if (opt.weight_a || opt.weight_b) {
        if (!(opt.weight_a && opt.weight_b))
            throw CLI::ValidationError("--weight-a/--weight-b", "both endpoints are required");
        cfg.weight = opt.weight_kappa
                         ? charn::WeightFn::smooth(*opt.weight_a, *opt.weight_b, *opt.weight_kappa)
                         : charn::WeightFn::indicator(*opt.weight_a, *opt.weight_b);
    }
    cfg.theta_method = opt.theta_method == "yule-walker" ? charn::ThetaMethod::yule_walker
                                                         : charn::ThetaMethod::ols;
    return cfg;
}

nlohmann::json report_to_json(const charn::TestReport& report) {
    nlohmann::json j{{"variant", report.variant},
                     {"statistic", report.statistic},
                     {"alpha", report.alpha},
                     {"critical", report.critical},
                     {"reject", report.reject}};
    const auto& d = report.diagnostics;
    j["diagnostics"] = {{"n", d.n},
                        {"bandwidth", d.bandwidth},
                        {"weight_support", {d.weight_lower, d.weight_upper}},
                        {"weight_mass", d.weight_mass}};
    if (d.theta_hat) j["diagnostics"]["theta_hat"] = *d.theta_hat;
    if (d.c_hat) j["diagnostics"]["c_hat"] = *d.c_hat;
    if (d.tau2_hat) j["diagnostics"]["tau2_hat"] = *d.tau2_hat;
    if (!d.warnings.empty()) j["diagnostics"]["warnings"] = d.warnings;
    return j;
}

void print_report(std::ostream& out, const charn::TestReport& report, const std::string& format) {
    const auto& d = report.diagnostics;
    if (format == "json") {
        out << report_to_json(report).dump(2) << '\n';
    } else if (format == "csv") {
        out << "variant,n,statistic,alpha,critical,reject\n"
            << report.variant << ',' << d.n << ',' << report.statistic << ',' << report.alpha
            << ',' << report.critical << ',' << (report.reject ? 1 : 0) << '\n';
    } else {
        out << "test:       " << report.variant << '\n'
            << "n:          " << d.n << '\n'
            << "bandwidth:  " << d.bandwidth << '\n'
            << "weight:     [" << d.weight_lower << ", " << d.weight_upper << "]"
            << "  (mass " << d.weight_mass << ")\n";
        if (d.theta_hat) out << "theta_hat:  " << *d.theta_hat << '\n';
        if (d.c_hat) out << "c_hat:      " << *d.c_hat << '\n';
        if (d.tau2_hat) out << "tau2_hat:   " << *d.tau2_hat << '\n';
        out << "statistic:  " << report.statistic << '\n'
            << "critical:   " << report.critical << "  (alpha = " << report.alpha << ")\n"
            << "decision:   " << (report.reject ? "reject" : "fail to reject") << '\n';
    }
    for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_test(const TestOptions& opt) {
    std::ifstream file(opt.input);
    if (!file) {
        std::cerr << "error: cannot open input file '" << opt.input << "'\n";
        return kExitUsage;
    }

    // Malformed content is a data error (exit 2); a file that parses but
    // carries too few observations violates the precondition and is a
    // usage error (exit 1).
    std::vector<double> values = charn::read_values(file);
    if (values.size() < 21) {
        std::cerr << "error: '" << opt.input << "' holds " << values.size()
                  << " observations; the tests need at least 21\n";
        return kExitUsage;
    }
    charn::Series series(std::move(values), opt.input);

    const charn::TestConfig cfg = make_config(opt);
    charn::TestReport report;
    if (opt.variant == "ar-arch")
        report = charn::test_gaussian_ararch(series, cfg);
    else if (opt.variant == "ar")
        report = charn::test_gaussian_ar(series, cfg);
    else if (opt.variant == "arch")
        report = charn::test_gaussian_arch(series, cfg);
    else if (opt.variant == "linear-ar1")
        report = charn::test_linear_ar1(series, cfg);
    else if (opt.variant == "multiplicative")
        report = charn::test_multiplicative(series, cfg);
    else
        throw CLI::ValidationError("--variant", "unknown variant '" + opt.variant + "'");

    std::ofstream out_file;
    print_report(open_output(opt.output, out_file), report, opt.format);
    return report.reject ? kExitRejected : kExitOk;
}

int cmd_simulate(const SimulateOptions& opt) {
    charn::CharnSpec spec;
    spec.x0 = opt.x0;
    if (opt.innovation == "normal")
        spec.innovation = charn::InnovationSpec::standard_normal();
    else if (opt.innovation == "skew-normal")
        spec.innovation = charn::InnovationSpec::skew_normal(opt.zeta);
    else if (opt.innovation == "student-t")
        spec.innovation = charn::InnovationSpec::standardized_t(static_cast<int>(opt.zeta));
    else
        throw CLI::ValidationError("--innovation", "unknown innovation '" + opt.innovation + "'");

    std::ostringstream header;
    header << "charn simulate seed=" << opt.seed << " model=" << opt.model;
    if (opt.model == "ar1") {
        const double theta = opt.theta;
        spec.mean_fn = [theta](double x) { return theta * x; };
        spec.vol_fn = [](double) { return 1.0; };
        header << " theta=" << opt.theta;
    } else if (opt.model == "arch1") {
        const double a = opt.arch_a;
        const double b = opt.arch_b;
        spec.mean_fn = [](double) { return 0.0; };
        spec.vol_fn = [a, b](double x) { return std::sqrt(a + b * x * x); };
        header << " a=" << opt.arch_a << " b=" << opt.arch_b;
    } else {
        throw CLI::ValidationError("--model", "unknown model '" + opt.model + "'");
    }
    header << " innovation=" << opt.innovation << " zeta=" << opt.zeta << " n=" << opt.n;

    charn::RandomStream rng(opt.seed);
    charn::Series series = charn::simulate(spec, opt.n, rng);
    charn::Series with_header(series.values(), header.str());

    std::ofstream out_file;
    charn::write_series(open_output(opt.output, out_file), with_header);
    return kExitOk;
}

int cmd_mc_table(const McOptions& opt) {
    std::vector<charn::McConfig> configs;
    if (opt.preset == "table3")
        configs = charn::preset_table3(opt.seed, opt.reps, opt.alpha);
    else if (opt.preset == "table4")
        configs = charn::preset_table4(opt.seed, opt.reps, opt.alpha);
    else if (opt.preset == "table5")
        configs = charn::preset_table5(opt.seed, opt.reps, opt.alpha);
    else
        throw CLI::ValidationError("--preset", "unknown preset '" + opt.preset + "'");

    charn::McProgress progress;
    if (!opt.quiet)
        progress = [](const charn::McCellResult& c) {
            std::cerr << to_string(c.cell.model.kind) << ' ' << to_string(c.cell.test)
                      << " zeta=" << c.cell.zeta << " n=" << c.cell.n << ": rate "
                      << c.rejection_rate << " (" << c.elapsed_seconds << " s)\n";
        };

    const charn::McResult result = charn::run_tables(configs, charn::RunPolicy::parallel, progress);
    for (const auto& warning : charn::trend_warnings(result))
        std::cerr << "trend warning: " << warning << '\n';

    std::ofstream out_file;
    std::ostream& out = open_output(opt.output, out_file);
    if (opt.format == "json")
        charn::write_json(out, result);
    else
        charn::write_csv(out, result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonparametric Gaussianity and specification tests for AR-ARCH innovations"};
    app.require_subcommand(1);

    TestOptions test_opt;
    CLI::App* test = app.add_subcommand("test", "Run a test on a series file");
    test->add_option("--variant", test_opt.variant,
                     "ar-arch | ar | arch | linear-ar1 | multiplicative")
        ->capture_default_str();
    test->add_option("--alpha", test_opt.alpha, "significance level")->capture_default_str();
    test->add_option("--input", test_opt.input, "series file")->required();
    test->add_option("--bandwidth", test_opt.bandwidth, "override the rule-of-thumb bandwidth");
    test->add_option("--kernel", test_opt.kernel, "gaussian | quartic | triweight")
        ->capture_default_str();
    test->add_option("--kernel-support", test_opt.kernel_support,
                     "half-width C of the compact kernels")
        ->capture_default_str();
    test->add_option("--weight-a", test_opt.weight_a, "lower end of the weight support");
    test->add_option("--weight-b", test_opt.weight_b, "upper end of the weight support");
    test->add_option("--weight-kappa", test_opt.weight_kappa,
                     "ramp width; selects the smooth weight");
    test->add_flag("--interpolate", test_opt.interpolate,
                   "allow log-linear interpolation between tabulated levels");
    test->add_option("--theta-method", test_opt.theta_method, "ols | yule-walker")
        ->capture_default_str();
    test->add_option("--mult-exponent", test_opt.mult_exponent,
                     "exponent p in the multiplicative normalization (3/4 c^2 + 1)^p")
        ->capture_default_str();
    test->add_option("--format", test_opt.format, "text | json | csv")->capture_default_str();
    test->add_option("--output", test_opt.output, "output path (default: stdout)");

    SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand("simulate", "Simulate a CHARN process");
    simulate->add_option("--model", sim_opt.model, "ar1 | arch1")->capture_default_str();
    simulate->add_option("--theta", sim_opt.theta, "AR(1) coefficient")->capture_default_str();
    simulate->add_option("--arch-a", sim_opt.arch_a, "ARCH(1) level")->capture_default_str();
    simulate->add_option("--arch-b", sim_opt.arch_b, "ARCH(1) slope")->capture_default_str();
    simulate->add_option("--innovation", sim_opt.innovation, "normal | skew-normal | student-t")
        ->capture_default_str();
    simulate->add_option("--zeta", sim_opt.zeta,
                         "skew parameter, or degrees of freedom for student-t")
        ->capture_default_str();
    simulate->add_option("--n", sim_opt.n, "retained sample size (writes n+1 observations)")
        ->capture_default_str();
    simulate->add_option("--seed", sim_opt.seed, "random seed")->capture_default_str();
    simulate->add_option("--x0", sim_opt.x0, "start value before burn-in")->capture_default_str();
    simulate->add_option("--output", sim_opt.output, "output path (default: stdout)");

    McOptions mc_opt;
    CLI::App* mc = app.add_subcommand("mc-table", "Reproduce a Monte Carlo table");
    mc->add_option("--preset", mc_opt.preset, "table3 | table4 | table5")->capture_default_str();
    mc->add_option("--reps", mc_opt.reps, "replications per cell")->capture_default_str();
    mc->add_option("--seed", mc_opt.seed, "master seed")->capture_default_str();
    mc->add_option("--alpha", mc_opt.alpha, "significance level")->capture_default_str();
    mc->add_option("--format", mc_opt.format, "csv | json")->capture_default_str();
    mc->add_option("--output", mc_opt.output, "output path (default: stdout)");
    mc->add_flag("--quiet", mc_opt.quiet, "suppress per-cell progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (test->parsed()) return cmd_test(test_opt);
        if (simulate->parsed()) return cmd_simulate(sim_opt);
        if (mc->parsed()) return cmd_mc_table(mc_opt);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const charn::CharnError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsage;
}
