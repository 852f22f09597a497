#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "charn/gof.hpp"

namespace charn {

/// Data-generating models of the simulation study.
struct McModel {
    enum class Kind { ar1, arch1 };
    Kind kind = Kind::ar1;
    double theta = 0.5;  // ar1: X_t = theta X_{t-1} + eps_t
    double a = 0.75;     // arch1: X_t = sqrt(a + b X_{t-1}^2) eps_t
    double b = 0.25;

    static McModel ar1(double theta = 0.5) { return {Kind::ar1, theta, 0.0, 0.0}; }
    static McModel arch1(double a = 0.75, double b = 0.25) { return {Kind::arch1, 0.0, a, b}; }
};

enum class McFamily { skew_normal, standardized_t };
enum class McTest { ar_arch, ar, arch };

std::string to_string(McModel::Kind kind);
std::string to_string(McFamily family);
std::string to_string(McTest test);

/// One experiment grid: the cartesian product of tests x sample sizes x
/// zeta values under a fixed model, innovation family, replication count
/// and seed.
struct McConfig {
    McModel model;
    McFamily family = McFamily::skew_normal;
    std::vector<double> zetas;
    std::vector<int> sample_sizes;
    int reps = 500;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::vector<McTest> tests;
};

/// A single grid point.
struct McCell {
    McModel model;
    McFamily family = McFamily::skew_normal;
    McTest test = McTest::ar_arch;
    double zeta = 0.0;
    int n = 0;
    int reps = 500;
    double alpha = 0.05;
};

struct McCellResult {
    McCell cell;
    double rejection_rate = 0.0;
    double mc_stderr = 0.0;
    int errors = 0;  // replications excluded from the rate
    double elapsed_seconds = 0.0;
};

struct McResult {
    std::vector<McCellResult> cells;
};

enum class RunPolicy { parallel, serial };

/// Runs the cell's replications. Each replication derives its own random
/// stream from (master_seed, cell identity, replication index), so the
/// rejection counts, and hence the rates, are identical for any execution
/// order or worker count. Errored replications are excluded from the rate
/// denominator; more than 1% of them fails the cell loudly.
McCellResult run_cell(const McCell& cell, std::uint64_t master_seed,
                      RunPolicy policy = RunPolicy::parallel);

using McProgress = std::function<void(const McCellResult&)>;

/// Runs every cell of the grid. The result is a pure function of the
/// config; elapsed times are the only fields that vary between runs.
McResult run_table(const McConfig& config, RunPolicy policy = RunPolicy::parallel,
                   const McProgress& progress = {});

/// Soft monotone-trend checks: power nondecreasing in n for fixed
/// alternatives, nondecreasing in zeta for skew-normal alternatives and
/// nonincreasing in zeta for Student-t, each up to `se_slack` Monte Carlo
/// standard errors. Returns human-readable descriptions of violations.
std::vector<std::string> trend_warnings(const McResult& result, double se_slack = 3.0);

/// CSV with columns model,test,zeta,n,R,alpha,rejection_rate,stderr,errors.
void write_csv(std::ostream& out, const McResult& result);

/// JSON array of objects with the same fields as the CSV.
void write_json(std::ostream& out, const McResult& result);

/// The simulation-study grids, reproduced as preset configs.
std::vector<McConfig> preset_table3(std::uint64_t seed, int reps = 500, double alpha = 0.05);
std::vector<McConfig> preset_table4(std::uint64_t seed, int reps = 500, double alpha = 0.05);
std::vector<McConfig> preset_table5(std::uint64_t seed, int reps = 500, double alpha = 0.05);

/// Runs a list of configs and concatenates the cells.
McResult run_tables(const std::vector<McConfig>& configs, RunPolicy policy = RunPolicy::parallel,
                    const McProgress& progress = {});

}  // namespace charn
