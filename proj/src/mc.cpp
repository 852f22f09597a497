#include "charn/mc.hpp"

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <system_error>

#include "charn/errors.hpp"
#include "charn/rng.hpp"
#include "charn/simulate.hpp"

namespace charn {

std::string to_string(McModel::Kind kind) {
    return kind == McModel::Kind::ar1 ? "ar1" : "arch1";
}

std::string to_string(McFamily family) {
    return family == McFamily::skew_normal ? "skew_normal" : "standardized_t";
}

std::string to_string(McTest test) {
    switch (test) {
        case McTest::ar_arch: return "ar_arch";
        case McTest::ar: return "ar";
        case McTest::arch: return "arch";
    }
    return {};
}

namespace {

// Shortest round-trip decimal form; keeps emitted files bit-identical
// across runs and locale-independent.
std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Stream identity of a cell is a hash of its semantic parameters, so the
// randomness a replication sees does not depend on where the cell sits in
// a grid or which other cells are run.
std::uint64_t cell_hash(const McCell& cell) {
    std::uint64_t h = 0x636861726e2d6d63ull;
    h = hash_combine(h, static_cast<std::uint64_t>(cell.model.kind));
    h = hash_combine(h, std::bit_cast<std::uint64_t>(cell.model.theta));
    h = hash_combine(h, std::bit_cast<std::uint64_t>(cell.model.a));
    h = hash_combine(h, std::bit_cast<std::uint64_t>(cell.model.b));
    h = hash_combine(h, static_cast<std::uint64_t>(cell.family));
    h = hash_combine(h, static_cast<std::uint64_t>(cell.test));
    h = hash_combine(h, std::bit_cast<std::uint64_t>(cell.zeta));
    h = hash_combine(h, static_cast<std::uint64_t>(cell.n));
    return h;
}

InnovationSpec innovation_for(McFamily family, double zeta) {
    if (family == McFamily::skew_normal) return InnovationSpec::skew_normal(zeta);
    return InnovationSpec::standardized_t(static_cast<int>(std::lround(zeta)));
}

CharnSpec charn_spec_for(const McModel& model, const InnovationSpec& innovation) {
    CharnSpec spec;
    spec.innovation = innovation;
    if (model.kind == McModel::Kind::ar1) {
        const double theta = model.theta;
        spec.mean_fn = [theta](double x) { return theta * x; };
        spec.vol_fn = [](double) { return 1.0; };
    } else {
        const double a = model.a;
        const double b = model.b;
        spec.mean_fn = [](double) { return 0.0; };
        spec.vol_fn = [a, b](double x) { return std::sqrt(a + b * x * x); };
    }
    return spec;
}

bool run_one_replication(const McCell& cell, std::uint64_t master_seed, int rep) {
    RandomStream rng = RandomStream::derive(master_seed, cell_hash(cell), static_cast<std::uint64_t>(rep));
    const InnovationSpec innovation = innovation_for(cell.family, cell.zeta);
    const CharnSpec spec = charn_spec_for(cell.model, innovation);
    const Series series = simulate(spec, cell.n, rng);

    TestConfig cfg;
    cfg.alpha = cell.alpha;
    switch (cell.test) {
        case McTest::ar_arch: return test_gaussian_ararch(series, cfg).reject;
        case McTest::ar: return test_gaussian_ar(series, cfg).reject;
        case McTest::arch: return test_gaussian_arch(series, cfg).reject;
    }
    return false;
}

}  // namespace

McCellResult run_cell(const McCell& cell, std::uint64_t master_seed, RunPolicy policy) {
    if (cell.reps < 1) throw CharnError("a Monte Carlo cell needs at least one replication");
    if (cell.n < 20) throw CharnError("Monte Carlo cells require n >= 20");

    const auto start = std::chrono::steady_clock::now();
    long rejects = 0;
    long errors = 0;
    std::string first_error;

    if (policy == RunPolicy::serial) {
        for (int rep = 0; rep < cell.reps; ++rep) {
            try {
                rejects += run_one_replication(cell, master_seed, rep) ? 1 : 0;
            } catch (const CharnError& e) {
                if (errors == 0) first_error = e.what();
                ++errors;
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : rejects, errors)
        for (int rep = 0; rep < cell.reps; ++rep) {
            try {
                rejects += run_one_replication(cell, master_seed, rep) ? 1 : 0;
            } catch (const CharnError& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
                ++errors;
            }
        }
    }

    if (errors * 100 > cell.reps)
        throw CharnError("cell " + to_string(cell.test) + " zeta=" + format_double(cell.zeta) +
                         " n=" + std::to_string(cell.n) + ": " + std::to_string(errors) + "/" +
                         std::to_string(cell.reps) +
                         " replications errored (first: " + first_error + ")");
    const long effective = cell.reps - errors;
    if (effective == 0) throw CharnError("every replication errored: " + first_error);

    McCellResult result;
    result.cell = cell;
    result.rejection_rate = static_cast<double>(rejects) / static_cast<double>(effective);
    result.mc_stderr = std::sqrt(result.rejection_rate * (1.0 - result.rejection_rate) /
                                 static_cast<double>(effective));
    result.errors = static_cast<int>(errors);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

McResult run_table(const McConfig& config, RunPolicy policy, const McProgress& progress) {
    McResult result;
    for (McTest test : config.tests)
        for (int n : config.sample_sizes)
            for (double zeta : config.zetas) {
                McCell cell{config.model, config.family, test, zeta, n, config.reps, config.alpha};
                McCellResult cr = run_cell(cell, config.seed, policy);
                if (progress) progress(cr);
                result.cells.push_back(std::move(cr));
            }
    return result;
}

McResult run_tables(const std::vector<McConfig>& configs, RunPolicy policy,
                    const McProgress& progress) {
    McResult all;
    for (const McConfig& config : configs) {
        McResult part = run_table(config, policy, progress);
        for (auto& cell : part.cells) all.cells.push_back(std::move(cell));
    }
    return all;
}

std::vector<std::string> trend_warnings(const McResult& result, double se_slack) {
    std::vector<std::string> warnings;
    auto same_block = [](const McCell& a, const McCell& b) {
        return a.model.kind == b.model.kind && a.family == b.family && a.test == b.test &&
               a.alpha == b.alpha;
    };
    auto step_se = [](const McCellResult& a, const McCellResult& b) {
        return std::sqrt(a.mc_stderr * a.mc_stderr + b.mc_stderr * b.mc_stderr);
    };
    auto describe = [](const McCellResult& a, const McCellResult& b, const char* what) {
        return std::string(what) + " violated between (" + to_string(a.cell.test) +
               ", zeta=" + std::to_string(a.cell.zeta) + ", n=" + std::to_string(a.cell.n) +
               ") and (zeta=" + std::to_string(b.cell.zeta) + ", n=" + std::to_string(b.cell.n) +
               "): " + std::to_string(a.rejection_rate) + " -> " + std::to_string(b.rejection_rate);
    };

    const auto& cells = result.cells;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (i == j || !same_block(cells[i].cell, cells[j].cell)) continue;
            const McCell& a = cells[i].cell;
            const McCell& b = cells[j].cell;
            const double slack = se_slack * step_se(cells[i], cells[j]);

            // Power nondecreasing in n at a fixed alternative. Under the
            // skew-normal family zeta = 0 is the null, where no trend is
            // implied.
            const bool is_null = a.family == McFamily::skew_normal && a.zeta == 0.0;
            if (!is_null && a.zeta == b.zeta && a.n < b.n &&
                cells[j].rejection_rate < cells[i].rejection_rate - slack)
                warnings.push_back(describe(cells[i], cells[j], "power nondecreasing in n"));

            if (a.n == b.n && a.zeta < b.zeta) {
                if (a.family == McFamily::skew_normal && a.zeta > 0.0 &&
                    cells[j].rejection_rate < cells[i].rejection_rate - slack)
                    warnings.push_back(
                        describe(cells[i], cells[j], "power nondecreasing in zeta (skew-normal)"));
                if (a.family == McFamily::standardized_t &&
                    cells[j].rejection_rate > cells[i].rejection_rate + slack)
                    warnings.push_back(
                        describe(cells[i], cells[j], "power nonincreasing in zeta (Student-t)"));
            }
        }
    return warnings;
}

void write_csv(std::ostream& out, const McResult& result) {
    out << "model,test,zeta,n,R,alpha,rejection_rate,stderr,errors\n";
    for (const McCellResult& c : result.cells) {
        out << to_string(c.cell.model.kind) << ',' << to_string(c.cell.test) << ','
            << format_double(c.cell.zeta) << ',' << c.cell.n << ',' << c.cell.reps << ','
            << format_double(c.cell.alpha) << ',' << format_double(c.rejection_rate) << ','
            << format_double(c.mc_stderr) << ',' << c.errors << '\n';
    }
}

void write_json(std::ostream& out, const McResult& result) {
    out << "[\n";
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const McCellResult& c = result.cells[i];
        out << "  {\"model\": \"" << to_string(c.cell.model.kind) << "\", \"test\": \""
            << to_string(c.cell.test) << "\", \"zeta\": " << format_double(c.cell.zeta)
            << ", \"n\": " << c.cell.n << ", \"R\": " << c.cell.reps
            << ", \"alpha\": " << format_double(c.cell.alpha)
            << ", \"rejection_rate\": " << format_double(c.rejection_rate)
            << ", \"stderr\": " << format_double(c.mc_stderr) << ", \"errors\": " << c.errors
            << "}" << (i + 1 < result.cells.size() ? "," : "") << "\n";
    }
    out << "]\n";
}

namespace {

const std::vector<double> kSkewZetas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.6, 0.8, 1.0};
const std::vector<double> kStudentZetas = {3, 4, 5, 6, 7};

}  // namespace

std::vector<McConfig> preset_table3(std::uint64_t seed, int reps, double alpha) {
    McConfig cfg;
    cfg.model = McModel::ar1();
    cfg.family = McFamily::skew_normal;
    cfg.zetas = kSkewZetas;
    cfg.sample_sizes = {100, 200};
    cfg.reps = reps;
    cfg.alpha = alpha;
    cfg.seed = seed;
    cfg.tests = {McTest::ar_arch, McTest::ar};
    return {cfg};
}

std::vector<McConfig> preset_table4(std::uint64_t seed, int reps, double alpha) {
    McConfig ararch;
    ararch.model = McModel::arch1();
    ararch.family = McFamily::skew_normal;
    ararch.zetas = kSkewZetas;
    ararch.sample_sizes = {100, 200};
    ararch.reps = reps;
    ararch.alpha = alpha;
    ararch.seed = seed;
    ararch.tests = {McTest::ar_arch};

    // The ARCH-variant block additionally includes n = 500.
    McConfig arch = ararch;
    arch.sample_sizes = {100, 200, 500};
    arch.tests = {McTest::arch};
    return {ararch, arch};
}

std::vector<McConfig> preset_table5(std::uint64_t seed, int reps, double alpha) {
    McConfig ar_block;
    ar_block.model = McModel::ar1();
    ar_block.family = McFamily::standardized_t;
    ar_block.zetas = kStudentZetas;
    ar_block.sample_sizes = {100, 200, 500};
    ar_block.reps = reps;
    ar_block.alpha = alpha;
    ar_block.seed = seed;
    ar_block.tests = {McTest::ar_arch, McTest::ar};

    McConfig arch_block = ar_block;
    arch_block.model = McModel::arch1();
    arch_block.tests = {McTest::ar_arch, McTest::arch};
    return {ar_block, arch_block};
}

}  // namespace charn
