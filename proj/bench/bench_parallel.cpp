// Times the OpenMP kernels against their serial reference implementations:
// the Nadaraya-Watson curve fits and a Monte Carlo cell.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "charn/mc.hpp"
#include "charn/rng.hpp"
#include "charn/smooth.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_fit(std::size_t n, int repeats) {
    charn::RandomStream rng(1);
    std::vector<double> lags(n), resp(n);
    for (std::size_t i = 0; i < n; ++i) {
        lags[i] = rng.next_normal();
        resp[i] = 0.5 * lags[i] + rng.next_normal();
    }
    const charn::Kernel kernel = charn::Kernel::gaussian();

    volatile double sink = 0.0;
    auto t0 = clock_type::now();
    for (int r = 0; r < repeats; ++r) {
        const auto fit = charn::fit_curves_serial(lags, lags, resp, 0.3, kernel,
                                                  charn::VarianceFit::centered);
        sink = sink + fit.m_hat[0];
    }
    const double serial = seconds_since(t0) / repeats;

    t0 = clock_type::now();
    for (int r = 0; r < repeats; ++r) {
        const auto fit =
            charn::fit_curves(lags, lags, resp, 0.3, kernel, charn::VarianceFit::centered);
        sink = sink + fit.m_hat[0];
    }
    const double parallel = seconds_since(t0) / repeats;

    std::printf("fit_curves  n=%5zu   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n", n,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

void bench_cell(int n, int reps) {
    charn::McCell cell;
    cell.model = charn::McModel::ar1();
    cell.test = charn::McTest::ar_arch;
    cell.zeta = 0.0;
    cell.n = n;
    cell.reps = reps;

    auto t0 = clock_type::now();
    const auto serial_result = charn::run_cell(cell, 99, charn::RunPolicy::serial);
    const double serial = seconds_since(t0);

    t0 = clock_type::now();
    const auto parallel_result = charn::run_cell(cell, 99, charn::RunPolicy::parallel);
    const double parallel = seconds_since(t0);

    std::printf("run_cell    n=%5d R=%3d serial %8.3f s    parallel %8.3f s    speedup %.2fx%s\n",
                n, reps, serial, parallel, serial / parallel,
                serial_result.rejection_rate == parallel_result.rejection_rate
                    ? ""
                    : "  RATE MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif
    bench_fit(200, 20);
    bench_fit(1000, 5);
    bench_fit(4000, 2);
    bench_cell(100, 100);
    bench_cell(300, 50);
    return 0;
}
