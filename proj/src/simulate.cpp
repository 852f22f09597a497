#include "charn/simulate.hpp"

#include <cmath>
#include <vector>

#include "charn/errors.hpp"

namespace charn {

Series simulate_with(const std::function<double(double)>& mean_fn,
                     const std::function<double(double)>& vol_fn, double x0, long n,
                     const std::function<double()>& next_innovation) {
    if (n < 2) throw CharnError("simulate requires n >= 2");
    if (!mean_fn || !vol_fn) throw CharnError("CharnSpec needs both mean and volatility functions");

    const long total_steps = 10 * n;
    std::vector<double> path(static_cast<std::size_t>(total_steps) + 1);
    path[0] = x0;
    for (long t = 1; t <= total_steps; ++t) {
        const double prev = path[static_cast<std::size_t>(t - 1)];
        const double vol = vol_fn(prev);
        if (!(vol > 0.0))
            throw CharnError("volatility function must be strictly positive (got " +
                             std::to_string(vol) + " at x = " + std::to_string(prev) + ")");
        const double next = mean_fn(prev) + vol * next_innovation();
        if (!std::isfinite(next))
            throw SimulationError(static_cast<std::size_t>(t), "state became non-finite");
        path[static_cast<std::size_t>(t)] = next;
    }

    std::vector<double> retained(path.end() - (n + 1), path.end());
    return Series(std::move(retained));
}

Series simulate(const CharnSpec& spec, long n, RandomStream& rng) {
    return simulate_with(spec.mean_fn, spec.vol_fn, spec.x0, n,
                         [&spec, &rng] { return spec.innovation.sample(rng); });
}

}  // namespace charn
