#pragma once

#include <functional>

#include "charn/innovations.hpp"
#include "charn/series.hpp"

namespace charn {

/// A first-order CHARN process X_t = m(X_{t-1}) + sigma(X_{t-1}) eps_t.
/// vol_fn must be strictly positive wherever the chain evaluates it.
struct CharnSpec {
    std::function<double(double)> mean_fn;
    std::function<double(double)> vol_fn;
    InnovationSpec innovation = InnovationSpec::standard_normal();
    double x0 = 0.0;
};

/// Runs the recursion for 10n steps from x0 and keeps the final n+1 values,
/// so the retained window X_0..X_n is approximately stationary (the first
/// 9n steps act as burn-in). Throws SimulationError with the step index if
/// the state leaves the finite range.
Series simulate(const CharnSpec& spec, long n, RandomStream& rng);

/// Same recursion with an arbitrary innovation source; the plain overload
/// forwards here. Exposed so tests can drive the chain with degenerate
/// noise (e.g. eps == 0).
Series simulate_with(const std::function<double(double)>& mean_fn,
                     const std::function<double(double)>& vol_fn, double x0, long n,
                     const std::function<double()>& next_innovation);

}  // namespace charn
