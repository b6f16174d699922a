#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmo {

/// Tuning constants of the mating update and step loop.
/// b1 weighs the previous UV, b2 the current fitness; step_size is the
/// per-iteration displacement magnitude; d_min floors pairwise distances in
/// the UV distribution so co-located agents never divide by zero; jitter is
/// an optional exploration magnitude applied to self-mated agents (0 = off).
struct BmoParams {
    double b1 = 0.9;
    double b2 = 2.0;
    double step_size = 1.0;
    int n_agents = 1;
    int max_iters = 1;
    double d_min = 1e-6;
    std::uint64_t rng_seed = 1;
    double jitter = 0.0;

    void validate() const {
        if (!(std::isfinite(b1) && b1 >= 0.0 && b1 <= 1.0))
            throw std::invalid_argument("BmoParams: b1 must lie in [0, 1], got " + std::to_string(b1));
        if (!(std::isfinite(b2) && b2 > 1.0))
            throw std::invalid_argument("BmoParams: b2 must be > 1, got " + std::to_string(b2));
        if (!(std::isfinite(step_size) && step_size > 0.0))
            throw std::invalid_argument("BmoParams: step_size must be > 0");
        if (!(std::isfinite(d_min) && d_min > 0.0))
            throw std::invalid_argument("BmoParams: d_min must be > 0");
        if (n_agents < 1) throw std::invalid_argument("BmoParams: n_agents must be >= 1");
        if (max_iters < 1) throw std::invalid_argument("BmoParams: max_iters must be >= 1");
        if (!(std::isfinite(jitter) && jitter >= 0.0))
            throw std::invalid_argument("BmoParams: jitter must be >= 0");
    }

    friend bool operator==(const BmoParams&, const BmoParams&) = default;
};

}  // namespace bmo
