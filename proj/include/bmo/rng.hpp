#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bmo/vec.hpp"

namespace bmo {

/// Seeded generator with explicit value mappings. std::mt19937_64's output
/// sequence is fixed by the standard, and the mappings below avoid the
/// implementation-defined std distributions, so identical seeds give
/// identical draws on every platform.
class SwarmRng {
public:
    SwarmRng() : engine_(0) {}
    explicit SwarmRng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1), 53-bit
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // unit vector in the xy-plane
    Vec3 unit_planar() {
        const double a = uniform(0.0, 2.0 * std::numbers::pi);
        return {std::cos(a), std::sin(a), 0.0};
    }

    // uniform unit vector on the unit sphere (z then azimuth; no rejection)
    Vec3 unit_sphere() {
        const double zc = 1.0 - 2.0 * uniform01();
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        const double s = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        return {s * std::cos(phi), s * std::sin(phi), zc};
    }

    friend bool operator==(const SwarmRng& a, const SwarmRng& b) { return a.engine_ == b.engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace bmo
