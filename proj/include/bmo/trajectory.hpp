#pragma once

#include <optional>
#include <string>

#include "bmo/domain.hpp"
#include "bmo/vec.hpp"

namespace bmo {

/// Time law for a moving peak or light source. All positions are evaluated
/// from the iteration index alone, so p(t) is a pure function.
struct Trajectory {
    enum class Kind { static_, horizontal_shift, linear_pingpong, circular, updown };

    Kind kind = Kind::static_;

    // static_, horizontal_shift, updown base point; filled from the bound
    // center when a config omits it
    std::optional<Vec3> anchor;

    double shift_k = 0.0;      // horizontal_shift: x offset per iteration

    Vec3 pingpong_a, pingpong_b;
    double speed = 0.0;        // linear_pingpong: length per iteration

    std::optional<Vec3> circle_center;  // circular orbit center (defaults to bound center)
    double circle_radius = 1.0;
    double rpm = 1.0;
    double iter_per_minute = 60.0;

    double amplitude = 0.0;    // updown: vertical swing above the anchor
    int period = 2;            // updown: iterations per full cycle

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

std::string to_string(Trajectory::Kind k);
Trajectory::Kind trajectory_kind_from_string(const std::string& s);

/// Source position at iteration t. Requires anchors/centers resolved
/// (bind() fills them in from the landscape).
Vec3 source_position(const Trajectory& traj, int t);

/// Checks every position over the iteration budget stays inside the domain.
/// Throws std::invalid_argument naming the first offending iteration.
void validate_trajectory(const Trajectory& traj, const Domain& domain, int max_iters);

}  // namespace bmo
