#include "bmo/trajectory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmo {

std::string to_string(Trajectory::Kind k) {
    switch (k) {
        case Trajectory::Kind::static_: return "static";
        case Trajectory::Kind::horizontal_shift: return "horizontal_shift";
        case Trajectory::Kind::linear_pingpong: return "linear_pingpong";
        case Trajectory::Kind::circular: return "circular";
        case Trajectory::Kind::updown: return "updown";
    }
    return "static";
}

Trajectory::Kind trajectory_kind_from_string(const std::string& s) {
    if (s == "static") return Trajectory::Kind::static_;
    if (s == "horizontal_shift") return Trajectory::Kind::horizontal_shift;
    if (s == "linear_pingpong") return Trajectory::Kind::linear_pingpong;
    if (s == "circular") return Trajectory::Kind::circular;
    if (s == "updown") return Trajectory::Kind::updown;
    throw std::invalid_argument("unknown trajectory kind: " + s);
}

namespace {

Vec3 require_anchor(const Trajectory& traj) {
    if (!traj.anchor) throw std::logic_error("trajectory anchor not resolved (bind it to a landscape first)");
    return *traj.anchor;
}

}  // namespace

Vec3 source_position(const Trajectory& traj, int t) {
    if (t < 0) throw std::invalid_argument("source_position: t must be >= 0");
    switch (traj.kind) {
        case Trajectory::Kind::static_:
            return require_anchor(traj);

        case Trajectory::Kind::horizontal_shift: {
            const Vec3 a = require_anchor(traj);
            return {a.x + traj.shift_k * t, a.y, a.z};
        }

        case Trajectory::Kind::linear_pingpong: {
            const Vec3 a = traj.pingpong_a;
            const Vec3 b = traj.pingpong_b;
            const double len = distance(a, b);
            if (len == 0.0 || traj.speed == 0.0) return a;
            const double phase = std::fmod(static_cast<double>(t) * traj.speed, 2.0 * len);
            const double d = phase <= len ? phase : 2.0 * len - phase;
            if (d == 0.0) return a;
            if (d == len) return b;  // exact vertex
            return a + (b - a) * (d / len);
        }

        case Trajectory::Kind::circular: {
            if (!traj.circle_center)
                throw std::logic_error("circular trajectory center not resolved");
            if (!(traj.iter_per_minute > 0.0))
                throw std::invalid_argument("circular trajectory: iter_per_minute must be > 0");
            // reduce to fractional turns before taking cos/sin so integer
            // periods repeat bit-exactly
            const double turns = traj.rpm * static_cast<double>(t) / traj.iter_per_minute;
            const double frac = turns - std::floor(turns);
            const double theta = 2.0 * std::numbers::pi * frac;
            const Vec3 c = *traj.circle_center;
            return {c.x + traj.circle_radius * std::cos(theta), c.y + traj.circle_radius * std::sin(theta), c.z};
        }

        case Trajectory::Kind::updown: {
            const Vec3 a = require_anchor(traj);
            const double phase = std::fmod(static_cast<double>(t), static_cast<double>(traj.period)) /
                                 static_cast<double>(traj.period);
            const double tri = phase <= 0.5 ? 2.0 * phase : 2.0 * (1.0 - phase);
            return {a.x, a.y + traj.amplitude * tri, a.z};
        }
    }
    throw std::logic_error("unreachable trajectory kind");
}

void validate_trajectory(const Trajectory& traj, const Domain& domain, int max_iters) {
    if (traj.kind == Trajectory::Kind::linear_pingpong && traj.speed < 0.0)
        throw std::invalid_argument("trajectory: speed must be >= 0");
    if (traj.kind == Trajectory::Kind::circular && !(traj.circle_radius > 0.0))
        throw std::invalid_argument("trajectory: circle radius must be > 0");
    if (traj.kind == Trajectory::Kind::updown && traj.period < 2)
        throw std::invalid_argument("trajectory: updown period must be >= 2");
    const double tol = 1e-9 * std::max(1.0, domain.max_extent());
    for (int t = 0; t <= max_iters; ++t) {
        const Vec3 p = source_position(traj, t);
        if (!domain.contains(p, tol))
            throw std::invalid_argument("trajectory leaves the domain at iteration " + std::to_string(t) +
                                        " (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    }
}

}  // namespace bmo
