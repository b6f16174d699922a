#pragma once

#include <array>
#include <stdexcept>

#include "bmo/vec.hpp"

namespace bmo {

/// Search-space geometry: an axis-aligned box (2-D) or a sphere surface (3-D).
/// Owns containment checks, the post-move clipping rule, and the distance
/// metric used by capture/tracking metrics (euclidean on boxes, great-circle
/// arc on the sphere).
class Domain {
public:
    enum class Kind { box, sphere_surface };

    static Domain box(std::array<double, 2> xb, std::array<double, 2> yb);
    static Domain sphere(double radius);

    Kind kind() const { return kind_; }
    int dims() const { return kind_ == Kind::box ? 2 : 3; }
    double radius() const { return radius_; }
    double lo(int axis) const { return bounds_[axis][0]; }
    double hi(int axis) const { return bounds_[axis][1]; }
    double width(int axis) const { return bounds_[axis][1] - bounds_[axis][0]; }
    double max_extent() const;

    bool contains(const Vec3& p, double tol = 0.0) const;

    /// Post-move clip. Boxes clamp per axis (and pin z to 0); the sphere
    /// re-projects radially, falling back to the pre-move position if the
    /// moved point is too close to the center to normalize.
    Vec3 clip(const Vec3& moved, const Vec3& prev) const;

    /// Metric distance between two in-domain points.
    double metric(const Vec3& a, const Vec3& b) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    Kind kind_ = Kind::box;
    std::array<std::array<double, 2>, 2> bounds_{{{0.0, 1.0}, {0.0, 1.0}}};
    double radius_ = 0.0;
};

}  // namespace bmo
