#include "bmo/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bmo {

Domain Domain::box(std::array<double, 2> xb, std::array<double, 2> yb) {
    if (!(xb[0] < xb[1]) || !(yb[0] < yb[1]))
        throw std::invalid_argument("Domain::box: lo must be < hi per axis");
    Domain d;
    d.kind_ = Kind::box;
    d.bounds_ = {xb, yb};
    return d;
}

Domain Domain::sphere(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("Domain::sphere: radius must be > 0");
    Domain d;
    d.kind_ = Kind::sphere_surface;
    d.radius_ = radius;
    return d;
}

double Domain::max_extent() const {
    if (kind_ == Kind::sphere_surface) return 2.0 * radius_;
    return std::max(width(0), width(1));
}

bool Domain::contains(const Vec3& p, double tol) const {
    if (!p.finite()) return false;
    if (kind_ == Kind::box) {
        return p.x >= bounds_[0][0] - tol && p.x <= bounds_[0][1] + tol &&
               p.y >= bounds_[1][0] - tol && p.y <= bounds_[1][1] + tol && std::abs(p.z) <= tol;
    }
    return std::abs(p.norm() - radius_) <= tol;
}

Vec3 Domain::clip(const Vec3& moved, const Vec3& prev) const {
    if (kind_ == Kind::box) {
        return {std::clamp(moved.x, bounds_[0][0], bounds_[0][1]),
                std::clamp(moved.y, bounds_[1][0], bounds_[1][1]), 0.0};
    }
    const double n = moved.norm();
    if (n < 1e-12 * radius_) return prev;  // degenerate pass through the center
    return moved * (radius_ / n);
}

double Domain::metric(const Vec3& a, const Vec3& b) const {
    if (kind_ == Kind::box) return distance(a, b);
    const double cosang = std::clamp((a.x * b.x + a.y * b.y + a.z * b.z) / (radius_ * radius_), -1.0, 1.0);
    return radius_ * std::acos(cosang);
}

}  // namespace bmo
