#include "bmo/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bmo/grid_oracle.hpp"

namespace bmo {

std::string to_string(FieldKind k) {
    switch (k) {
        case FieldKind::gaussian_mix: return "gaussian_mix";
        case FieldKind::rastrigin: return "rastrigin";
        case FieldKind::schwefel: return "schwefel";
        case FieldKind::light_field: return "light_field";
        case FieldKind::image: return "image";
        case FieldKind::sphere_cap: return "sphere";
    }
    return "gaussian_mix";
}

FieldKind field_kind_from_string(const std::string& s) {
    if (s == "gaussian_mix") return FieldKind::gaussian_mix;
    if (s == "three_peaks") return FieldKind::gaussian_mix;
    if (s == "rastrigin") return FieldKind::rastrigin;
    if (s == "schwefel") return FieldKind::schwefel;
    if (s == "light_field") return FieldKind::light_field;
    if (s == "image") return FieldKind::image;
    if (s == "sphere") return FieldKind::sphere_cap;
    throw std::invalid_argument("unknown landscape kind: " + s);
}

namespace {

double rastrigin_term(double v) {
    return v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
}

double schwefel_term(double v) {
    return v * std::sin(std::sqrt(std::abs(v)));
}

void check_in_domain(const Domain& d, const Vec3& x) {
    const double tol = 1e-9 * std::max(1.0, d.max_extent()) + 1e-12;
    if (!d.contains(x, tol))
        throw std::domain_error("evaluate: position (" + std::to_string(x.x) + ", " + std::to_string(x.y) +
                                ", " + std::to_string(x.z) + ") lies outside the landscape domain");
}

}  // namespace

int Landscape::movable_count() const {
    if (kind_ == FieldKind::gaussian_mix) return static_cast<int>(bumps_.size());
    if (kind_ == FieldKind::light_field) return static_cast<int>(sources_.size());
    return 0;
}

Vec3 Landscape::center_at(int index, int t) const {
    for (const Binding& b : bindings_) {
        if (b.index == index) return source_position(b.traj, t);
    }
    if (kind_ == FieldKind::gaussian_mix) return bumps_[index].center;
    return sources_[index].center;
}

double Landscape::evaluate(const Vec3& x, int t) const {
    check_in_domain(domain_, x);
    switch (kind_) {
        case FieldKind::gaussian_mix: {
            double v = 0.0;
            for (int k = 0; k < static_cast<int>(bumps_.size()); ++k) {
                const GaussianBump& b = bumps_[k];
                const Vec3 c = center_at(k, t);
                const double r2 = (x - c).norm2();
                v += b.height * std::exp(-r2 / (2.0 * b.sigma * b.sigma));
            }
            return v + affine_shift_;
        }
        case FieldKind::rastrigin: {
            const double f = 20.0 + rastrigin_term(x.x) + rastrigin_term(x.y);
            return affine_shift_ - f;
        }
        case FieldKind::schwefel: {
            const double f = 2.0 * bench::schwefel_constant - schwefel_term(x.x) - schwefel_term(x.y);
            return affine_shift_ - f;
        }
        case FieldKind::light_field: {
            double v = 0.0;
            for (int k = 0; k < static_cast<int>(sources_.size()); ++k) {
                const LightSource& s = sources_[k];
                const Vec3 c = center_at(k, t);
                const double d2 = (x - c).norm2();
                v += s.power_watts / (4.0 * std::numbers::pi * (d2 + s.height * s.height));
            }
            return v + affine_shift_;
        }
        case FieldKind::image: {
            const double xc = std::clamp(x.x, 0.0, static_cast<double>(image_.width - 1));
            const double yc = std::clamp(x.y, 0.0, static_cast<double>(image_.height - 1));
            const int i0 = std::min(static_cast<int>(xc), image_.width - 2 >= 0 ? image_.width - 2 : 0);
            const int j0 = std::min(static_cast<int>(yc), image_.height - 2 >= 0 ? image_.height - 2 : 0);
            const int i1 = std::min(i0 + 1, image_.width - 1);
            const int j1 = std::min(j0 + 1, image_.height - 1);
            const double fx = xc - i0;
            const double fy = yc - j0;
            const auto px = [&](int col, int row) {
                return image_.values[static_cast<std::size_t>(row) * image_.width + col];
            };
            const double v = (1 - fx) * (1 - fy) * px(i0, j0) + fx * (1 - fy) * px(i1, j0) +
                             (1 - fx) * fy * px(i0, j1) + fx * fy * px(i1, j1);
            return v + affine_shift_;
        }
        case FieldKind::sphere_cap:
            return x.z + domain_.radius() + affine_shift_;
    }
    throw std::logic_error("unreachable field kind");
}

std::vector<Vec3> Landscape::peaks(int t) const {
    const int movable = movable_count();
    if (movable == 0 || bindings_.empty()) return static_peaks_;
    std::vector<Vec3> out = static_peaks_;
    for (int k = 0; k < movable && k < static_cast<int>(out.size()); ++k) out[k] = center_at(k, t);
    return out;
}

Landscape make_gaussian_mix(const Domain& box, std::vector<GaussianBump> bumps) {
    if (box.kind() != Domain::Kind::box) throw std::invalid_argument("gaussian mix needs a box domain");
    if (bumps.empty()) throw std::invalid_argument("gaussian mix needs at least one bump");
    for (const GaussianBump& b : bumps) {
        if (!(b.height > 0.0) || !(b.sigma > 0.0))
            throw std::invalid_argument("gaussian bump height and sigma must be > 0");
        if (!box.contains(b.center, 0.0))
            throw std::invalid_argument("gaussian bump center outside the domain");
    }
    Landscape l;
    l.kind_ = FieldKind::gaussian_mix;
    l.domain_ = box;
    l.bumps_ = std::move(bumps);
    l.affine_shift_ = 0.0;  // sum of positive bumps is already nonnegative
    for (const GaussianBump& b : l.bumps_) l.static_peaks_.push_back(b.center);
    return l;
}

Landscape make_three_peaks() {
    std::vector<GaussianBump> bumps;
    for (const auto& row : bench::three_peaks_bumps)
        bumps.push_back({{row[0], row[1], 0.0}, row[2], row[3]});
    return make_gaussian_mix(
        Domain::box({bench::three_peaks_box[0], bench::three_peaks_box[1]},
                    {bench::three_peaks_box[2], bench::three_peaks_box[3]}),
        std::move(bumps));
}

Landscape make_rastrigin(std::array<double, 4> bounds) {
    Landscape l;
    l.kind_ = FieldKind::rastrigin;
    l.domain_ = Domain::box({bounds[0], bounds[1]}, {bounds[2], bounds[3]});
    l.affine_shift_ = bench::rastrigin_shift;
    l.static_peaks_ = grid_local_max_oracle(l, 400);
    return l;
}

Landscape make_schwefel(std::array<double, 4> bounds) {
    Landscape l;
    l.kind_ = FieldKind::schwefel;
    l.domain_ = Domain::box({bounds[0], bounds[1]}, {bounds[2], bounds[3]});
    l.affine_shift_ = bench::schwefel_shift;
    l.static_peaks_ = grid_local_max_oracle(l, 400);
    return l;
}

Landscape make_light_field(const Domain& box, std::vector<LightSource> sources) {
    if (box.kind() != Domain::Kind::box) throw std::invalid_argument("light field needs a box domain");
    if (sources.empty()) throw std::invalid_argument("light field needs at least one source");
    for (LightSource& s : sources) {
        s.center.z = 0.0;
        if (!(s.power_watts > 0.0) || !(s.height > 0.0))
            throw std::invalid_argument("light source power and height must be > 0");
        if (!box.contains(s.center, 0.0))
            throw std::invalid_argument("light source ground center outside the arena");
    }
    Landscape l;
    l.kind_ = FieldKind::light_field;
    l.domain_ = box;
    l.sources_ = std::move(sources);
    l.affine_shift_ = 0.0;  // intensity is strictly positive
    for (const LightSource& s : l.sources_) l.static_peaks_.push_back(s.center);
    return l;
}

Landscape make_image_field(const PgmImage& img, double gamma) {
    if (!(gamma >= 1.0)) throw std::invalid_argument("image field gamma must be >= 1");
    if (img.width < 2 || img.height < 2)
        throw std::invalid_argument("image field needs at least 2x2 pixels");
    Landscape l;
    l.kind_ = FieldKind::image;
    l.domain_ = Domain::box({0.0, static_cast<double>(img.width - 1)},
                            {0.0, static_cast<double>(img.height - 1)});
    l.image_.width = img.width;
    l.image_.height = img.height;
    l.image_.gamma = gamma;
    l.image_.values.resize(img.pixels.size());
    const auto [mn_it, mx_it] = std::minmax_element(img.pixels.begin(), img.pixels.end());
    const double mn = *mn_it, mx = *mx_it;
    if (mn == mx) {
        // constant image: normalization is degenerate, everything maps to 0
        std::fill(l.image_.values.begin(), l.image_.values.end(), 0.0);
    } else {
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            const double norm = (img.pixels[i] - mn) / (mx - mn);
            l.image_.values[i] = std::pow(norm, gamma);
        }
    }
    l.affine_shift_ = 0.0;
    // ground truth for an image is its brightest pixel center; noise maxima
    // are real local peaks but not meaningful targets
    const auto mx_pos = std::max_element(l.image_.values.begin(), l.image_.values.end());
    const std::size_t idx = static_cast<std::size_t>(mx_pos - l.image_.values.begin());
    l.static_peaks_ = {{static_cast<double>(idx % img.width), static_cast<double>(idx / img.width), 0.0}};
    return l;
}

Landscape load_image_field(const std::string& path, double gamma) {
    return make_image_field(load_pgm(path), gamma);
}

Landscape make_sphere_field(double radius) {
    Landscape l;
    l.kind_ = FieldKind::sphere_cap;
    l.domain_ = Domain::sphere(radius);
    l.affine_shift_ = 0.0;  // z + r is already >= 0 on the surface
    l.static_peaks_ = {{0.0, 0.0, radius}};
    return l;
}

Landscape bind(Landscape base, const std::vector<Landscape::Binding>& bindings) {
    const int movable = base.movable_count();
    if (movable == 0)
        throw std::invalid_argument("bind: trajectories attach to gaussian or light-field centers only");
    for (Landscape::Binding b : bindings) {
        if (b.index < 0 || b.index >= movable)
            throw std::invalid_argument("bind: index " + std::to_string(b.index) + " out of range (have " +
                                        std::to_string(movable) + " centers)");
        const Vec3 center = base.kind() == FieldKind::gaussian_mix ? base.bumps()[b.index].center
                                                                   : base.sources()[b.index].center;
        if (!b.traj.anchor) b.traj.anchor = center;
        if (b.traj.kind == Trajectory::Kind::circular && !b.traj.circle_center)
            b.traj.circle_center = center;
        base.bindings_.push_back(std::move(b));
    }
    return base;
}

}  // namespace bmo
