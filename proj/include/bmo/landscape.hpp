#pragma once

#include <array>
#include <string>
#include <vector>

#include "bmo/domain.hpp"
#include "bmo/pgm.hpp"
#include "bmo/trajectory.hpp"
#include "bmo/vec.hpp"

namespace bmo {

enum class FieldKind { gaussian_mix, rastrigin, schwefel, light_field, image, sphere_cap };

std::string to_string(FieldKind k);
FieldKind field_kind_from_string(const std::string& s);

struct GaussianBump {
    Vec3 center;
    double height = 1.0;
    double sigma = 1.0;
    friend bool operator==(const GaussianBump&, const GaussianBump&) = default;
};

struct LightSource {
    Vec3 center;           // ground projection, z = 0
    double power_watts = 14.0;
    double height = 50.0;  // hang height above the floor, same length unit as the arena
    std::string color = "white";
    friend bool operator==(const LightSource&, const LightSource&) = default;
};

struct ImageFieldData {
    int width = 0;
    int height = 0;
    double gamma = 1.0;
    std::vector<double> values;  // normalized to [0,1], gamma applied, row-major
};

/// Canonical benchmark constants. The same values ship as a plain-text asset
/// (data/benchmark_constants.txt); a test keeps the two in sync.
namespace bench {
// three peaks: unequal-height bumps on [0,10]^2
inline constexpr std::array<double, 4> three_peaks_box = {0.0, 10.0, 0.0, 10.0};
inline constexpr std::array<std::array<double, 4>, 3> three_peaks_bumps = {{
    {2.5, 2.5, 10.0, 0.8},  // cx, cy, height, sigma
    {7.5, 3.0, 9.5, 0.8},
    {4.5, 7.5, 9.0, 0.8},
}};
// rastrigin: bounds hold the 10x10 interior lattice of maxima of the negated
// function (exactly 100 peaks) and keep every peak off grid symmetry lines
inline constexpr std::array<double, 4> rastrigin_bounds = {-4.52, 5.52, -4.52, 5.52};
inline constexpr double rastrigin_shift = 101.0;  // >= max of the 2-D rastrigin over the bounds (100.78)
// schwefel: [0,430]^2 holds a 4x4 grid of maxima (16, within the 15 +/- 2 target)
inline constexpr std::array<double, 4> schwefel_bounds = {0.0, 430.0, 0.0, 430.0};
inline constexpr double schwefel_shift = 1450.0;  // >= max of the 2-D schwefel over the bounds (1439.06)
inline constexpr double schwefel_constant = 418.9829;
}  // namespace bench

/// Time-indexed fitness field over a domain. Exposed fitness is the raw
/// field plus an affine shift chosen so values are nonnegative everywhere.
/// Trajectory bindings move gaussian bump centers or light source centers;
/// evaluate() and peaks() honor them.
class Landscape {
public:
    double evaluate(const Vec3& x, int t) const;
    std::vector<Vec3> peaks(int t) const;

    const Domain& domain() const { return domain_; }
    FieldKind kind() const { return kind_; }
    double affine_shift() const { return affine_shift_; }

    const std::vector<GaussianBump>& bumps() const { return bumps_; }
    const std::vector<LightSource>& sources() const { return sources_; }
    const ImageFieldData& image() const { return image_; }
    double sphere_radius() const { return domain_.radius(); }
    int movable_count() const;

    struct Binding {
        int index;
        Trajectory traj;
        friend bool operator==(const Binding&, const Binding&) = default;
    };
    const std::vector<Binding>& bindings() const { return bindings_; }

    friend Landscape make_gaussian_mix(const Domain&, std::vector<GaussianBump>);
    friend Landscape make_rastrigin(std::array<double, 4> bounds);
    friend Landscape make_schwefel(std::array<double, 4> bounds);
    friend Landscape make_light_field(const Domain&, std::vector<LightSource>);
    friend Landscape make_image_field(const PgmImage&, double gamma);
    friend Landscape make_sphere_field(double radius);
    friend Landscape bind(Landscape base, const std::vector<Binding>& bindings);

private:
    Vec3 center_at(int index, int t) const;

    Domain domain_ = Domain::box({0, 1}, {0, 1});
    FieldKind kind_ = FieldKind::gaussian_mix;
    double affine_shift_ = 0.0;
    std::vector<GaussianBump> bumps_;
    std::vector<LightSource> sources_;
    ImageFieldData image_;
    std::vector<Vec3> static_peaks_;
    std::vector<Binding> bindings_;
};

Landscape make_gaussian_mix(const Domain& box, std::vector<GaussianBump> bumps);
Landscape make_three_peaks();
Landscape make_rastrigin(std::array<double, 4> bounds = bench::rastrigin_bounds);
Landscape make_schwefel(std::array<double, 4> bounds = bench::schwefel_bounds);
Landscape make_light_field(const Domain& box, std::vector<LightSource> sources);
Landscape make_image_field(const PgmImage& img, double gamma);
Landscape load_image_field(const std::string& path, double gamma);
Landscape make_sphere_field(double radius);

/// Returns a copy of the landscape with trajectories attached to bump or
/// source centers. Unresolved anchors default to the bound center.
Landscape bind(Landscape base, const std::vector<Landscape::Binding>& bindings);

}  // namespace bmo
