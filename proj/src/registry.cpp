#include <stdexcept>

#include "bmo/scenario.hpp"

namespace bmo {

namespace {

std::vector<std::uint64_t> ten_seeds() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

ScenarioConfig three_peaks_static() {
    ScenarioConfig c;
    c.name = "three_peaks_static";
    c.landscape.kind = FieldKind::gaussian_mix;
    c.landscape.three_peaks_preset = true;
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 0.2, .n_agents = 30, .max_iters = 500,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.05};
    c.capture_radius = 2.0;
    c.placement.kind = PlacementKind::uniform_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig three_peaks_hshift() {
    ScenarioConfig c = three_peaks_static();
    c.name = "three_peaks_hshift";
    for (int k = 0; k < 3; ++k) {
        TrajectoryBinding b;
        b.target = k;
        b.traj.kind = Trajectory::Kind::horizontal_shift;
        b.traj.shift_k = 0.004;
        c.trajectories.push_back(b);
    }
    return c;
}

ScenarioConfig single_source(double step, int iters, const std::string& name) {
    ScenarioConfig c;
    c.name = name;
    c.landscape.kind = FieldKind::light_field;
    c.landscape.sources = {{{90.0, 90.0, 0.0}, 14.0, 50.0, "white"}};
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = step, .n_agents = 8, .max_iters = iters,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.0};
    c.arena = Arena{90.0, 25.0};
    c.placement.kind = PlacementKind::quadrant_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig dual_source(double p0, double p1, const std::string& name) {
    ScenarioConfig c;
    c.name = name;
    c.landscape.kind = FieldKind::light_field;
    c.landscape.sources = {{{65.0, 115.0, 0.0}, p0, 80.0, p0 == p1 ? "white" : "red"},
                           {{165.0, 115.0, 0.0}, p1, 80.0, p0 == p1 ? "white" : "blue"}};
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 10.0, .n_agents = 4, .max_iters = 300,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 8.0};
    c.arena = Arena{115.0, 25.0};
    c.placement.kind = PlacementKind::quadrant_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig pingpong_source() {
    ScenarioConfig c = single_source(10.0, 400, "pingpong_source");
    c.bmo.n_agents = 6;
    c.bmo.jitter = 2.0;
    c.placement.kind = PlacementKind::uniform_random;
    TrajectoryBinding b;
    b.target = 0;
    b.traj.kind = Trajectory::Kind::linear_pingpong;
    b.traj.pingpong_a = {60.0, 90.0, 0.0};
    b.traj.pingpong_b = {120.0, 90.0, 0.0};
    b.traj.speed = 5.0;
    c.trajectories.push_back(b);
    return c;
}

ScenarioConfig circular_source() {
    ScenarioConfig c = single_source(10.0, 300, "circular_source");
    c.bmo.n_agents = 6;
    c.bmo.jitter = 2.0;
    c.placement.kind = PlacementKind::uniform_random;
    TrajectoryBinding b;
    b.target = 0;
    b.traj.kind = Trajectory::Kind::circular;
    b.traj.circle_center = Vec3{90.0, 90.0, 0.0};
    b.traj.circle_radius = 8.0;
    b.traj.rpm = 15.0;             // with 60 iterations per minute: one revolution every 4 iterations
    b.traj.iter_per_minute = 60.0;
    c.trajectories.push_back(b);
    return c;
}

ScenarioConfig updown_source() {
    ScenarioConfig c = single_source(10.0, 400, "updown_source");
    c.bmo.n_agents = 6;
    c.bmo.jitter = 2.0;
    c.placement.kind = PlacementKind::uniform_random;
    TrajectoryBinding b;
    b.target = 0;
    b.traj.kind = Trajectory::Kind::updown;
    b.traj.anchor = Vec3{90.0, 60.0, 0.0};
    b.traj.amplitude = 60.0;
    b.traj.period = 40;
    c.trajectories.push_back(b);
    return c;
}

ScenarioConfig dual_pingpong() {
    ScenarioConfig c = dual_source(14.0, 14.0, "dual_pingpong");
    c.bmo.n_agents = 6;
    c.bmo.max_iters = 400;
    c.bmo.jitter = 2.0;
    c.placement.kind = PlacementKind::uniform_random;
    c.landscape.sources[0].color = "pink";
    c.landscape.sources[1].color = "green";
    TrajectoryBinding b0;
    b0.target = 0;
    b0.traj.kind = Trajectory::Kind::linear_pingpong;
    b0.traj.pingpong_a = {40.0, 115.0, 0.0};
    b0.traj.pingpong_b = {105.0, 115.0, 0.0};
    b0.traj.speed = 2.5;
    TrajectoryBinding b1;
    b1.target = 1;
    b1.traj.kind = Trajectory::Kind::linear_pingpong;
    b1.traj.pingpong_a = {190.0, 115.0, 0.0};
    b1.traj.pingpong_b = {125.0, 115.0, 0.0};
    b1.traj.speed = 2.5;
    c.trajectories = {b0, b1};
    return c;
}

ScenarioConfig sphere_north() {
    ScenarioConfig c;
    c.name = "sphere_north";
    c.landscape.kind = FieldKind::sphere_cap;
    c.landscape.sphere_radius = 1.0;
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 0.1, .n_agents = 20, .max_iters = 200,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.01};
    c.capture_radius = 0.1;  // arc distance
    c.placement.kind = PlacementKind::uniform_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig rastrigin_niching() {
    ScenarioConfig c;
    c.name = "rastrigin_niching";
    c.landscape.kind = FieldKind::rastrigin;
    c.landscape.box = bench::rastrigin_bounds;
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 0.1, .n_agents = 200, .max_iters = 300,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.0};
    c.capture_radius = 0.35;
    c.placement.kind = PlacementKind::uniform_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig schwefel_niching() {
    ScenarioConfig c;
    c.name = "schwefel_niching";
    c.landscape.kind = FieldKind::schwefel;
    c.landscape.box = bench::schwefel_bounds;
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 8.0, .n_agents = 60, .max_iters = 400,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.0};
    c.capture_radius = 25.0;
    c.placement.kind = PlacementKind::uniform_random;
    c.seeds = ten_seeds();
    return c;
}

ScenarioConfig ship_image() {
    ScenarioConfig c;
    c.name = "ship_image";
    c.landscape.kind = FieldKind::image;
    c.landscape.image_path = "assets/ship.pgm";
    c.landscape.gamma = 3.0;
    c.bmo = {.b1 = 0.9, .b2 = 2.0, .step_size = 1.5, .n_agents = 40, .max_iters = 300,
             .d_min = 1e-6, .rng_seed = 1, .jitter = 0.5};
    c.capture_radius = 10.0;  // pixels
    c.placement.kind = PlacementKind::uniform_random;
    c.seeds = ten_seeds();
    return c;
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"three_peaks_static", "three_peaks_hshift", "single_source", "single_source_step5",
            "single_source_step20", "dual_source_equal", "dual_source_unequal", "pingpong_source",
            "circular_source", "updown_source", "dual_pingpong", "sphere_north", "rastrigin_niching",
            "schwefel_niching", "ship_image"};
}

ScenarioConfig scenario_by_name(const std::string& name) {
    if (name == "three_peaks_static") return three_peaks_static();
    if (name == "three_peaks_hshift") return three_peaks_hshift();
    if (name == "single_source") return single_source(10.0, 600, "single_source");
    if (name == "single_source_step5") return single_source(5.0, 600, "single_source_step5");
    if (name == "single_source_step20") return single_source(20.0, 600, "single_source_step20");
    if (name == "dual_source_equal") return dual_source(14.0, 14.0, "dual_source_equal");
    if (name == "dual_source_unequal") return dual_source(14.0, 8.0, "dual_source_unequal");
    if (name == "pingpong_source") return pingpong_source();
    if (name == "circular_source") return circular_source();
    if (name == "updown_source") return updown_source();
    if (name == "dual_pingpong") return dual_pingpong();
    if (name == "sphere_north") return sphere_north();
    if (name == "rastrigin_niching") return rastrigin_niching();
    if (name == "schwefel_niching") return schwefel_niching();
    if (name == "ship_image") return ship_image();
    throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace bmo
