#include "bmo/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace bmo {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) {
    if (v.z == 0.0) return json::array({v.x, v.y});
    return json::array({v.x, v.y, v.z});
}

Vec3 vec_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() < 2 || j.size() > 3)
        throw std::invalid_argument(std::string("config: ") + what + " must be a 2- or 3-element array");
    Vec3 v{j[0].get<double>(), j[1].get<double>(), 0.0};
    if (j.size() == 3) v.z = j[2].get<double>();
    return v;
}

json trajectory_to_json(const TrajectoryBinding& b) {
    json j;
    j["target"] = b.target;
    j["kind"] = to_string(b.traj.kind);
    switch (b.traj.kind) {
        case Trajectory::Kind::static_:
            if (b.traj.anchor) j["anchor"] = vec_to_json(*b.traj.anchor);
            break;
        case Trajectory::Kind::horizontal_shift:
            j["k"] = b.traj.shift_k;
            if (b.traj.anchor) j["start"] = vec_to_json(*b.traj.anchor);
            break;
        case Trajectory::Kind::linear_pingpong:
            j["a"] = vec_to_json(b.traj.pingpong_a);
            j["b"] = vec_to_json(b.traj.pingpong_b);
            j["speed"] = b.traj.speed;
            break;
        case Trajectory::Kind::circular:
            if (b.traj.circle_center) j["center"] = vec_to_json(*b.traj.circle_center);
            j["radius"] = b.traj.circle_radius;
            j["rpm"] = b.traj.rpm;
            j["iter_per_minute"] = b.traj.iter_per_minute;
            break;
        case Trajectory::Kind::updown:
            if (b.traj.anchor) j["anchor"] = vec_to_json(*b.traj.anchor);
            j["amplitude"] = b.traj.amplitude;
            j["period"] = b.traj.period;
            break;
    }
    return j;
}

TrajectoryBinding trajectory_from_json(const json& j) {
    TrajectoryBinding b;
    b.target = j.at("target").get<int>();
    b.traj.kind = trajectory_kind_from_string(j.at("kind").get<std::string>());
    switch (b.traj.kind) {
        case Trajectory::Kind::static_:
            if (j.contains("anchor")) b.traj.anchor = vec_from_json(j["anchor"], "anchor");
            break;
        case Trajectory::Kind::horizontal_shift:
            b.traj.shift_k = j.at("k").get<double>();
            if (j.contains("start")) b.traj.anchor = vec_from_json(j["start"], "start");
            break;
        case Trajectory::Kind::linear_pingpong:
            b.traj.pingpong_a = vec_from_json(j.at("a"), "a");
            b.traj.pingpong_b = vec_from_json(j.at("b"), "b");
            b.traj.speed = j.at("speed").get<double>();
            break;
        case Trajectory::Kind::circular:
            if (j.contains("center")) b.traj.circle_center = vec_from_json(j["center"], "center");
            b.traj.circle_radius = j.at("radius").get<double>();
            b.traj.rpm = j.at("rpm").get<double>();
            b.traj.iter_per_minute = j.at("iter_per_minute").get<double>();
            break;
        case Trajectory::Kind::updown:
            if (j.contains("anchor")) b.traj.anchor = vec_from_json(j["anchor"], "anchor");
            b.traj.amplitude = j.at("amplitude").get<double>();
            b.traj.period = j.at("period").get<int>();
            break;
    }
    return b;
}

json landscape_to_json(const LandscapeSpec& s) {
    json j;
    switch (s.kind) {
        case FieldKind::gaussian_mix:
            if (s.three_peaks_preset) {
                j["kind"] = "three_peaks";
            } else {
                j["kind"] = "gaussian_mix";
                j["box"] = s.box;
                json bumps = json::array();
                for (const GaussianBump& b : s.bumps)
                    bumps.push_back({{"center", vec_to_json(b.center)}, {"height", b.height}, {"sigma", b.sigma}});
                j["bumps"] = bumps;
            }
            break;
        case FieldKind::rastrigin:
            j["kind"] = "rastrigin";
            j["bounds"] = s.box;
            break;
        case FieldKind::schwefel:
            j["kind"] = "schwefel";
            j["bounds"] = s.box;
            break;
        case FieldKind::light_field: {
            j["kind"] = "light_field";
            json sources = json::array();
            for (const LightSource& src : s.sources)
                sources.push_back({{"center", vec_to_json(src.center)},
                                   {"power_watts", src.power_watts},
                                   {"height", src.height},
                                   {"color", src.color}});
            j["sources"] = sources;
            break;
        }
        case FieldKind::image:
            j["kind"] = "image";
            j["path"] = s.image_path;
            j["gamma"] = s.gamma;
            break;
        case FieldKind::sphere_cap:
            j["kind"] = "sphere";
            j["radius"] = s.sphere_radius;
            break;
    }
    return j;
}

LandscapeSpec landscape_from_json(const json& j) {
    LandscapeSpec s;
    const std::string kind = j.at("kind").get<std::string>();
    s.kind = field_kind_from_string(kind);
    s.three_peaks_preset = kind == "three_peaks";
    switch (s.kind) {
        case FieldKind::gaussian_mix:
            if (!s.three_peaks_preset) {
                s.box = j.at("box").get<std::array<double, 4>>();
                for (const json& bj : j.at("bumps")) {
                    GaussianBump b;
                    b.center = vec_from_json(bj.at("center"), "bump center");
                    b.height = bj.at("height").get<double>();
                    b.sigma = bj.at("sigma").get<double>();
                    s.bumps.push_back(b);
                }
            }
            break;
        case FieldKind::rastrigin:
            s.box = j.value("bounds", bench::rastrigin_bounds);
            break;
        case FieldKind::schwefel:
            s.box = j.value("bounds", bench::schwefel_bounds);
            break;
        case FieldKind::light_field:
            for (const json& sj : j.at("sources")) {
                LightSource src;
                src.center = vec_from_json(sj.at("center"), "source center");
                src.power_watts = sj.at("power_watts").get<double>();
                src.height = sj.at("height").get<double>();
                src.color = sj.value("color", "white");
                s.sources.push_back(src);
            }
            break;
        case FieldKind::image:
            s.image_path = j.at("path").get<std::string>();
            s.gamma = j.value("gamma", 3.0);
            break;
        case FieldKind::sphere_cap:
            s.sphere_radius = j.at("radius").get<double>();
            break;
    }
    return s;
}

std::string placement_kind_string(PlacementKind k) {
    switch (k) {
        case PlacementKind::uniform_random: return "uniform_random";
        case PlacementKind::quadrant_random: return "quadrant_random";
        case PlacementKind::explicit_list: return "explicit";
    }
    return "uniform_random";
}

PlacementKind placement_kind_from_string(const std::string& s) {
    if (s == "uniform_random") return PlacementKind::uniform_random;
    if (s == "quadrant_random") return PlacementKind::quadrant_random;
    if (s == "explicit") return PlacementKind::explicit_list;
    throw std::invalid_argument("unknown placement kind: " + s);
}

}  // namespace

json to_json(const ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    j["landscape"] = landscape_to_json(c.landscape);
    if (!c.trajectories.empty()) {
        json tr = json::array();
        for (const TrajectoryBinding& b : c.trajectories) tr.push_back(trajectory_to_json(b));
        j["trajectories"] = tr;
    }
    j["bmo"] = {{"b1", c.bmo.b1},
                {"b2", c.bmo.b2},
                {"step_size", c.bmo.step_size},
                {"n_agents", c.bmo.n_agents},
                {"max_iters", c.bmo.max_iters},
                {"d_min", c.bmo.d_min},
                {"rng_seed", c.bmo.rng_seed},
                {"jitter", c.bmo.jitter}};
    if (c.arena) j["arena"] = {{"outer_radius", c.arena->outer_radius}, {"capture_radius", c.arena->capture_radius}};
    else j["capture_radius"] = c.capture_radius;
    json pl;
    pl["kind"] = placement_kind_string(c.placement.kind);
    if (c.placement.kind == PlacementKind::explicit_list) {
        json pos = json::array();
        for (const Vec3& p : c.placement.positions) pos.push_back(vec_to_json(p));
        pl["positions"] = pos;
    }
    j["placement"] = pl;
    j["seeds"] = c.seeds;
    j["dwell"] = c.dwell;
    return j;
}

ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig c;
    c.name = j.value("name", "");
    c.landscape = landscape_from_json(j.at("landscape"));
    if (j.contains("trajectories"))
        for (const json& tj : j["trajectories"]) c.trajectories.push_back(trajectory_from_json(tj));
    const json& b = j.at("bmo");
    c.bmo.b1 = b.value("b1", 0.9);
    c.bmo.b2 = b.value("b2", 2.0);
    c.bmo.step_size = b.at("step_size").get<double>();
    c.bmo.n_agents = b.at("n_agents").get<int>();
    c.bmo.max_iters = b.at("max_iters").get<int>();
    c.bmo.d_min = b.value("d_min", 1e-6);
    c.bmo.rng_seed = b.value("rng_seed", std::uint64_t{1});
    c.bmo.jitter = b.value("jitter", 0.0);
    if (j.contains("arena")) {
        Arena a;
        a.outer_radius = j["arena"].at("outer_radius").get<double>();
        a.capture_radius = j["arena"].at("capture_radius").get<double>();
        c.arena = a;
    } else {
        c.capture_radius = j.value("capture_radius", 0.0);
    }
    if (j.contains("placement")) {
        const json& p = j["placement"];
        c.placement.kind = placement_kind_from_string(p.at("kind").get<std::string>());
        if (p.contains("positions"))
            for (const json& pj : p["positions"]) c.placement.positions.push_back(vec_from_json(pj, "position"));
    }
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (c.seeds.empty()) c.seeds = {c.bmo.rng_seed};
    c.dwell = j.value("dwell", 3);
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("config " + path + " is not valid JSON: " + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const json::exception& e) {
        throw std::runtime_error("config " + path + " is malformed: " + e.what());
    }
}

namespace {

std::string resolve_asset(const std::string& path, const std::string& asset_root) {
    std::filesystem::path p(path);
    if (p.is_absolute() || asset_root.empty()) return path;
    return (std::filesystem::path(asset_root) / p).string();
}

}  // namespace

Landscape build_landscape(const ScenarioConfig& c, const std::string& asset_root) {
    Landscape base = [&] {
        switch (c.landscape.kind) {
            case FieldKind::gaussian_mix:
                if (c.landscape.three_peaks_preset) return make_three_peaks();
                return make_gaussian_mix(Domain::box({c.landscape.box[0], c.landscape.box[1]},
                                                     {c.landscape.box[2], c.landscape.box[3]}),
                                         c.landscape.bumps);
            case FieldKind::rastrigin:
                return make_rastrigin(c.landscape.box);
            case FieldKind::schwefel:
                return make_schwefel(c.landscape.box);
            case FieldKind::light_field:
                if (!c.arena) throw std::invalid_argument("light_field scenario requires an arena");
                return make_light_field(c.arena->domain(), c.landscape.sources);
            case FieldKind::image:
                return load_image_field(resolve_asset(c.landscape.image_path, asset_root), c.landscape.gamma);
            case FieldKind::sphere_cap:
                return make_sphere_field(c.landscape.sphere_radius);
        }
        throw std::logic_error("unreachable landscape kind");
    }();
    if (c.trajectories.empty()) return base;
    std::vector<Landscape::Binding> bindings;
    for (const TrajectoryBinding& b : c.trajectories) bindings.push_back({b.target, b.traj});
    return bmo::bind(std::move(base), bindings);
}

void validate_scenario(const ScenarioConfig& c, const std::string& asset_root) {
    c.bmo.validate();
    if (c.dwell < 1) throw std::invalid_argument("scenario: dwell must be >= 1");
    if (c.seeds.empty()) throw std::invalid_argument("scenario: seeds must not be empty");
    if (c.arena) {
        c.arena->validate();
        if (c.landscape.kind != FieldKind::light_field)
            throw std::invalid_argument("scenario: only light_field scenarios take an arena");
    } else {
        if (c.landscape.kind == FieldKind::light_field)
            throw std::invalid_argument("scenario: light_field scenarios require an arena");
        if (!(c.capture_radius > 0.0))
            throw std::invalid_argument("scenario: capture_radius must be > 0");
    }

    const Landscape l = build_landscape(c, asset_root);  // also checks image files exist and parse

    if (c.placement.kind == PlacementKind::quadrant_random && l.domain().kind() != Domain::Kind::box)
        throw std::invalid_argument("scenario: quadrant placement requires a box domain");
    if (c.placement.kind == PlacementKind::explicit_list) {
        if (static_cast<int>(c.placement.positions.size()) != c.bmo.n_agents)
            throw std::invalid_argument("scenario: explicit placement needs exactly n_agents positions");
        const double tol = 1e-6 * std::max(1.0, l.domain().max_extent());
        for (std::size_t i = 0; i < c.placement.positions.size(); ++i)
            if (!l.domain().contains(c.placement.positions[i], tol))
                throw std::invalid_argument("scenario: explicit position " + std::to_string(i) +
                                            " lies outside the domain");
    }

    for (const Landscape::Binding& b : l.bindings())
        validate_trajectory(b.traj, l.domain(), c.bmo.max_iters);
}

}  // namespace bmo
