#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmo/landscape.hpp"
#include "bmo/metrics.hpp"
#include "bmo/params.hpp"
#include "bmo/swarm.hpp"
#include "bmo/trajectory.hpp"

namespace bmo {

/// Declarative landscape description; build_landscape() turns it into a
/// Landscape (light fields take their box from the arena).
struct LandscapeSpec {
    FieldKind kind = FieldKind::gaussian_mix;
    bool three_peaks_preset = false;                      // gaussian_mix from the canonical constants
    std::array<double, 4> box = bench::three_peaks_box;   // gaussian_mix box / benchmark bounds
    std::vector<GaussianBump> bumps;
    std::vector<LightSource> sources;
    std::string image_path;
    double gamma = 3.0;
    double sphere_radius = 1.0;

    friend bool operator==(const LandscapeSpec&, const LandscapeSpec&) = default;
};

struct TrajectoryBinding {
    int target = 0;
    Trajectory traj;
    friend bool operator==(const TrajectoryBinding&, const TrajectoryBinding&) = default;
};

struct ScenarioConfig {
    std::string name;
    LandscapeSpec landscape;
    std::vector<TrajectoryBinding> trajectories;
    BmoParams bmo;
    std::optional<Arena> arena;        // light-field scenarios; defines the domain box
    double capture_radius = 0.0;       // non-arena scenarios, in domain units
    PlacementPolicy placement;
    std::vector<std::uint64_t> seeds;  // batch replicates
    int dwell = 3;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

    double effective_capture_radius() const { return arena ? arena->capture_radius : capture_radius; }
};

nlohmann::json to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

/// Builds the landscape with trajectory bindings applied. `asset_root`
/// resolves relative image paths.
Landscape build_landscape(const ScenarioConfig& config, const std::string& asset_root = "");

/// Full static validation: parameter invariants, placement vs domain,
/// trajectory totality over the iteration budget, image files readable.
/// Throws std::invalid_argument on the first violation.
void validate_scenario(const ScenarioConfig& config, const std::string& asset_root = "");

/// Built-in scenario registry covering the standard experiments.
std::vector<std::string> scenario_names();
ScenarioConfig scenario_by_name(const std::string& name);

}  // namespace bmo
