#pragma once

#include <vector>

#include "bmo/domain.hpp"
#include "bmo/params.hpp"
#include "bmo/rng.hpp"
#include "bmo/vec.hpp"

namespace bmo {

class Landscape;

/// One agent: position, the UV level it broadcasts, the fitness it read in
/// the most recent step, and its chosen local mate (own id when self-mated).
struct Bfly {
    int id = 0;
    Vec3 position;
    double uv = 0.0;
    double fitness = 0.0;
    int lmate = 0;
};

/// Swarm snapshot at one time index. `received` is the N x N row-major
/// matrix of distributed UV: received[i*n + j] is the amount agent j absorbed
/// from agent i this iteration (diagonal zero, row i sums to agent i's uv).
struct SwarmState {
    int time_index = 0;
    std::vector<Bfly> agents;
    std::vector<double> received;
    SwarmRng rng;

    int size() const { return static_cast<int>(agents.size()); }
    double received_uv(int from, int to) const { return received[static_cast<std::size_t>(from) * agents.size() + to]; }
};

enum class PlacementKind { uniform_random, quadrant_random, explicit_list };

struct PlacementPolicy {
    PlacementKind kind = PlacementKind::uniform_random;
    std::vector<Vec3> positions;  // explicit_list only

    friend bool operator==(const PlacementPolicy&, const PlacementPolicy&) = default;
};

/// UV recurrence: max(0, b1 * prev + b2 * fitness). Rejects non-finite
/// inputs, which signal a broken landscape upstream.
double update_uv(double prev_uv, double fitness, const BmoParams& params);

/// Fills state.received from current uv levels and positions. Pairwise
/// distances are floored at d_min; each sender's weights are the normalized
/// inverse distances to every other agent. A single-agent swarm gets the
/// 1x1 zero matrix.
void distribute_uv(SwarmState& state, const BmoParams& params);

/// First candidate, in descending order of UV absorbed by `i` (ties: nearer,
/// then lower id), whose fitness strictly exceeds agent i's. Returns i when
/// no candidate is fitter.
int select_lmate(int i, const SwarmState& state);

/// Step toward the mate, clamped so the agent never overshoots it.
Vec3 move_agent(const Vec3& x_i, const Vec3& x_lmate, double step_size);

/// One synchronous iteration: fitness read, UV update, UV distribution,
/// mate selection and movement all evaluated against the time-t snapshot.
SwarmState bmo_step(const SwarmState& state, const Landscape& landscape, const BmoParams& params);

SwarmState init_swarm(const BmoParams& params, const Domain& domain, const PlacementPolicy& placement);

}  // namespace bmo
