#include "bmo/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bmo/landscape.hpp"

namespace bmo {

double update_uv(double prev_uv, double fitness, const BmoParams& params) {
    if (!std::isfinite(prev_uv))
        throw std::domain_error("update_uv: non-finite previous uv " + std::to_string(prev_uv));
    if (!std::isfinite(fitness))
        throw std::domain_error("update_uv: non-finite fitness " + std::to_string(fitness) +
                                " (landscape evaluation is broken)");
    return std::max(0.0, params.b1 * prev_uv + params.b2 * fitness);
}

void distribute_uv(SwarmState& state, const BmoParams& params) {
    const int n = state.size();
    state.received.assign(static_cast<std::size_t>(n) * n, 0.0);
    if (n < 2) return;

    std::vector<double> inv(n, 0.0);
    std::vector<double> sorted;
    sorted.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        sorted.clear();
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const double d = std::max(distance(state.agents[i].position, state.agents[k].position),
                                      params.d_min);
            inv[k] = 1.0 / d;
            sorted.push_back(inv[k]);
        }
        // Summing in value order keeps the denominator independent of agent
        // id order, so re-labelling agents cannot perturb the weights.
        std::sort(sorted.begin(), sorted.end());
        double denom = 0.0;
        for (double v : sorted) denom += v;

        const double uv_i = state.agents[i].uv;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            state.received[static_cast<std::size_t>(i) * n + j] = uv_i * inv[j] / denom;
        }
    }
}

int select_lmate(int i, const SwarmState& state) {
    const int n = state.size();
    const Bfly& me = state.agents[i];
    int best = i;
    double best_ruv = -1.0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (!(state.agents[j].fitness > me.fitness)) continue;
        const double ruv = state.received_uv(j, i);
        const double dj = distance(me.position, state.agents[j].position);
        const bool wins = best == i || ruv > best_ruv || (ruv == best_ruv && dj < best_dist);
        // equal ruv and distance: keep the lower id, i.e. the earlier j
        if (wins) {
            best = j;
            best_ruv = ruv;
            best_dist = dj;
        }
    }
    return best;
}

Vec3 move_agent(const Vec3& x_i, const Vec3& x_lmate, double step_size) {
    if (!x_i.finite() || !x_lmate.finite())
        throw std::domain_error("move_agent: non-finite position");
    if (x_lmate == x_i) return x_i;
    const Vec3 d = x_lmate - x_i;
    const double dist = d.norm();
    if (dist == 0.0) return x_i;
    if (dist <= step_size) return x_lmate;  // never overshoot the mate
    return x_i + d * (step_size / dist);
}

SwarmState bmo_step(const SwarmState& state, const Landscape& landscape, const BmoParams& params) {
    SwarmState next = state;
    const int n = state.size();
    const int t = state.time_index;

    for (int i = 0; i < n; ++i) {
        const double f = landscape.evaluate(state.agents[i].position, t);
        next.agents[i].fitness = f;
        next.agents[i].uv = update_uv(state.agents[i].uv, f, params);
    }

    distribute_uv(next, params);

    for (int i = 0; i < n; ++i) next.agents[i].lmate = select_lmate(i, next);

    const bool planar = landscape.domain().kind() == Domain::Kind::box;
    for (int i = 0; i < n; ++i) {
        const int m = next.agents[i].lmate;
        Vec3 moved;
        if (m == i) {
            moved = state.agents[i].position;
            if (params.jitter > 0.0) {
                const Vec3 dir = planar ? next.rng.unit_planar() : next.rng.unit_sphere();
                moved = moved + dir * params.jitter;
            }
        } else {
            moved = move_agent(state.agents[i].position, state.agents[m].position, params.step_size);
        }
        next.agents[i].position = landscape.domain().clip(moved, state.agents[i].position);
    }

    next.time_index = t + 1;
    return next;
}

namespace {

Vec3 draw_in_box(SwarmRng& rng, double xlo, double xhi, double ylo, double yhi) {
    const double x = rng.uniform(xlo, xhi);
    const double y = rng.uniform(ylo, yhi);
    return {x, y, 0.0};
}

}  // namespace

SwarmState init_swarm(const BmoParams& params, const Domain& domain, const PlacementPolicy& placement) {
    params.validate();
    const int n = params.n_agents;
    SwarmState state;
    state.time_index = 0;
    state.rng = SwarmRng(params.rng_seed);
    state.agents.resize(n);
    state.received.assign(static_cast<std::size_t>(n) * n, 0.0);

    switch (placement.kind) {
        case PlacementKind::uniform_random:
            for (int i = 0; i < n; ++i) {
                if (domain.kind() == Domain::Kind::box) {
                    state.agents[i].position =
                        draw_in_box(state.rng, domain.lo(0), domain.hi(0), domain.lo(1), domain.hi(1));
                } else {
                    state.agents[i].position = state.rng.unit_sphere() * domain.radius();
                }
            }
            break;
        case PlacementKind::quadrant_random: {
            if (domain.kind() != Domain::Kind::box)
                throw std::invalid_argument("init_swarm: quadrant placement requires a 2-D box domain");
            const double mx = 0.5 * (domain.lo(0) + domain.hi(0));
            const double my = 0.5 * (domain.lo(1) + domain.hi(1));
            for (int i = 0; i < n; ++i) {
                const int q = i % 4;
                const double xlo = (q % 2 == 0) ? domain.lo(0) : mx;
                const double xhi = (q % 2 == 0) ? mx : domain.hi(0);
                const double ylo = (q < 2) ? domain.lo(1) : my;
                const double yhi = (q < 2) ? my : domain.hi(1);
                state.agents[i].position = draw_in_box(state.rng, xlo, xhi, ylo, yhi);
            }
            break;
        }
        case PlacementKind::explicit_list: {
            if (static_cast<int>(placement.positions.size()) != n)
                throw std::invalid_argument("init_swarm: explicit placement needs exactly n_agents positions");
            const double tol = 1e-6 * std::max(1.0, domain.max_extent());
            for (int i = 0; i < n; ++i) {
                const Vec3& p = placement.positions[i];
                if (!domain.contains(p, tol))
                    throw std::invalid_argument("init_swarm: explicit position " + std::to_string(i) +
                                                " lies outside the domain");
                state.agents[i].position = domain.clip(p, p);
            }
            break;
        }
    }

    for (int i = 0; i < n; ++i) {
        state.agents[i].id = i;
        state.agents[i].uv = 0.0;
        state.agents[i].fitness = 0.0;
        state.agents[i].lmate = i;
    }
    return state;
}

}  // namespace bmo
