#include "bmo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

namespace bmo {

RunResult run_experiment(const ScenarioConfig& config_in, std::optional<std::uint64_t> seed_override,
                         const std::string& asset_root) {
    ScenarioConfig config = config_in;
    if (seed_override) config.bmo.rng_seed = *seed_override;
    validate_scenario(config, asset_root);

    const Landscape landscape = build_landscape(config, asset_root);
    const int n = config.bmo.n_agents;
    const int iters = config.bmo.max_iters;

    RunResult result;
    result.seed = config.bmo.rng_seed;
    result.dims = landscape.domain().dims();
    result.trace.reserve(static_cast<std::size_t>(n) * iters);

    SwarmState state = init_swarm(config.bmo, landscape.domain(), config.placement);
    for (int t = 0; t < iters; ++t) {
        SwarmState next = bmo_step(state, landscape, config.bmo);
        for (int i = 0; i < n; ++i) {
            result.trace.push_back({t, i, state.agents[i].position, next.agents[i].uv,
                                    next.agents[i].fitness, next.agents[i].lmate});
        }
        state = std::move(next);
    }

    result.metrics.per_peak = capture_metrics(
        result.trace, [&](int t) { return landscape.peaks(t); }, config.effective_capture_radius(),
        config.dwell, landscape.domain());

    bool all = !result.metrics.per_peak.empty();
    int last = 0;
    double dist_sum = 0.0;
    for (const PeakCapture& p : result.metrics.per_peak) {
        if (!p.capture_iteration) all = false;
        else last = std::max(last, *p.capture_iteration);
        dist_sum += p.final_nearest_distance;
    }
    if (all) result.metrics.all_captured_iteration = last;
    result.metrics.final_mean_peak_distance =
        result.metrics.per_peak.empty() ? 0.0 : dist_sum / result.metrics.per_peak.size();

    // nearest-agent distance to each moving source, per iteration
    const auto& bindings = landscape.bindings();
    result.metrics.tracking_error.assign(bindings.size(), {});
    if (!bindings.empty()) {
        std::vector<Vec3> positions(n);
        std::size_t i = 0;
        while (i < result.trace.size()) {
            const int t = result.trace[i].iter;
            while (i < result.trace.size() && result.trace[i].iter == t) {
                positions[result.trace[i].agent_id] = result.trace[i].position;
                ++i;
            }
            for (std::size_t b = 0; b < bindings.size(); ++b) {
                const Vec3 src = source_position(bindings[b].traj, t);
                double nearest = std::numeric_limits<double>::infinity();
                for (const Vec3& p : positions)
                    nearest = std::min(nearest, landscape.domain().metric(src, p));
                result.metrics.tracking_error[b].push_back(nearest);
            }
        }
    }
    return result;
}

namespace {

int batch_thread_cap(int n_jobs) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("BMO_MAX_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) cap = v;
    }
    return std::min(cap, n_jobs);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

BatchSummary run_batch(const ScenarioConfig& config, const std::vector<std::uint64_t>& seeds,
                       const std::string& asset_root) {
    if (seeds.empty()) throw std::invalid_argument("run_batch: need at least one seed");
    validate_scenario(config, asset_root);

    std::vector<ReplicateSummary> reps(seeds.size());
    std::atomic<std::size_t> cursor{0};
    const int n_threads = batch_thread_cap(static_cast<int>(seeds.size()));

    auto worker = [&] {
        while (true) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= seeds.size()) break;
            RunResult r = run_experiment(config, seeds[k], asset_root);
            reps[k] = {r.seed, r.metrics.per_peak, r.metrics.all_captured_iteration,
                       r.metrics.final_mean_peak_distance};
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    // aggregate in input seed order so replicate scheduling cannot matter
    BatchSummary out;
    out.replicates = std::move(reps);
    int successes = 0;
    std::vector<double> capture_iters;
    double dist_sum = 0.0;
    for (const ReplicateSummary& r : out.replicates) {
        if (r.all_captured_iteration) {
            ++successes;
            capture_iters.push_back(static_cast<double>(*r.all_captured_iteration));
        }
        dist_sum += r.final_mean_peak_distance;
    }
    out.success_fraction = static_cast<double>(successes) / out.replicates.size();
    if (!capture_iters.empty()) out.median_all_captured_iteration = median(capture_iters);
    out.mean_final_peak_distance = dist_sum / out.replicates.size();
    return out;
}

namespace {

nlohmann::json capture_to_json(const std::vector<PeakCapture>& per_peak) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PeakCapture& p : per_peak) {
        nlohmann::json pj;
        if (p.capture_iteration) pj["capture_iteration"] = *p.capture_iteration;
        else pj["capture_iteration"] = nullptr;
        pj["final_nearest_distance"] = p.final_nearest_distance;
        arr.push_back(pj);
    }
    return arr;
}

}  // namespace

nlohmann::json summary_to_json(const ScenarioConfig& config, const RunResult& result) {
    nlohmann::json j;
    j["scenario"] = to_json(config);  // resolved, post-defaults
    j["seed"] = result.seed;
    nlohmann::json m;
    m["per_peak"] = capture_to_json(result.metrics.per_peak);
    if (result.metrics.all_captured_iteration) m["all_captured_iteration"] = *result.metrics.all_captured_iteration;
    else m["all_captured_iteration"] = nullptr;
    m["final_mean_peak_distance"] = result.metrics.final_mean_peak_distance;
    if (!result.metrics.tracking_error.empty()) {
        nlohmann::json te = nlohmann::json::array();
        for (const auto& series : result.metrics.tracking_error) {
            // medians of the full and the trailing half of the series
            if (series.empty()) { te.push_back(nullptr); continue; }
            std::vector<double> tail(series.begin() + series.size() / 2, series.end());
            nlohmann::json sj;
            sj["median"] = median(std::vector<double>(series));
            sj["median_last_half"] = median(tail);
            te.push_back(sj);
        }
        m["tracking_error"] = te;
    }
    j["metrics"] = m;
    return j;
}

nlohmann::json batch_to_json(const ScenarioConfig& config, const BatchSummary& batch) {
    nlohmann::json j;
    j["scenario"] = to_json(config);
    nlohmann::json reps = nlohmann::json::array();
    for (const ReplicateSummary& r : batch.replicates) {
        nlohmann::json rj;
        rj["seed"] = r.seed;
        rj["per_peak"] = capture_to_json(r.per_peak);
        if (r.all_captured_iteration) rj["all_captured_iteration"] = *r.all_captured_iteration;
        else rj["all_captured_iteration"] = nullptr;
        rj["final_mean_peak_distance"] = r.final_mean_peak_distance;
        reps.push_back(rj);
    }
    j["replicates"] = reps;
    nlohmann::json agg;
    agg["success_fraction"] = batch.success_fraction;
    if (batch.median_all_captured_iteration) agg["median_all_captured_iteration"] = *batch.median_all_captured_iteration;
    else agg["median_all_captured_iteration"] = nullptr;
    agg["mean_final_peak_distance"] = batch.mean_final_peak_distance;
    j["aggregate"] = agg;
    return j;
}

}  // namespace bmo
