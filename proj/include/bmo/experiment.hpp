#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmo/metrics.hpp"
#include "bmo/scenario.hpp"
#include "bmo/trace.hpp"

namespace bmo {

struct RunResult {
    std::uint64_t seed = 0;
    RunMetrics metrics;
    std::vector<TraceRecord> trace;
    int dims = 2;
};

struct ReplicateSummary {
    std::uint64_t seed = 0;
    std::vector<PeakCapture> per_peak;
    std::optional<int> all_captured_iteration;
    double final_mean_peak_distance = 0.0;
};

struct BatchSummary {
    std::vector<ReplicateSummary> replicates;  // in input seed order
    double success_fraction = 0.0;             // replicates with every peak captured
    std::optional<double> median_all_captured_iteration;
    double mean_final_peak_distance = 0.0;
};

/// Runs one scenario: init, max_iters synchronous steps, one trace row per
/// agent per iteration, then all metrics. Deterministic for a fixed seed.
RunResult run_experiment(const ScenarioConfig& config,
                         std::optional<std::uint64_t> seed_override = std::nullopt,
                         const std::string& asset_root = "");

/// Independent replicates, one per seed. Parallelized up to BMO_MAX_THREADS
/// (or hardware concurrency); aggregation is order-independent.
BatchSummary run_batch(const ScenarioConfig& config, const std::vector<std::uint64_t>& seeds,
                       const std::string& asset_root = "");

nlohmann::json summary_to_json(const ScenarioConfig& config, const RunResult& result);
nlohmann::json batch_to_json(const ScenarioConfig& config, const BatchSummary& batch);

}  // namespace bmo
