#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bmo/domain.hpp"
#include "bmo/trace.hpp"
#include "bmo/vec.hpp"

namespace bmo {

/// Workspace geometry of the robot experiments. The movement domain is the
/// bounding box [0, 2R]^2 of the outer circle with the origin at the corner;
/// the capture radius is the inner detection circle.
struct Arena {
    double outer_radius = 90.0;
    double capture_radius = 25.0;

    void validate() const;
    Domain domain() const { return Domain::box({0.0, 2.0 * outer_radius}, {0.0, 2.0 * outer_radius}); }

    friend bool operator==(const Arena&, const Arena&) = default;
};

struct PeakCapture {
    std::optional<int> capture_iteration;  // first iteration ending a dwell-long stay
    double final_nearest_distance = 0.0;
};

struct RunMetrics {
    std::vector<PeakCapture> per_peak;
    std::optional<int> all_captured_iteration;  // iteration the last peak first completes capture
    double final_mean_peak_distance = 0.0;
    std::vector<std::vector<double>> tracking_error;  // [moving source][iteration]
};

using PeaksAt = std::function<std::vector<Vec3>(int t)>;

/// Capture bookkeeping over a trace: a peak counts captured at iteration t
/// when one agent stays within capture_radius of it for dwell consecutive
/// iterations ending at t. Distances use the domain metric.
std::vector<PeakCapture> capture_metrics(const std::vector<TraceRecord>& trace, const PeaksAt& peaks,
                                         double capture_radius, int dwell, const Domain& domain);

}  // namespace bmo
