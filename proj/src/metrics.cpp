#include "bmo/metrics.hpp"

#include <limits>
#include <stdexcept>

namespace bmo {

void Arena::validate() const {
    if (!(outer_radius > 0.0)) throw std::invalid_argument("arena: outer_radius must be > 0");
    if (!(capture_radius > 0.0 && capture_radius < outer_radius))
        throw std::invalid_argument("arena: need 0 < capture_radius < outer_radius");
}

std::vector<PeakCapture> capture_metrics(const std::vector<TraceRecord>& trace, const PeaksAt& peaks,
                                         double capture_radius, int dwell, const Domain& domain) {
    if (dwell < 1) throw std::invalid_argument("capture_metrics: dwell must be >= 1");
    if (trace.empty()) return {};

    const int n_peaks = static_cast<int>(peaks(trace.front().iter).size());
    int n_agents = 0;
    for (const TraceRecord& r : trace) n_agents = std::max(n_agents, r.agent_id + 1);

    std::vector<PeakCapture> out(n_peaks);
    std::vector<std::vector<int>> streak(n_peaks, std::vector<int>(n_agents, 0));

    std::size_t i = 0;
    std::vector<Vec3> positions(n_agents);
    int last_t = trace.back().iter;
    while (i < trace.size()) {
        const int t = trace[i].iter;
        while (i < trace.size() && trace[i].iter == t) {
            positions[trace[i].agent_id] = trace[i].position;
            ++i;
        }
        const std::vector<Vec3> pk = peaks(t);
        for (int k = 0; k < n_peaks; ++k) {
            for (int a = 0; a < n_agents; ++a) {
                if (domain.metric(pk[k], positions[a]) <= capture_radius)
                    ++streak[k][a];
                else
                    streak[k][a] = 0;
                if (!out[k].capture_iteration && streak[k][a] >= dwell)
                    out[k].capture_iteration = t;
            }
            if (t == last_t) {
                double nearest = std::numeric_limits<double>::infinity();
                for (int a = 0; a < n_agents; ++a)
                    nearest = std::min(nearest, domain.metric(pk[k], positions[a]));
                out[k].final_nearest_distance = nearest;
            }
        }
    }
    return out;
}

}  // namespace bmo
