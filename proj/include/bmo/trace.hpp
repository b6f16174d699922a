#pragma once

#include <string>
#include <vector>

#include "bmo/vec.hpp"

namespace bmo {

/// One log row: agent state at an iteration, position pre-move, uv/fitness/
/// lmate as computed in that iteration's phases.
struct TraceRecord {
    int iter = 0;
    int agent_id = 0;
    Vec3 position;
    double uv = 0.0;
    double fitness = 0.0;
    int lmate_id = 0;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// CSV with the exact header `iter,agent_id,x,y[,z],uv,fitness,lmate_id`;
/// floats carry 17 significant digits so read(write(r)) == r bitwise.
void write_trace(const std::vector<TraceRecord>& records, const std::string& path, int dims);
std::string trace_to_string(const std::vector<TraceRecord>& records, int dims);

std::vector<TraceRecord> read_trace(const std::string& path);
std::vector<TraceRecord> trace_from_string(const std::string& text);

}  // namespace bmo
