#pragma once

#include <vector>

#include "bmo/vec.hpp"

namespace bmo {

class Landscape;

/// Ground-truth peak finder for box landscapes at t = 0: samples a uniform
/// grid of cell centers, keeps interior cells strictly greater than all 8
/// neighbors, refines each candidate with a compass hill-climb and drops
/// duplicates closer than one cell. Sphere domains are unsupported (the
/// analytic pole is the ground truth there).
std::vector<Vec3> grid_local_max_oracle(const Landscape& landscape, int resolution);

}  // namespace bmo
