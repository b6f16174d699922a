#include "bmo/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bmo/landscape.hpp"

namespace bmo {

namespace {

Vec3 hill_climb(const Landscape& l, Vec3 p, double step, double min_step,
                double xlo, double xhi, double ylo, double yhi) {
    double best = l.evaluate(p, 0);
    while (step > min_step) {
        bool improved = false;
        const Vec3 probes[4] = {{p.x + step, p.y, 0}, {p.x - step, p.y, 0},
                                {p.x, p.y + step, 0}, {p.x, p.y - step, 0}};
        for (const Vec3& q : probes) {
            if (q.x < xlo || q.x > xhi || q.y < ylo || q.y > yhi) continue;
            const double v = l.evaluate(q, 0);
            if (v > best) {
                best = v;
                p = q;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return p;
}

}  // namespace

std::vector<Vec3> grid_local_max_oracle(const Landscape& landscape, int resolution) {
    const Domain& dom = landscape.domain();
    if (dom.kind() != Domain::Kind::box)
        throw std::invalid_argument("grid oracle: only box domains are supported");
    if (resolution < 100) throw std::invalid_argument("grid oracle: resolution must be >= 100");

    const int res = resolution;
    const double xlo = dom.lo(0), xhi = dom.hi(0), ylo = dom.lo(1), yhi = dom.hi(1);
    const double cw = dom.width(0) / res;
    const double ch = dom.width(1) / res;
    const double cell = std::max(cw, ch);

    std::vector<double> v(static_cast<std::size_t>(res) * res);
    for (int i = 0; i < res; ++i) {
        const double x = xlo + (i + 0.5) * cw;
        for (int j = 0; j < res; ++j) {
            const double y = ylo + (j + 0.5) * ch;
            v[static_cast<std::size_t>(i) * res + j] = landscape.evaluate({x, y, 0.0}, 0);
        }
    }
    const auto at = [&](int i, int j) { return v[static_cast<std::size_t>(i) * res + j]; };

    std::vector<Vec3> candidates;
    for (int i = 1; i < res - 1; ++i) {
        for (int j = 1; j < res - 1; ++j) {
            const double c = at(i, j);
            bool is_peak = true;
            for (int di = -1; di <= 1 && is_peak; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    if (!(c > at(i + di, j + dj))) {
                        is_peak = false;
                        break;
                    }
                }
            if (is_peak)
                candidates.push_back({xlo + (i + 0.5) * cw, ylo + (j + 0.5) * ch, 0.0});
        }
    }

    std::vector<Vec3> refined;
    refined.reserve(candidates.size());
    for (const Vec3& c : candidates)
        refined.push_back(hill_climb(landscape, c, 0.5 * cell, 1e-3 * cell, xlo, xhi, ylo, yhi));

    // keep the higher of any pair closer than one cell
    std::sort(refined.begin(), refined.end(), [&](const Vec3& a, const Vec3& b) {
        return landscape.evaluate(a, 0) > landscape.evaluate(b, 0);
    });
    std::vector<Vec3> peaks;
    for (const Vec3& p : refined) {
        bool dup = false;
        for (const Vec3& q : peaks) {
            if (distance(p, q) < cell) {
                dup = true;
                break;
            }
        }
        if (!dup) peaks.push_back(p);
    }
    return peaks;
}

}  // namespace bmo
