#include <doctest.h>

#include "bmo/metrics.hpp"

using namespace bmo;

namespace {

std::vector<TraceRecord> single_agent_trace(const std::vector<Vec3>& path) {
    std::vector<TraceRecord> out;
    for (int t = 0; t < static_cast<int>(path.size()); ++t)
        out.push_back({t, 0, path[t], 0.0, 0.0, 0});
    return out;
}

}  // namespace

TEST_CASE("arena invariants") {
    Arena a{90.0, 25.0};
    a.validate();
    CHECK(a.domain().hi(0) == 180.0);
    a.capture_radius = 90.0;
    CHECK_THROWS_AS(a.validate(), std::invalid_argument);
    a = {0.0, 25.0};
    CHECK_THROWS_AS(a.validate(), std::invalid_argument);
}

TEST_CASE("capture requires dwell consecutive iterations") {
    const Domain box = Domain::box({0, 100}, {0, 100});
    const PeaksAt peaks = [](int) { return std::vector<Vec3>{{50, 50, 0}}; };

    SUBCASE("agent parked on the peak from iteration 0, dwell 5, captures at 4") {
        const auto trace = single_agent_trace(std::vector<Vec3>(10, {50, 50, 0}));
        const auto caps = capture_metrics(trace, peaks, 5.0, 5, box);
        REQUIRE(caps.size() == 1);
        REQUIRE(caps[0].capture_iteration.has_value());
        CHECK(*caps[0].capture_iteration == 4);
        CHECK(caps[0].final_nearest_distance == 0.0);
    }
    SUBCASE("grazing for one iteration does not count") {
        std::vector<Vec3> path(10, {90, 90, 0});
        path[4] = {50, 50, 0};
        const auto caps = capture_metrics(single_agent_trace(path), peaks, 5.0, 5, box);
        CHECK_FALSE(caps[0].capture_iteration.has_value());
    }
    SUBCASE("dwell broken by a single excursion resets the streak") {
        std::vector<Vec3> path = {{50, 50, 0}, {50, 50, 0}, {90, 90, 0}, {50, 50, 0}, {50, 50, 0}, {50, 50, 0}};
        const auto caps = capture_metrics(single_agent_trace(path), peaks, 5.0, 3, box);
        REQUIRE(caps[0].capture_iteration.has_value());
        CHECK(*caps[0].capture_iteration == 5);
    }
    SUBCASE("dwell must not mix different agents") {
        // agents alternate inside the radius but neither stays 3 in a row
        std::vector<TraceRecord> trace;
        for (int t = 0; t < 8; ++t) {
            const bool a_in = t % 2 == 0;
            trace.push_back({t, 0, a_in ? Vec3{50, 50, 0} : Vec3{90, 90, 0}, 0, 0, 0});
            trace.push_back({t, 1, a_in ? Vec3{90, 90, 0} : Vec3{50, 50, 0}, 0, 0, 1});
        }
        const auto caps = capture_metrics(trace, peaks, 5.0, 3, box);
        CHECK_FALSE(caps[0].capture_iteration.has_value());
    }
    SUBCASE("unreachable moving peak reports no capture") {
        const PeaksAt runaway = [](int t) { return std::vector<Vec3>{{5.0 + 10.0 * t, 50, 0}}; };
        const auto trace = single_agent_trace(std::vector<Vec3>(8, {5, 50, 0}));
        const auto caps = capture_metrics(trace, runaway, 2.0, 3, box);
        CHECK_FALSE(caps[0].capture_iteration.has_value());
    }
}

TEST_CASE("capture distances use the domain metric on spheres") {
    const Domain sphere = Domain::sphere(1.0);
    const PeaksAt pole = [](int) { return std::vector<Vec3>{{0, 0, 1}}; };
    // agent sits on the equator: arc distance pi/2, chord would be sqrt(2)
    const auto trace = single_agent_trace(std::vector<Vec3>(4, {1, 0, 0}));
    const auto caps = capture_metrics(trace, pole, 1.58, 3, sphere);
    REQUIRE(caps.size() == 1);
    CHECK(caps[0].capture_iteration.has_value());  // pi/2 = 1.5708 <= 1.58
    CHECK(caps[0].final_nearest_distance == doctest::Approx(1.5707963).epsilon(1e-6));
    const auto caps2 = capture_metrics(trace, pole, 1.5, 3, sphere);
    CHECK_FALSE(caps2[0].capture_iteration.has_value());
}

TEST_CASE("dwell below one is rejected") {
    const Domain box = Domain::box({0, 1}, {0, 1});
    CHECK_THROWS_AS(capture_metrics({}, [](int) { return std::vector<Vec3>{}; }, 1.0, 0, box),
                    std::invalid_argument);
}
