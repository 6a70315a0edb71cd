/*
Copyright 2026 The brickplan Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "zoning.hpp"

using namespace brickplan;

namespace {

BrickPlacement brick_at(int id, double x, double y, double arc = 0.0) {
    BrickPlacement b;
    b.id = id;
    b.target_center = {x, y, 0.025};
    b.arc_start = arc - 0.1;
    b.arc_end = arc + 0.1;
    return b;
}

BasePose base_at(int index, double x, double y) {
    BasePose p;
    p.robot_index = index;
    p.position = {x, y};
    return p;
}

} // namespace

TEST_CASE("zone classification examples") {
    const RobotSpec robot;
    SUBCASE("single robot") {
        const std::vector<BasePose> bases = {base_at(0, 0.5, -0.3)};
        const std::vector<BrickPlacement> bricks = {brick_at(0, 0.1, 0.0), brick_at(1, 0.5, 0.0),
                                                    brick_at(2, 0.9, 0.0)};
        const auto zones = classify_zones(bases, bricks, robot);
        for (const auto &z : zones.zones) {
            CHECK(z.zone == ZoneClass::Exclusive);
            CHECK(z.robots == std::vector<int>{0});
        }
    }
    SUBCASE("midpoint of two bases") {
        const std::vector<BasePose> bases = {base_at(0, 0.0, 0.0), base_at(1, 1.48, 0.0)};
        const std::vector<BrickPlacement> bricks = {brick_at(0, 0.74, 0.0)};
        const auto zones = classify_zones(bases, bricks, robot);
        CHECK(zones.at(0).zone == ZoneClass::Shared);
        CHECK(zones.at(0).robots == std::vector<int>{0, 1});
        CHECK(zone_key(zones.at(0).robots) == "0;1");
    }
    SUBCASE("far brick") {
        const std::vector<BasePose> bases = {base_at(0, 0.0, 0.0), base_at(1, 1.48, 0.0)};
        const std::vector<BrickPlacement> bricks = {brick_at(0, 0.74, 2.0)};
        const auto zones = classify_zones(bases, bricks, robot);
        CHECK(zones.at(0).zone == ZoneClass::Unreachable);
        CHECK(zones.at(0).robots.empty());
    }
}

TEST_CASE("zone keys and names") {
    CHECK(zone_key({}).empty());
    CHECK(zone_key({2}).empty());
    CHECK(zone_key({0, 1, 2}) == "0;1;2");
    CHECK(zone_class_name(ZoneClass::Exclusive) == "exclusive");
    CHECK(zone_class_name(ZoneClass::Shared) == "shared");
    CHECK(zone_class_name(ZoneClass::Unreachable) == "unreachable");
}

TEST_CASE("classification agrees with brute-force distances") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto sc = oracle::random_scenario(rng);
        const auto plan = plan_wall(sc.wall, sc.robot, sc.options);
        for (const auto &b : plan.bricks) {
            const auto expect = oracle::reachers(plan.placement.bases, b, sc.robot.r_workspace);
            const auto &z = plan.zones.at(b.id);
            CHECK(z.robots == expect);
            if (expect.empty()) {
                CHECK(z.zone == ZoneClass::Unreachable);
            } else if (expect.size() == 1) {
                CHECK(z.zone == ZoneClass::Exclusive);
            } else {
                CHECK(z.zone == ZoneClass::Shared);
            }
        }
    }
}

TEST_CASE("moving bases apart never grows the shared set") {
    const RobotSpec robot;
    std::vector<BrickPlacement> bricks;
    for (int i = 0; i < 40; ++i) {
        bricks.push_back(brick_at(i, 0.05 * i, 0.0));
    }
    std::size_t previous = bricks.size() + 1;
    for (double gap = 0.5; gap <= 2.5; gap += 0.1) {
        const std::vector<BasePose> bases = {base_at(0, 1.0 - gap / 2, 0.3), base_at(1, 1.0 + gap / 2, -0.3)};
        const auto zones = classify_zones(bases, bricks, robot);
        std::size_t shared = 0;
        for (const auto &z : zones.zones) {
            shared += z.zone == ZoneClass::Shared ? 1 : 0;
        }
        CHECK(shared <= previous);
        previous = shared;
    }
    CHECK(previous == 0);
}

TEST_CASE("brick ownership follows the pieces") {
    SegmentAssignment a;
    a.pieces = {{0, 0.0, 1.48}, {1, 1.48, 2.96}, {2, 2.96, 4.44}};
    ZoneMap zones;
    zones.zones = {{ZoneClass::Shared, {0, 1}}, {ZoneClass::Shared, {0, 1}}, {ZoneClass::Exclusive, {2}},
                   {ZoneClass::Shared, {1, 2}}};
    const std::vector<BrickPlacement> bricks = {brick_at(0, 0.0, 0.0, 0.5), brick_at(1, 0.0, 0.0, 1.48),
                                                brick_at(2, 0.0, 0.0, 4.0), brick_at(3, 0.0, 0.0, 2.96)};
    const auto owners = assign_bricks(zones, a, bricks);
    CHECK(owners.owner == std::vector<int>{0, 0, 2, 1});

    zones.zones[2] = {ZoneClass::Unreachable, {}};
    CHECK_THROWS_AS(assign_bricks(zones, a, bricks), CoverageError);

    zones.zones[2] = {ZoneClass::Exclusive, {1}};
    CHECK_THROWS_AS(assign_bricks(zones, a, bricks), CoverageError);
}

TEST_CASE("default wall zones") {
    const auto plan = plan_wall(default_wall(), RobotSpec{});
    CHECK(plan.placement.robot_count() == 3);
    int shared = 0;
    for (const auto &z : plan.zones.zones) {
        CHECK(z.zone != ZoneClass::Unreachable);
        shared += z.zone == ZoneClass::Shared ? 1 : 0;
    }
    CHECK(shared > 0);
    const auto csv = zones_csv(plan.zones);
    CHECK(csv.rfind("brick_id,zone_class,robot_set\n", 0) == 0);
    CHECK(csv.find(",shared,0;1\n") != std::string::npos);
    const auto svg = zones_svg(plan.placement, plan.bricks, plan.zones);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
