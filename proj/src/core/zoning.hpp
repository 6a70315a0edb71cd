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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "placement.hpp"
#include "wall_model.hpp"

namespace brickplan {

enum class ZoneClass { Exclusive, Shared, Unreachable };

struct BrickZone {
    ZoneClass zone = ZoneClass::Unreachable;
    /// Sorted robot indices whose workspace contains the brick center.
    std::vector<int> robots;

    friend bool operator==(const BrickZone &, const BrickZone &) = default;
};

/// Indexed by brick id.
struct ZoneMap {
    std::vector<BrickZone> zones;

    const BrickZone &at(int brick_id) const { return zones.at(static_cast<std::size_t>(brick_id)); }
};

ZoneMap classify_zones(std::span<const BasePose> bases, std::span<const BrickPlacement> bricks,
                       const RobotSpec &robot);

/// Owner per brick id.
struct BrickAssignment {
    std::vector<int> owner;
};

/// Owner is the robot whose piece contains the brick's center arclength; a brick on a piece
/// boundary belongs to the lower piece. Throws CoverageError listing unreachable bricks.
BrickAssignment assign_bricks(const ZoneMap &zones, const SegmentAssignment &assignment,
                              std::span<const BrickPlacement> bricks);

/// "0;1" style lock key; empty for a single robot.
std::string zone_key(const std::vector<int> &robots);
std::string zone_class_name(ZoneClass zone);

/// brick_id,zone_class,robot_set
std::string zones_csv(const ZoneMap &zones);

/// Plan-view overlay: blue exclusive, yellow pairwise, red three-or-more robots, grey unreachable.
std::string zones_svg(const PlacementPlan &plan, std::span<const BrickPlacement> bricks, const ZoneMap &zones);

} // namespace brickplan
