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

#include <string>
#include <vector>

#include "decomposition.hpp"
#include "geometry.hpp"
#include "wall_model.hpp"

namespace brickplan {

/// Side of the wall relative to the piece's direction of travel; on a straight wall along +x these
/// are the -y and +y half-planes.
enum class Side { NegativeY, PositiveY };

struct BasePose {
    int robot_index = 0;
    Vec2 position;
    Side side = Side::NegativeY;
    /// Perpendicular distance from the base to its piece's centerline.
    double clearance = 0.0;
};

struct MaterialDepot {
    int robot_index = 0;
    Vec2 position;
    double offset_from_base = 0.0;
};

/// The three closed-form base positions for a wall whose third piece turns by theta (radians).
struct ClosedFormBases {
    Vec2 p1;
    Vec2 p2;
    Vec2 p3;
};

ClosedFormBases closed_form_bases(Vec2 origin, double piece_length, double stand_off, double theta);

/// One base per piece at stand_off from the piece midpoint. Sides follow (-, +, +) for up to three
/// robots and alternate (-1)^k beyond that (straight walls only).
std::vector<BasePose> place_robots(const WallSpec &spec, const SegmentAssignment &assignment,
                                   const RobotSpec &robot);

/// Depot along the robot's local x axis (world +x). Offset must lie in [r_1, r_7].
MaterialDepot place_material(const BasePose &base, double offset, const RobotSpec &robot);

/// Cylindrical workspace: horizontal distance <= r_workspace, boundary inclusive.
bool is_reachable(Vec2 base, const Vec3 &point, const RobotSpec &robot);
inline bool is_reachable(const BasePose &base, const Vec3 &point, const RobotSpec &robot) {
    return is_reachable(base.position, point, robot);
}

/// End-effector position of the ready posture.
Vec2 ready_point(const BasePose &base, const RobotSpec &robot);

struct PlacementPlan {
    RobotSpec robot;
    double l_optimal = 0.0;
    SegmentAssignment assignment;
    std::vector<BasePose> bases;
    std::vector<MaterialDepot> depots;

    int robot_count() const { return static_cast<int>(bases.size()); }
};

/// Structured text (JSON) with one entry per robot; numbers use fixed six decimals.
std::string placement_plan_json(const PlacementPlan &plan);

} // namespace brickplan
