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

#include <optional>
#include <vector>

#include "decomposition.hpp"
#include "placement.hpp"
#include "schedule_sim.hpp"
#include "wall_model.hpp"
#include "zoning.hpp"

namespace brickplan {

struct PipelineOptions {
    /// Overrides the minimal robot count.
    std::optional<int> robot_count;
    double material_offset = 0.4;
};

/// Everything derived from a wall and a robot before timing: decomposition, bases, depots, zones.
struct WallPlan {
    WallSpec wall;
    std::vector<BrickPlacement> bricks;
    PrecedenceGraph precedence;
    PlacementPlan placement;
    ZoneMap zones;
    BrickAssignment assignment;
};

WallPlan plan_wall(const WallSpec &wall, const RobotSpec &robot, const PipelineOptions &options = {});

struct SimulationRun {
    Schedule schedule;
    SimResult result;
};

SimulationRun simulate_plan(const WallPlan &plan, const TimeModel &model);

} // namespace brickplan
