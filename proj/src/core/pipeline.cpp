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

#include "pipeline.hpp"

namespace brickplan {

WallPlan plan_wall(const WallSpec &wall, const RobotSpec &robot, const PipelineOptions &options) {
    validate(wall);
    validate(robot);

    WallPlan plan;
    plan.wall = wall;
    plan.bricks = generate_bricks(wall);
    plan.precedence = support_graph(plan.bricks);

    PlacementPlan &placement = plan.placement;
    placement.robot = robot;
    placement.l_optimal = l_optimal(robot);
    const int n = options.robot_count.value_or(required_robot_count(wall_length(wall), placement.l_optimal));
    placement.assignment = decompose_wall(wall, n, placement.l_optimal);
    placement.bases = place_robots(wall, placement.assignment, robot);
    for (const auto &base : placement.bases) {
        placement.depots.push_back(place_material(base, options.material_offset, robot));
    }

    plan.zones = classify_zones(placement.bases, plan.bricks, robot);
    plan.assignment = assign_bricks(plan.zones, placement.assignment, plan.bricks);
    return plan;
}

SimulationRun simulate_plan(const WallPlan &plan, const TimeModel &model) {
    SimulationRun run;
    run.schedule = build_schedule(plan.assignment, plan.zones, plan.precedence, plan.placement, plan.bricks, model);
    run.result = simulate(run.schedule);
    return run;
}

} // namespace brickplan
