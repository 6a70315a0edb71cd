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

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decomposition.hpp"
#include "placement.hpp"
#include "wall_model.hpp"
#include "zoning.hpp"

namespace brickplan {

/// Parametric pick-and-place time model. Every action costs planning time t_p plus execution time t_e.
struct TimeModel {
    double t_plan_base = 1.0;            // s
    double plan_proximity_penalty = 4.0; // s
    double proximity_threshold = 0.25;   // m
    double t_exec_base = 2.0;            // s
    double travel_rate = 4.0;            // s/m
    std::array<double, 3> config_factor = {1.0, 1.15, 1.3};

    double factor(Configuration c) const { return config_factor[static_cast<std::size_t>(c)]; }

    /// Multiplies every time-valued parameter (s and s/m) by k. The length threshold and the
    /// dimensionless configuration factors are unchanged, so every action time scales by exactly k.
    TimeModel scaled(double k) const;

    friend bool operator==(const TimeModel &, const TimeModel &) = default;
};

void validate(const TimeModel &model);
TimeModel parse_time_model(std::string_view text);
TimeModel load_time_model(const std::filesystem::path &path);
std::string serialize_time_model(const TimeModel &model);

struct ActionTime {
    double planning = 0.0;
    double execution = 0.0;

    double total() const { return planning + execution; }
};

ActionTime eval_action_time(const TimeModel &model, double pick_distance, double place_distance,
                            double wall_clearance, Configuration config);

/// Pick-phase and place-phase durations of one action, summing to its ActionTime.
struct ActionCost {
    int brick_id = 0;
    ActionTime time;
    double pick_duration = 0.0;
    double place_duration = 0.0;
};

/// Cost of the given robot placing the given brick under the plan's geometry.
ActionCost action_cost(const TimeModel &model, const PlacementPlan &plan, int robot, const BrickPlacement &brick);

struct ScheduledAction {
    int brick_id = 0;
    double pick_start = 0.0;
    double pick_end = 0.0;
    double place_start = 0.0;
    double place_end = 0.0;
    /// Lock key for shared bricks, empty otherwise.
    std::string zone_key;

    double busy() const { return (pick_end - pick_start) + (place_end - place_start); }
    friend bool operator==(const ScheduledAction &, const ScheduledAction &) = default;
};

struct LockInterval {
    int holder = 0;
    int brick_id = 0;
    double start = 0.0;
    double end = 0.0;
    friend bool operator==(const LockInterval &, const LockInterval &) = default;
};

struct Schedule {
    std::vector<std::vector<ScheduledAction>> robots;
    /// Per shared-zone key, holder intervals sorted by start.
    std::map<std::string, std::vector<LockInterval>> locks;

    friend bool operator==(const Schedule &, const Schedule &) = default;
};

/// Greedy list scheduling in virtual time: each robot works its bricks in (course, arclength) order,
/// an action on a shared brick holds that zone's lock from pick start to place end, and a place
/// never starts before every supporting brick is placed. The globally earliest feasible action is
/// committed first (ties to the lower robot index).
Schedule build_schedule(const BrickAssignment &assignment, const ZoneMap &zones, const PrecedenceGraph &precedence,
                        const PlacementPlan &plan, std::span<const BrickPlacement> bricks, const TimeModel &model);

/// Returns human-readable invariant violations; empty when the schedule is valid.
std::vector<std::string> check_schedule(const Schedule &schedule, const PrecedenceGraph &precedence);

struct RobotTimes {
    double busy = 0.0;
    double idle = 0.0;
    double completion = 0.0;
};

struct SimResult {
    double makespan = 0.0;
    double t_total_sum = 0.0;
    std::vector<RobotTimes> per_robot;
};

SimResult simulate(const Schedule &schedule);

/// The same actions executed back to back by a single robot, in order of original start time.
Schedule single_robot_replay(const Schedule &schedule);

/// robot,brick_id,action,start_s,end_s,zone_key
std::string schedule_csv(const Schedule &schedule);
std::string sim_result_json(const SimResult &result);

} // namespace brickplan
