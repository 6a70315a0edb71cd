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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "decomposition.hpp"
#include "schedule_sim.hpp"
#include "wall_model.hpp"

namespace brickplan {

/// Single-robot target line used by the default sweep: 0.60 m long, two courses.
WallSpec sweep_target_line();

struct ScenarioGrid {
    std::vector<double> material_offsets = {0.3, 0.4, 0.5, 0.8};
    /// Extra offsets evaluated for ReadyFront01 only.
    std::vector<double> ready_front01_extra_offsets = {0.6};
    std::vector<double> stand_offs = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    std::vector<Configuration> configurations = {kAllConfigurations.begin(), kAllConfigurations.end()};
    WallSpec wall = sweep_target_line();
};

ScenarioGrid parse_scenario_grid(std::string_view text);
ScenarioGrid load_scenario_grid(const std::filesystem::path &path);

struct Scenario {
    Configuration configuration = Configuration::ReadyFront01;
    double material_offset = 0.0;
    double stand_off = 0.0;
};

/// Scenarios in grid order: per configuration, offsets (extras last) by stand-offs.
std::vector<Scenario> enumerate_scenarios(const ScenarioGrid &grid);

struct SweepRow {
    Scenario scenario;
    bool feasible = false;
    std::string reason;
    int robots = 0;
    double makespan = 0.0;
    double t_total_sum = 0.0;
    std::vector<double> busy;
};

struct SweepReport {
    /// Sorted by (configuration, material_offset, stand_off).
    std::vector<SweepRow> rows;
};

/// Full pipeline for one scenario with stand_off as r_2 and the depot at material_offset.
/// Errors are captured in the row rather than thrown.
SweepRow run_scenario(const Scenario &scenario, const WallSpec &wall, const RobotSpec &robot, const TimeModel &model);

SweepReport sort_report(std::vector<SweepRow> rows);

/// Evaluates every scenario, on up to `threads` workers (0 = hardware concurrency).
SweepReport run_sweep(const ScenarioGrid &grid, const RobotSpec &robot, const TimeModel &model,
                      unsigned threads = 0);

enum class Objective { Makespan, TotalSum };

double objective_value(const SweepRow &row, Objective objective);

struct BestPlacement {
    double material_offset = 0.0;
    double stand_off = 0.0;
    Configuration configuration = Configuration::ReadyFront01;
    double value = 0.0;
};

/// Argmin over feasible rows (relative tolerance 1e-9), ties to smaller stand_off, then smaller
/// offset, then configuration order. Throws EmptyReport when nothing is feasible.
BestPlacement best_placement(const SweepReport &report, Objective objective);

std::string sweep_csv(const SweepReport &report);

/// Line chart of objective vs stand-off, one series per material offset.
std::string sweep_plot_svg(const SweepReport &report, Configuration configuration, Objective objective);

} // namespace brickplan
