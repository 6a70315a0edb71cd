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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wall_model.hpp"

namespace brickplan {

/// Intermediate posture used as the middle stage of every pick-and-place motion.
enum class Configuration { ReadyFront01 = 0, ReadyFront02 = 1, ReadySide = 2 };

inline constexpr std::array<Configuration, 3> kAllConfigurations = {
    Configuration::ReadyFront01, Configuration::ReadyFront02, Configuration::ReadySide};

std::string configuration_name(Configuration c);
std::optional<Configuration> configuration_from_name(std::string_view name);

struct RobotSpec {
    double r_workspace = 0.85;
    /// Reach grid r_1..r_7, strictly increasing and below r_workspace.
    std::vector<double> radii = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    /// Perpendicular base-to-wall distance (r_2).
    double stand_off = 0.3;
    /// Maximum useful coverage radius (r_7).
    double r_cover = 0.8;
    Configuration configuration = Configuration::ReadyFront01;
    /// Horizontal distance of the ready posture's end effector in front of the base.
    double ready_reach = 0.45;

    double r_min() const { return radii.front(); }
    double r_max() const { return radii.back(); }
    friend bool operator==(const RobotSpec &, const RobotSpec &) = default;
};

void validate(const RobotSpec &robot);
RobotSpec parse_robot_spec(std::string_view text);
RobotSpec load_robot_spec(const std::filesystem::path &path);
std::string serialize_robot_spec(const RobotSpec &robot);

/// Chord of the r_cover circle at perpendicular distance stand_off.
double l_optimal(double r_cover, double stand_off);
double l_optimal(const RobotSpec &robot);

/// Smallest n with wall_length <= n * l_opt (1e-9 m slack).
int required_robot_count(double wall_len, double l_opt);

struct WallPiece {
    int robot_index = 0;
    double arc_start = 0.0;
    double arc_end = 0.0;

    double length() const { return arc_end - arc_start; }
};

struct SegmentAssignment {
    std::vector<WallPiece> pieces;

    int robot_count() const { return static_cast<int>(pieces.size()); }
    double piece_length() const { return pieces.empty() ? 0.0 : pieces.front().length(); }
};

/// Equal-arclength split into n pieces; throws InfeasibleError when n * l_opt < wall length.
SegmentAssignment decompose_wall(const WallSpec &spec, int n, double l_opt);

} // namespace brickplan
