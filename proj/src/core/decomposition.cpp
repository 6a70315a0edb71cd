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

#include "decomposition.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "json_util.hpp"

namespace brickplan {

namespace {

constexpr double kLengthSlack = 1e-9;

bool in_grid(const std::vector<double> &radii, double r) {
    for (double v : radii) {
        if (std::abs(v - r) <= 1e-12) {
            return true;
        }
    }
    return false;
}

} // namespace

std::string configuration_name(Configuration c) {
    switch (c) {
    case Configuration::ReadyFront01:
        return "ReadyFront01";
    case Configuration::ReadyFront02:
        return "ReadyFront02";
    case Configuration::ReadySide:
        return "ReadySide";
    }
    return "ReadyFront01";
}

std::optional<Configuration> configuration_from_name(std::string_view name) {
    for (Configuration c : kAllConfigurations) {
        if (configuration_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

void validate(const RobotSpec &robot) {
    if (robot.radii.empty()) {
        throw ValidationError("robot radii grid must not be empty");
    }
    if (!(robot.radii.front() > 0.0)) {
        throw ValidationError("robot radii must be > 0");
    }
    for (std::size_t i = 1; i < robot.radii.size(); ++i) {
        if (!(robot.radii[i] > robot.radii[i - 1])) {
            throw ValidationError("robot radii must be strictly increasing");
        }
    }
    if (!(robot.radii.back() < robot.r_workspace)) {
        throw ValidationError("largest reach radius must be < r_workspace");
    }
    if (!in_grid(robot.radii, robot.stand_off)) {
        throw ValidationError("stand_off must be a member of the radii grid");
    }
    if (!in_grid(robot.radii, robot.r_cover)) {
        throw ValidationError("r_cover must be a member of the radii grid");
    }
    if (!(robot.ready_reach > 0.0) || robot.ready_reach > robot.r_workspace) {
        throw ValidationError("ready_reach must lie in (0, r_workspace]");
    }
}

RobotSpec parse_robot_spec(std::string_view text) {
    using detail::json;
    const json doc = detail::parse_document(text, "robot document");
    if (!doc.is_object()) {
        throw ParseError("robot document: top level must be an object");
    }
    RobotSpec robot;
    robot.r_workspace = detail::number_field_or(doc, "r_workspace", "", robot.r_workspace);
    if (doc.contains("radii")) {
        robot.radii = detail::number_list(doc["radii"], "radii");
    }
    robot.stand_off = detail::number_field_or(doc, "stand_off", "", robot.stand_off);
    robot.r_cover = detail::number_field_or(doc, "r_cover", "", robot.r_cover);
    robot.ready_reach = detail::number_field_or(doc, "ready_reach", "", robot.ready_reach);
    if (doc.contains("configuration")) {
        const std::string name = detail::string_field(doc, "configuration", "");
        auto c = configuration_from_name(name);
        if (!c) {
            throw ParseError("field 'configuration': unknown configuration '" + name + "'");
        }
        robot.configuration = *c;
    }
    validate(robot);
    return robot;
}

RobotSpec load_robot_spec(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open robot document '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_robot_spec(ss.str());
}

std::string serialize_robot_spec(const RobotSpec &robot) {
    detail::json doc;
    doc["r_workspace"] = robot.r_workspace;
    doc["radii"] = robot.radii;
    doc["stand_off"] = robot.stand_off;
    doc["r_cover"] = robot.r_cover;
    doc["configuration"] = configuration_name(robot.configuration);
    doc["ready_reach"] = robot.ready_reach;
    return doc.dump(2) + "\n";
}

double l_optimal(double r_cover, double stand_off) {
    if (r_cover < stand_off) {
        throw DomainError("l_optimal: r_cover (" + detail::fixed6(r_cover) + ") is smaller than stand_off (" +
                          detail::fixed6(stand_off) + ")");
    }
    return 2.0 * std::sqrt(r_cover * r_cover - stand_off * stand_off);
}

double l_optimal(const RobotSpec &robot) { return l_optimal(robot.r_cover, robot.stand_off); }

int required_robot_count(double wall_len, double l_opt) {
    if (!(wall_len > 0.0) || !(l_opt > 0.0)) {
        throw DomainError("required_robot_count: lengths must be > 0");
    }
    int n = std::max(1, static_cast<int>(std::ceil(wall_len / l_opt)));
    while (n > 1 && wall_len <= (n - 1) * l_opt + kLengthSlack) {
        --n;
    }
    while (wall_len > n * l_opt + kLengthSlack) {
        ++n;
    }
    return n;
}

SegmentAssignment decompose_wall(const WallSpec &spec, int n, double l_opt) {
    if (n < 1) {
        throw DomainError("decompose_wall: robot count must be >= 1");
    }
    const double total = wall_length(spec);
    if (total > n * l_opt + kLengthSlack) {
        throw InfeasibleError("infeasible: L_wall=" + detail::fixed6(total) + " exceeds n*L_optimal=" +
                              std::to_string(n) + "*" + detail::fixed6(l_opt) + "=" + detail::fixed6(n * l_opt) +
                              " (coverage requires L_wall <= n*L_optimal)");
    }
    SegmentAssignment out;
    const double piece = total / n;
    for (int i = 0; i < n; ++i) {
        WallPiece p;
        p.robot_index = i;
        p.arc_start = (i == 0) ? 0.0 : out.pieces.back().arc_end;
        p.arc_end = (i == n - 1) ? total : (i + 1) * piece;
        out.pieces.push_back(p);
    }
    return out;
}

} // namespace brickplan
