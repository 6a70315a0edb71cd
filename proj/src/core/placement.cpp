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

#include "placement.hpp"

#include <cmath>

#include "error.hpp"
#include "json_util.hpp"

namespace brickplan {

namespace {

constexpr double kArcEps = 1e-9;

const SegmentFrame &frame_at(const std::vector<SegmentFrame> &frames, double arclength) {
    for (const auto &f : frames) {
        if (arclength < f.arc_start + f.length) {
            return f;
        }
    }
    return frames.back();
}

} // namespace

ClosedFormBases closed_form_bases(Vec2 origin, double piece_length, double stand_off, double theta) {
    const double x0 = origin.x;
    const double y0 = origin.y;
    const double l = piece_length;
    ClosedFormBases out;
    out.p1 = {x0 + 0.5 * l, y0 - stand_off};
    out.p2 = {x0 + 1.5 * l, y0 + stand_off};
    out.p3 = {x0 + (2.0 + std::cos(theta) / 2.0) * l + stand_off * std::sin(theta),
              y0 - (std::sin(theta) / 2.0) * l + stand_off * std::cos(theta)};
    return out;
}

std::vector<BasePose> place_robots(const WallSpec &spec, const SegmentAssignment &assignment,
                                   const RobotSpec &robot) {
    const int n = assignment.robot_count();
    if (n < 1) {
        throw DomainError("place_robots: assignment has no pieces");
    }
    const auto frames = segment_frames(spec);
    const double piece = assignment.piece_length();

    int turns = 0;
    for (std::size_t i = 1; i < frames.size(); ++i) {
        if (spec.segments[i].turn_angle_deg == 0.0) {
            continue;
        }
        ++turns;
        const double at = frames[i].arc_start;
        if (n > 3) {
            throw UnsupportedGeometryError("place_robots: walls with turns are supported for at most 3 robots");
        }
        if (at < 2.0 * piece - kArcEps) {
            throw UnsupportedGeometryError("place_robots: turn at arclength " + detail::fixed6(at) +
                                           " lies inside the first two pieces");
        }
        for (const auto &p : assignment.pieces) {
            if (at > p.arc_start + kArcEps && at < p.arc_end - kArcEps) {
                throw UnsupportedGeometryError("place_robots: turn at arclength " + detail::fixed6(at) +
                                               " lies inside piece " + std::to_string(p.robot_index));
            }
        }
    }
    if (turns > 1) {
        throw UnsupportedGeometryError("place_robots: at most one turn is supported");
    }

    std::vector<BasePose> bases;
    bases.reserve(static_cast<std::size_t>(n));
    for (const auto &p : assignment.pieces) {
        const int k = p.robot_index + 1;
        double sign = 0.0;
        if (n <= 3) {
            sign = (k == 1) ? -1.0 : 1.0;
        } else {
            sign = (k % 2 == 0) ? 1.0 : -1.0;
        }
        const double mid = 0.5 * (p.arc_start + p.arc_end);
        const SegmentFrame &f = frame_at(frames, mid);
        const Vec2 on_wall = f.start + (mid - f.arc_start) * f.dir;
        BasePose pose;
        pose.robot_index = p.robot_index;
        pose.position = on_wall + (sign * robot.stand_off) * left_normal(f.dir);
        pose.side = sign < 0.0 ? Side::NegativeY : Side::PositiveY;
        pose.clearance = line_distance(pose.position, f.start, f.dir);
        bases.push_back(pose);
    }
    return bases;
}

MaterialDepot place_material(const BasePose &base, double offset, const RobotSpec &robot) {
    if (!(offset >= robot.r_min()) || !(offset <= robot.r_max())) {
        throw DomainError("place_material: offset " + detail::fixed6(offset) + " outside reach annulus [" +
                          detail::fixed6(robot.r_min()) + ", " + detail::fixed6(robot.r_max()) + "]");
    }
    MaterialDepot depot;
    depot.robot_index = base.robot_index;
    depot.position = base.position + offset * Vec2{1.0, 0.0};
    depot.offset_from_base = offset;
    return depot;
}

bool is_reachable(Vec2 base, const Vec3 &point, const RobotSpec &robot) {
    return distance(base, point.xy()) <= robot.r_workspace;
}

Vec2 ready_point(const BasePose &base, const RobotSpec &robot) {
    return base.position + robot.ready_reach * Vec2{1.0, 0.0};
}

std::string placement_plan_json(const PlacementPlan &plan) {
    using detail::fixed6;
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(plan.robot_count()) + ",\n";
    out += "  \"l_optimal_m\": " + fixed6(plan.l_optimal) + ",\n";
    out += "  \"piece_length_m\": " + fixed6(plan.assignment.piece_length()) + ",\n";
    out += "  \"stand_off_m\": " + fixed6(plan.robot.stand_off) + ",\n";
    out += "  \"robots\": [";
    for (std::size_t i = 0; i < plan.bases.size(); ++i) {
        const auto &b = plan.bases[i];
        const auto &d = plan.depots[i];
        const auto &p = plan.assignment.pieces[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\"index\": " + std::to_string(b.robot_index) + ", \"base_x\": " + fixed6(b.position.x) +
               ", \"base_y\": " + fixed6(b.position.y) + ", \"depot_x\": " + fixed6(d.position.x) +
               ", \"depot_y\": " + fixed6(d.position.y) + ", \"configuration\": \"" +
               configuration_name(plan.robot.configuration) + "\", \"piece_start_m\": " + fixed6(p.arc_start) +
               ", \"piece_end_m\": " + fixed6(p.arc_end) + "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

} // namespace brickplan
