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

#include "zoning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "json_util.hpp"

namespace brickplan {

ZoneMap classify_zones(std::span<const BasePose> bases, std::span<const BrickPlacement> bricks,
                       const RobotSpec &robot) {
    ZoneMap map;
    int max_id = -1;
    for (const auto &b : bricks) {
        max_id = std::max(max_id, b.id);
    }
    map.zones.resize(static_cast<std::size_t>(max_id + 1));
    for (const auto &brick : bricks) {
        BrickZone zone;
        for (const auto &base : bases) {
            if (is_reachable(base, brick.target_center, robot)) {
                zone.robots.push_back(base.robot_index);
            }
        }
        std::sort(zone.robots.begin(), zone.robots.end());
        if (zone.robots.empty()) {
            zone.zone = ZoneClass::Unreachable;
        } else if (zone.robots.size() == 1) {
            zone.zone = ZoneClass::Exclusive;
        } else {
            zone.zone = ZoneClass::Shared;
        }
        map.zones[static_cast<std::size_t>(brick.id)] = std::move(zone);
    }
    return map;
}

BrickAssignment assign_bricks(const ZoneMap &zones, const SegmentAssignment &assignment,
                              std::span<const BrickPlacement> bricks) {
    std::vector<int> unreachable;
    for (const auto &b : bricks) {
        if (zones.at(b.id).zone == ZoneClass::Unreachable) {
            unreachable.push_back(b.id);
        }
    }
    if (!unreachable.empty()) {
        std::string ids;
        for (std::size_t i = 0; i < unreachable.size(); ++i) {
            ids += (i ? "," : "") + std::to_string(unreachable[i]);
        }
        throw CoverageError("unreachable bricks: " + ids);
    }

    BrickAssignment out;
    out.owner.assign(zones.zones.size(), -1);
    for (const auto &b : bricks) {
        const double a = b.arclength();
        int owner = assignment.pieces.back().robot_index;
        for (const auto &p : assignment.pieces) {
            if (a <= p.arc_end + 1e-12) {
                owner = p.robot_index;
                break;
            }
        }
        const auto &reachers = zones.at(b.id).robots;
        if (!std::binary_search(reachers.begin(), reachers.end(), owner)) {
            throw CoverageError("brick " + std::to_string(b.id) + " lies in piece " + std::to_string(owner) +
                                " but that robot cannot reach it");
        }
        out.owner[static_cast<std::size_t>(b.id)] = owner;
    }
    return out;
}

std::string zone_key(const std::vector<int> &robots) {
    if (robots.size() < 2) {
        return {};
    }
    std::string key;
    for (std::size_t i = 0; i < robots.size(); ++i) {
        key += (i ? ";" : "") + std::to_string(robots[i]);
    }
    return key;
}

std::string zone_class_name(ZoneClass zone) {
    switch (zone) {
    case ZoneClass::Exclusive:
        return "exclusive";
    case ZoneClass::Shared:
        return "shared";
    case ZoneClass::Unreachable:
        return "unreachable";
    }
    return "unreachable";
}

std::string zones_csv(const ZoneMap &zones) {
    std::string out = "brick_id,zone_class,robot_set\n";
    for (std::size_t id = 0; id < zones.zones.size(); ++id) {
        const auto &z = zones.zones[id];
        std::string set;
        for (std::size_t i = 0; i < z.robots.size(); ++i) {
            set += (i ? ";" : "") + std::to_string(z.robots[i]);
        }
        out += std::to_string(id) + "," + zone_class_name(z.zone) + "," + set + "\n";
    }
    return out;
}

std::string zones_svg(const PlacementPlan &plan, std::span<const BrickPlacement> bricks, const ZoneMap &zones) {
    using detail::fixed6;
    double min_x = std::numeric_limits<double>::max();
    double min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = max_x;
    auto grow = [&](double x, double y, double r) {
        min_x = std::min(min_x, x - r);
        min_y = std::min(min_y, y - r);
        max_x = std::max(max_x, x + r);
        max_y = std::max(max_y, y + r);
    };
    for (const auto &b : bricks) {
        grow(b.target_center.x, b.target_center.y, 0.1);
    }
    for (const auto &base : plan.bases) {
        grow(base.position.x, base.position.y, plan.robot.r_workspace);
    }
    const double scale = 200.0; // px per metre
    const double pad = 20.0;
    const double width = (max_x - min_x) * scale + 2 * pad;
    const double height = (max_y - min_y) * scale + 2 * pad;
    // SVG y grows downward; flip so +y is up.
    auto px = [&](double x) { return fixed6((x - min_x) * scale + pad); };
    auto py = [&](double y) { return fixed6((max_y - y) * scale + pad); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(width) + "\" height=\"" + fixed6(height) +
           "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto &base : plan.bases) {
        out += "<circle cx=\"" + px(base.position.x) + "\" cy=\"" + py(base.position.y) + "\" r=\"" +
               fixed6(plan.robot.r_workspace * scale) + "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
        out += "<circle cx=\"" + px(base.position.x) + "\" cy=\"" + py(base.position.y) +
               "\" r=\"5\" fill=\"black\"/>\n";
        out += "<text x=\"" + px(base.position.x) + "\" y=\"" + py(base.position.y) +
               "\" dy=\"-8\" font-size=\"12\" text-anchor=\"middle\">R" + std::to_string(base.robot_index) +
               "</text>\n";
    }
    for (const auto &depot : plan.depots) {
        out += "<rect x=\"" + px(depot.position.x) + "\" y=\"" + py(depot.position.y) +
               "\" width=\"6\" height=\"6\" transform=\"translate(-3,-3)\" fill=\"#8b4513\"/>\n";
    }
    // Only the bottom course is drawn; upper courses share its plan view.
    for (const auto &b : bricks) {
        if (b.course != 0) {
            continue;
        }
        const auto &z = zones.at(b.id);
        std::string color = "#bbbbbb";
        if (z.zone == ZoneClass::Exclusive) {
            color = "#3b6fd8";
        } else if (z.zone == ZoneClass::Shared) {
            color = z.robots.size() >= 3 ? "#d83b3b" : "#e8c53a";
        }
        out += "<circle cx=\"" + px(b.target_center.x) + "\" cy=\"" + py(b.target_center.y) +
               "\" r=\"4\" fill=\"" + color + "\"><title>brick " + std::to_string(b.id) + " " +
               zone_class_name(z.zone) + "</title></circle>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace brickplan
