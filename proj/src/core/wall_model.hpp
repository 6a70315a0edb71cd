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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace brickplan {

enum class Bond { Running };

struct WallSegment {
    double length = 0.0;
    /// Deviation from the previous segment's heading, degrees; positive turns clockwise (toward -y).
    double turn_angle_deg = 0.0;

    double turn_angle() const;
    friend bool operator==(const WallSegment &, const WallSegment &) = default;
};

struct BrickDims {
    double length = 0.20;
    double depth = 0.10;
    double height = 0.05;
    friend bool operator==(const BrickDims &, const BrickDims &) = default;
};

/// Polyline wall. World frame: x along the first segment, y horizontal, z up.
struct WallSpec {
    Vec2 origin;
    std::vector<WallSegment> segments;
    double height = 0.0;
    BrickDims brick;
    Bond bond = Bond::Running;

    friend bool operator==(const WallSpec &, const WallSpec &) = default;
};

/// Throws ValidationError naming the first violated invariant.
void validate(const WallSpec &spec);

WallSpec parse_wall_spec(std::string_view text);
std::string serialize_wall_spec(const WallSpec &spec);
WallSpec load_wall_spec(const std::filesystem::path &path);

/// 4.44 m straight wall, 0.30 m high, default brick.
WallSpec default_wall();

double wall_length(const WallSpec &spec);

/// Start point, unit direction and starting arclength of one straight segment.
struct SegmentFrame {
    Vec2 start;
    Vec2 dir;
    double arc_start = 0.0;
    double length = 0.0;
};

std::vector<SegmentFrame> segment_frames(const WallSpec &spec);

/// Point on the centerline at the given arclength (clamped to the wall).
Vec2 point_at_arclength(const WallSpec &spec, double arclength);

struct BrickPlacement {
    int id = 0;
    Vec3 target_center;
    int course = 0;
    int segment_index = 0;
    /// Plan-view extent along the wall polyline.
    double arc_start = 0.0;
    double arc_end = 0.0;

    double arclength() const { return 0.5 * (arc_start + arc_end); }
    double length() const { return arc_end - arc_start; }
    friend bool operator==(const BrickPlacement &, const BrickPlacement &) = default;
};

int course_count(const WallSpec &spec);

/// Running-bond tiling, course by course; ids are assigned in (course, segment, along) order.
std::vector<BrickPlacement> generate_bricks(const WallSpec &spec);

struct PrecedenceGraph {
    /// (supporting id, supported id), sorted.
    std::vector<std::pair<int, int>> edges;
    /// parents[id] = supporting brick ids.
    std::vector<std::vector<int>> parents;
};

PrecedenceGraph support_graph(std::span<const BrickPlacement> bricks);

/// id,x,y,z,course,segment_index with a header row.
std::string bricks_csv(std::span<const BrickPlacement> bricks);

} // namespace brickplan
