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

#include "wall_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "error.hpp"
#include "json_util.hpp"

namespace brickplan {

namespace {

constexpr double kTilingEps = 1e-9;

std::string bond_name(Bond bond) {
    switch (bond) {
    case Bond::Running:
        return "running";
    }
    return "running";
}

} // namespace

double WallSegment::turn_angle() const { return turn_angle_deg * std::numbers::pi / 180.0; }

void validate(const WallSpec &spec) {
    if (spec.segments.empty()) {
        throw ValidationError("wall must have at least one segment");
    }
    double min_len = spec.segments.front().length;
    for (std::size_t i = 0; i < spec.segments.size(); ++i) {
        const auto &seg = spec.segments[i];
        if (!(seg.length > 0.0) || !std::isfinite(seg.length)) {
            throw ValidationError("segments[" + std::to_string(i) + "].length must be > 0");
        }
        if (!std::isfinite(seg.turn_angle_deg)) {
            throw ValidationError("segments[" + std::to_string(i) + "].turn_angle_deg must be finite");
        }
        min_len = std::min(min_len, seg.length);
    }
    if (spec.segments.front().turn_angle_deg != 0.0) {
        throw ValidationError("segments[0].turn_angle_deg must be 0");
    }
    if (!(spec.height > 0.0)) {
        throw ValidationError("height must be > 0");
    }
    if (!(spec.brick.length > 0.0) || !(spec.brick.depth > 0.0) || !(spec.brick.height > 0.0)) {
        throw ValidationError("brick dimensions must be > 0");
    }
    if (spec.brick.length > min_len) {
        throw ValidationError("brick.length must not exceed the shortest segment length");
    }
}

WallSpec parse_wall_spec(std::string_view text) {
    using detail::json;
    const json doc = detail::parse_document(text, "wall document");
    if (!doc.is_object()) {
        throw ParseError("wall document: top level must be an object");
    }

    WallSpec spec;
    if (doc.contains("origin")) {
        const json &origin = doc["origin"];
        if (origin.is_array()) {
            const auto xy = detail::number_list(origin, "origin");
            if (xy.size() != 2) {
                throw ParseError("field 'origin': expected [x, y]");
            }
            spec.origin = {xy[0], xy[1]};
        } else {
            spec.origin = {detail::number_field(origin, "x", "origin"), detail::number_field(origin, "y", "origin")};
        }
    }

    const json &segments = detail::require(doc, "segments", "");
    if (!segments.is_array()) {
        throw ParseError("field 'segments': expected an array");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::string path = "segments[" + std::to_string(i) + "]";
        WallSegment seg;
        seg.length = detail::number_field(segments[i], "length", path);
        seg.turn_angle_deg = detail::number_field_or(segments[i], "turn_angle_deg", path, 0.0);
        spec.segments.push_back(seg);
    }

    spec.height = detail::number_field(doc, "height", "");
    if (doc.contains("brick")) {
        const json &brick = doc["brick"];
        spec.brick.length = detail::number_field(brick, "length", "brick");
        spec.brick.depth = detail::number_field(brick, "depth", "brick");
        spec.brick.height = detail::number_field(brick, "height", "brick");
    }

    const std::string bond = doc.contains("bond") ? detail::string_field(doc, "bond", "") : "running";
    if (bond != "running") {
        throw ParseError("field 'bond': unsupported pattern '" + bond + "'");
    }
    spec.bond = Bond::Running;

    validate(spec);
    return spec;
}

std::string serialize_wall_spec(const WallSpec &spec) {
    using detail::json;
    json doc;
    doc["origin"] = json::array({spec.origin.x, spec.origin.y});
    json segs = json::array();
    for (const auto &seg : spec.segments) {
        segs.push_back({{"length", seg.length}, {"turn_angle_deg", seg.turn_angle_deg}});
    }
    doc["segments"] = segs;
    doc["height"] = spec.height;
    doc["brick"] = {{"length", spec.brick.length}, {"depth", spec.brick.depth}, {"height", spec.brick.height}};
    doc["bond"] = bond_name(spec.bond);
    return doc.dump(2) + "\n";
}

WallSpec load_wall_spec(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open wall document '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_wall_spec(ss.str());
}

WallSpec default_wall() {
    WallSpec spec;
    spec.segments = {{4.44, 0.0}};
    spec.height = 0.30;
    return spec;
}

double wall_length(const WallSpec &spec) {
    double total = 0.0;
    for (const auto &seg : spec.segments) {
        total += seg.length;
    }
    return total;
}

std::vector<SegmentFrame> segment_frames(const WallSpec &spec) {
    std::vector<SegmentFrame> frames;
    frames.reserve(spec.segments.size());
    Vec2 cursor = spec.origin;
    double heading = 0.0;
    double arc = 0.0;
    for (const auto &seg : spec.segments) {
        heading -= seg.turn_angle();
        const Vec2 dir = heading_vector(heading);
        frames.push_back({cursor, dir, arc, seg.length});
        cursor = cursor + seg.length * dir;
        arc += seg.length;
    }
    return frames;
}

Vec2 point_at_arclength(const WallSpec &spec, double arclength) {
    const auto frames = segment_frames(spec);
    for (const auto &f : frames) {
        if (arclength <= f.arc_start + f.length || &f == &frames.back()) {
            const double local = std::clamp(arclength - f.arc_start, 0.0, f.length);
            return f.start + local * f.dir;
        }
    }
    return spec.origin;
}

int course_count(const WallSpec &spec) {
    const int n = static_cast<int>(std::floor(spec.height / spec.brick.height + kTilingEps));
    return std::max(1, n);
}

std::vector<BrickPlacement> generate_bricks(const WallSpec &spec) {
    const auto frames = segment_frames(spec);
    const int courses = course_count(spec);
    const double bl = spec.brick.length;

    std::vector<BrickPlacement> bricks;
    for (int course = 0; course < courses; ++course) {
        const double offset = (course % 2 == 1) ? 0.5 * bl : 0.0;
        const double z = (course + 0.5) * spec.brick.height;
        for (std::size_t si = 0; si < frames.size(); ++si) {
            const auto &f = frames[si];
            std::vector<std::pair<double, double>> pieces;
            double pos = 0.0;
            if (offset > 0.0) {
                pos = std::min(offset, f.length);
                pieces.emplace_back(0.0, pos);
            }
            const double first_full = pos;
            for (int k = 0;; ++k) {
                const double a = first_full + k * bl;
                const double b = a + bl;
                if (b > f.length + kTilingEps) {
                    pos = a;
                    break;
                }
                pieces.emplace_back(a, std::min(b, f.length));
            }
            if (f.length - pos > kTilingEps) {
                pieces.emplace_back(pos, f.length);
            }
            for (const auto &[a, b] : pieces) {
                const double mid = 0.5 * (a + b);
                const Vec2 p = f.start + mid * f.dir;
                BrickPlacement brick;
                brick.id = static_cast<int>(bricks.size());
                brick.target_center = {p.x, p.y, z};
                brick.course = course;
                brick.segment_index = static_cast<int>(si);
                brick.arc_start = f.arc_start + a;
                brick.arc_end = f.arc_start + b;
                bricks.push_back(brick);
            }
        }
    }
    return bricks;
}

PrecedenceGraph support_graph(std::span<const BrickPlacement> bricks) {
    PrecedenceGraph graph;
    int max_id = -1;
    int max_course = -1;
    for (const auto &b : bricks) {
        max_id = std::max(max_id, b.id);
        max_course = std::max(max_course, b.course);
    }
    graph.parents.resize(static_cast<std::size_t>(max_id + 1));

    std::vector<std::vector<const BrickPlacement *>> by_course(static_cast<std::size_t>(max_course + 1));
    for (const auto &b : bricks) {
        by_course[static_cast<std::size_t>(b.course)].push_back(&b);
    }
    for (std::size_t c = 1; c < by_course.size(); ++c) {
        for (const BrickPlacement *upper : by_course[c]) {
            for (const BrickPlacement *lower : by_course[c - 1]) {
                const double overlap =
                    std::min(upper->arc_end, lower->arc_end) - std::max(upper->arc_start, lower->arc_start);
                if (overlap > kTilingEps) {
                    graph.edges.emplace_back(lower->id, upper->id);
                }
            }
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    for (const auto &[from, to] : graph.edges) {
        graph.parents[static_cast<std::size_t>(to)].push_back(from);
    }
    return graph;
}

std::string bricks_csv(std::span<const BrickPlacement> bricks) {
    std::string out = "id,x,y,z,course,segment_index\n";
    for (const auto &b : bricks) {
        out += std::to_string(b.id) + "," + detail::fixed6(b.target_center.x) + "," +
               detail::fixed6(b.target_center.y) + "," + detail::fixed6(b.target_center.z) + "," +
               std::to_string(b.course) + "," + std::to_string(b.segment_index) + "\n";
    }
    return out;
}

} // namespace brickplan
