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

#include <cmath>

namespace brickplan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec2 xy() const { return {x, y}; }
    friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Unit vector for a heading angle measured counter-clockwise from +x.
inline Vec2 heading_vector(double heading) { return {std::cos(heading), std::sin(heading)}; }

/// Left-hand normal of a unit direction.
inline Vec2 left_normal(Vec2 dir) { return {-dir.y, dir.x}; }

/// Distance from p to the infinite line through a with unit direction dir.
inline double line_distance(Vec2 p, Vec2 a, Vec2 dir) {
    Vec2 d = p - a;
    return std::abs(d.x * dir.y - d.y * dir.x);
}

} // namespace brickplan
