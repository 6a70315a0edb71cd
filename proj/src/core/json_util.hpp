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
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"

namespace brickplan::detail {

using nlohmann::json;

/// Parses a document, reporting syntax errors with line and column.
inline json parse_document(std::string_view text, std::string_view what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string(what) + ": syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column));
    }
}

inline const json &require(const json &obj, const std::string &key, const std::string &path) {
    if (!obj.is_object()) {
        throw ParseError("field '" + path + "': expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("field '" + (path.empty() ? key : path + "." + key) + "': missing");
    }
    return *it;
}

inline double as_number(const json &value, const std::string &path) {
    if (!value.is_number()) {
        throw ParseError("field '" + path + "': expected a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError("field '" + path + "': expected a finite number");
    }
    return v;
}

inline double number_field(const json &obj, const std::string &key, const std::string &path) {
    return as_number(require(obj, key, path), path.empty() ? key : path + "." + key);
}

inline double number_field_or(const json &obj, const std::string &key, const std::string &path, double fallback) {
    if (!obj.is_object() || !obj.contains(key)) {
        return fallback;
    }
    return number_field(obj, key, path);
}

inline std::string string_field(const json &obj, const std::string &key, const std::string &path) {
    const json &v = require(obj, key, path);
    if (!v.is_string()) {
        throw ParseError("field '" + (path.empty() ? key : path + "." + key) + "': expected a string");
    }
    return v.get<std::string>();
}

inline std::vector<double> number_list(const json &value, const std::string &path) {
    if (!value.is_array()) {
        throw ParseError("field '" + path + "': expected an array");
    }
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(as_number(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

/// Fixed six-decimal rendering used by every text output; never prints "-0.000000".
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

} // namespace brickplan::detail
