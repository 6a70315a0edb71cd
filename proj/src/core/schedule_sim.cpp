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

#include "schedule_sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "error.hpp"
#include "json_util.hpp"

namespace brickplan {

TimeModel TimeModel::scaled(double k) const {
    TimeModel out = *this;
    out.t_plan_base *= k;
    out.plan_proximity_penalty *= k;
    out.t_exec_base *= k;
    out.travel_rate *= k;
    return out;
}

void validate(const TimeModel &model) {
    const std::array<std::pair<double, const char *>, 5> scalars = {{
        {model.t_plan_base, "t_plan_base_s"},
        {model.plan_proximity_penalty, "plan_proximity_penalty_s"},
        {model.proximity_threshold, "proximity_threshold_m"},
        {model.t_exec_base, "t_exec_base_s"},
        {model.travel_rate, "travel_rate_s_per_m"},
    }};
    for (const auto &[v, name] : scalars) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ValidationError(std::string(name) + " must be >= 0");
        }
    }
    for (double f : model.config_factor) {
        if (!(f >= 0.0) || !std::isfinite(f)) {
            throw ValidationError("config_factor values must be >= 0");
        }
    }
    const double best = model.factor(Configuration::ReadyFront01);
    if (best > model.factor(Configuration::ReadyFront02) || best > model.factor(Configuration::ReadySide)) {
        throw ValidationError("config_factor.ReadyFront01 must not exceed the other configurations");
    }
}

TimeModel parse_time_model(std::string_view text) {
    using detail::json;
    const json doc = detail::parse_document(text, "time model document");
    if (!doc.is_object()) {
        throw ParseError("time model document: top level must be an object");
    }
    TimeModel m;
    m.t_plan_base = detail::number_field_or(doc, "t_plan_base_s", "", m.t_plan_base);
    m.plan_proximity_penalty = detail::number_field_or(doc, "plan_proximity_penalty_s", "", m.plan_proximity_penalty);
    m.proximity_threshold = detail::number_field_or(doc, "proximity_threshold_m", "", m.proximity_threshold);
    m.t_exec_base = detail::number_field_or(doc, "t_exec_base_s", "", m.t_exec_base);
    m.travel_rate = detail::number_field_or(doc, "travel_rate_s_per_m", "", m.travel_rate);
    if (doc.contains("config_factor")) {
        const json &cf = doc["config_factor"];
        for (Configuration c : kAllConfigurations) {
            m.config_factor[static_cast<std::size_t>(c)] =
                detail::number_field_or(cf, configuration_name(c), "config_factor", m.factor(c));
        }
    }
    validate(m);
    return m;
}

TimeModel load_time_model(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open time model document '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_time_model(ss.str());
}

std::string serialize_time_model(const TimeModel &model) {
    detail::json doc;
    doc["t_plan_base_s"] = model.t_plan_base;
    doc["plan_proximity_penalty_s"] = model.plan_proximity_penalty;
    doc["proximity_threshold_m"] = model.proximity_threshold;
    doc["t_exec_base_s"] = model.t_exec_base;
    doc["travel_rate_s_per_m"] = model.travel_rate;
    for (Configuration c : kAllConfigurations) {
        doc["config_factor"][configuration_name(c)] = model.factor(c);
    }
    return doc.dump(2) + "\n";
}

ActionTime eval_action_time(const TimeModel &model, double pick_distance, double place_distance,
                            double wall_clearance, Configuration config) {
    ActionTime t;
    double proximity = 0.0;
    if (model.proximity_threshold > 0.0) {
        proximity = std::max(0.0, (model.proximity_threshold - wall_clearance) / model.proximity_threshold);
    }
    t.planning = model.t_plan_base + model.plan_proximity_penalty * proximity;
    t.execution = model.factor(config) * (model.t_exec_base + model.travel_rate * (pick_distance + place_distance));
    return t;
}

ActionCost action_cost(const TimeModel &model, const PlacementPlan &plan, int robot, const BrickPlacement &brick) {
    const auto &base = plan.bases.at(static_cast<std::size_t>(robot));
    const auto &depot = plan.depots.at(static_cast<std::size_t>(robot));
    const Vec2 ready = ready_point(base, plan.robot);
    const double pick_distance = distance(ready, depot.position);
    const double place_distance = distance(ready, brick.target_center.xy());
    const Configuration config = plan.robot.configuration;

    ActionCost cost;
    cost.brick_id = brick.id;
    cost.time = eval_action_time(model, pick_distance, place_distance, base.clearance, config);
    cost.pick_duration =
        0.5 * cost.time.planning + model.factor(config) * (0.5 * model.t_exec_base + model.travel_rate * pick_distance);
    cost.place_duration = cost.time.total() - cost.pick_duration;
    return cost;
}

namespace {

/// Earliest start >= t at which [start, start + length) avoids every interval (touching is fine).
double fit_lock(const std::vector<LockInterval> &intervals, double t, double length) {
    double s = t;
    for (const auto &iv : intervals) {
        if (iv.end <= s) {
            continue;
        }
        if (s + length <= iv.start) {
            break;
        }
        s = iv.end;
    }
    return s;
}

} // namespace

Schedule build_schedule(const BrickAssignment &assignment, const ZoneMap &zones, const PrecedenceGraph &precedence,
                        const PlacementPlan &plan, std::span<const BrickPlacement> bricks, const TimeModel &model) {
    const int n = plan.robot_count();
    std::vector<const BrickPlacement *> by_id(zones.zones.size(), nullptr);
    std::vector<std::vector<const BrickPlacement *>> queues(static_cast<std::size_t>(n));
    for (const auto &b : bricks) {
        by_id.at(static_cast<std::size_t>(b.id)) = &b;
        const int owner = assignment.owner.at(static_cast<std::size_t>(b.id));
        if (owner < 0 || owner >= n) {
            throw CoverageError("brick " + std::to_string(b.id) + " has no owning robot");
        }
        queues[static_cast<std::size_t>(owner)].push_back(&b);
    }
    for (auto &q : queues) {
        std::stable_sort(q.begin(), q.end(), [](const BrickPlacement *a, const BrickPlacement *b) {
            return std::make_tuple(a->course, a->arclength(), a->id) < std::make_tuple(b->course, b->arclength(), b->id);
        });
    }

    Schedule schedule;
    schedule.robots.resize(static_cast<std::size_t>(n));
    std::vector<double> placed_end(zones.zones.size(), -1.0);
    std::vector<std::size_t> head(static_cast<std::size_t>(n), 0);
    std::vector<double> clock(static_cast<std::size_t>(n), 0.0);
    std::size_t remaining = bricks.size();

    auto parents_of = [&](int id) -> const std::vector<int> & {
        static const std::vector<int> none;
        return static_cast<std::size_t>(id) < precedence.parents.size() ? precedence.parents[static_cast<std::size_t>(id)]
                                                                          : none;
    };

    while (remaining > 0) {
        int best_robot = -1;
        double best_start = std::numeric_limits<double>::infinity();
        ActionCost best_cost;
        double best_parent_end = 0.0;

        for (int r = 0; r < n; ++r) {
            const auto ri = static_cast<std::size_t>(r);
            if (head[ri] >= queues[ri].size()) {
                continue;
            }
            const BrickPlacement &brick = *queues[ri][head[ri]];
            bool ready = true;
            double parent_end = 0.0;
            for (int p : parents_of(brick.id)) {
                const double end = placed_end.at(static_cast<std::size_t>(p));
                if (end < 0.0) {
                    ready = false;
                    break;
                }
                parent_end = std::max(parent_end, end);
            }
            if (!ready) {
                continue;
            }
            const ActionCost cost = action_cost(model, plan, r, brick);
            double start = std::max({clock[ri], parent_end - cost.pick_duration, 0.0});
            const std::string key = zone_key(zones.at(brick.id).robots);
            if (!key.empty()) {
                auto it = schedule.locks.find(key);
                if (it != schedule.locks.end()) {
                    // The lock spans pick start to place end, including any wait on a late support.
                    double s = start;
                    for (;;) {
                        const double place_start = std::max(s + cost.pick_duration, parent_end);
                        const double length = place_start + cost.place_duration - s;
                        const double fitted = fit_lock(it->second, s, length);
                        if (fitted == s) {
                            break;
                        }
                        s = fitted;
                    }
                    start = s;
                }
            }
            if (start < best_start) {
                best_start = start;
                best_robot = r;
                best_cost = cost;
                best_parent_end = parent_end;
            }
        }

        if (best_robot < 0) {
            throw DeadlockError("build_schedule: no robot can make progress with " + std::to_string(remaining) +
                                " bricks left");
        }

        const auto ri = static_cast<std::size_t>(best_robot);
        const BrickPlacement &brick = *queues[ri][head[ri]];
        ScheduledAction action;
        action.brick_id = brick.id;
        action.pick_start = best_start;
        action.pick_end = best_start + best_cost.pick_duration;
        action.place_start = std::max(action.pick_end, best_parent_end);
        action.place_end = action.place_start + best_cost.place_duration;
        action.zone_key = zone_key(zones.at(brick.id).robots);
        if (!action.zone_key.empty()) {
            auto &intervals = schedule.locks[action.zone_key];
            LockInterval lock{best_robot, brick.id, action.pick_start, action.place_end};
            auto pos = std::upper_bound(intervals.begin(), intervals.end(), lock,
                                        [](const LockInterval &a, const LockInterval &b) { return a.start < b.start; });
            intervals.insert(pos, lock);
        }
        placed_end[static_cast<std::size_t>(brick.id)] = action.place_end;
        clock[ri] = action.place_end;
        schedule.robots[ri].push_back(std::move(action));
        ++head[ri];
        --remaining;
    }
    return schedule;
}

std::vector<std::string> check_schedule(const Schedule &schedule, const PrecedenceGraph &precedence) {
    std::vector<std::string> problems;
    std::map<int, std::pair<double, double>> place_window;
    for (std::size_t r = 0; r < schedule.robots.size(); ++r) {
        double prev_end = 0.0;
        for (const auto &a : schedule.robots[r]) {
            if (a.pick_start < prev_end || a.pick_end < a.pick_start || a.place_start < a.pick_end ||
                a.place_end < a.place_start) {
                problems.push_back("robot " + std::to_string(r) + ": action on brick " + std::to_string(a.brick_id) +
                                   " overlaps or is out of order");
            }
            prev_end = a.place_end;
            place_window[a.brick_id] = {a.place_start, a.place_end};
        }
    }
    for (const auto &[key, intervals] : schedule.locks) {
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            for (std::size_t j = i + 1; j < intervals.size(); ++j) {
                const auto &a = intervals[i];
                const auto &b = intervals[j];
                if (a.start < b.end && b.start < a.end) {
                    problems.push_back("zone " + key + ": bricks " + std::to_string(a.brick_id) + " and " +
                                       std::to_string(b.brick_id) + " hold the lock simultaneously");
                }
            }
        }
    }
    for (const auto &[from, to] : precedence.edges) {
        auto pf = place_window.find(from);
        auto pt = place_window.find(to);
        if (pf == place_window.end() || pt == place_window.end()) {
            continue;
        }
        if (pt->second.first < pf->second.second) {
            problems.push_back("brick " + std::to_string(to) + " placed before support " + std::to_string(from));
        }
    }
    return problems;
}

SimResult simulate(const Schedule &schedule) {
    SimResult result;
    result.per_robot.resize(schedule.robots.size());
    for (std::size_t r = 0; r < schedule.robots.size(); ++r) {
        RobotTimes &t = result.per_robot[r];
        for (const auto &a : schedule.robots[r]) {
            t.busy += a.busy();
            t.completion = std::max(t.completion, a.place_end);
        }
        t.idle = t.completion - t.busy;
        result.makespan = std::max(result.makespan, t.completion);
        result.t_total_sum += t.busy;
    }
    return result;
}

Schedule single_robot_replay(const Schedule &schedule) {
    std::vector<ScheduledAction> all;
    for (const auto &actions : schedule.robots) {
        all.insert(all.end(), actions.begin(), actions.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const ScheduledAction &a, const ScheduledAction &b) {
        return std::tie(a.pick_start, a.brick_id) < std::tie(b.pick_start, b.brick_id);
    });
    Schedule out;
    out.robots.resize(1);
    double t = 0.0;
    for (const auto &a : all) {
        ScheduledAction s = a;
        s.pick_start = t;
        s.pick_end = t + (a.pick_end - a.pick_start);
        s.place_start = s.pick_end;
        s.place_end = s.place_start + (a.place_end - a.place_start);
        s.zone_key.clear();
        t = s.place_end;
        out.robots[0].push_back(s);
    }
    return out;
}

std::string schedule_csv(const Schedule &schedule) {
    using detail::fixed6;
    std::string out = "robot,brick_id,action,start_s,end_s,zone_key\n";
    for (std::size_t r = 0; r < schedule.robots.size(); ++r) {
        for (const auto &a : schedule.robots[r]) {
            const std::string key = a.zone_key.empty() ? "-" : a.zone_key;
            const std::string prefix = std::to_string(r) + "," + std::to_string(a.brick_id) + ",";
            out += prefix + "pick," + fixed6(a.pick_start) + "," + fixed6(a.pick_end) + "," + key + "\n";
            out += prefix + "place," + fixed6(a.place_start) + "," + fixed6(a.place_end) + "," + key + "\n";
        }
    }
    return out;
}

std::string sim_result_json(const SimResult &result) {
    using detail::fixed6;
    std::string out = "{\n";
    out += "  \"makespan_s\": " + fixed6(result.makespan) + ",\n";
    out += "  \"t_total_sum_s\": " + fixed6(result.t_total_sum) + ",\n";
    out += "  \"per_robot\": [";
    for (std::size_t r = 0; r < result.per_robot.size(); ++r) {
        const auto &t = result.per_robot[r];
        out += (r == 0 ? "\n" : ",\n");
        out += "    {\"robot\": " + std::to_string(r) + ", \"busy_s\": " + fixed6(t.busy) + ", \"idle_s\": " +
               fixed6(t.idle) + ", \"completion_s\": " + fixed6(t.completion) + "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

} // namespace brickplan
