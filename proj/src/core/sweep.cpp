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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "error.hpp"
#include "json_util.hpp"
#include "pipeline.hpp"

namespace brickplan {

WallSpec sweep_target_line() {
    WallSpec spec;
    spec.segments = {{0.60, 0.0}};
    spec.height = 0.10;
    return spec;
}

ScenarioGrid parse_scenario_grid(std::string_view text) {
    using detail::json;
    const json doc = detail::parse_document(text, "grid document");
    if (!doc.is_object()) {
        throw ParseError("grid document: top level must be an object");
    }
    ScenarioGrid grid;
    if (doc.contains("material_offsets")) {
        grid.material_offsets = detail::number_list(doc["material_offsets"], "material_offsets");
    }
    if (doc.contains("ready_front01_extra_offsets")) {
        grid.ready_front01_extra_offsets =
            detail::number_list(doc["ready_front01_extra_offsets"], "ready_front01_extra_offsets");
    }
    if (doc.contains("stand_offs")) {
        grid.stand_offs = detail::number_list(doc["stand_offs"], "stand_offs");
    }
    if (doc.contains("configurations")) {
        const json &cs = doc["configurations"];
        if (!cs.is_array()) {
            throw ParseError("field 'configurations': expected an array");
        }
        grid.configurations.clear();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string path = "configurations[" + std::to_string(i) + "]";
            if (!cs[i].is_string()) {
                throw ParseError("field '" + path + "': expected a string");
            }
            auto c = configuration_from_name(cs[i].get<std::string>());
            if (!c) {
                throw ParseError("field '" + path + "': unknown configuration");
            }
            grid.configurations.push_back(*c);
        }
    }
    if (doc.contains("wall")) {
        grid.wall = parse_wall_spec(doc["wall"].dump());
    }
    return grid;
}

ScenarioGrid load_scenario_grid(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open grid document '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_grid(ss.str());
}

std::vector<Scenario> enumerate_scenarios(const ScenarioGrid &grid) {
    std::vector<Scenario> out;
    for (Configuration c : grid.configurations) {
        std::vector<double> offsets = grid.material_offsets;
        if (c == Configuration::ReadyFront01) {
            offsets.insert(offsets.end(), grid.ready_front01_extra_offsets.begin(),
                           grid.ready_front01_extra_offsets.end());
        }
        for (double offset : offsets) {
            for (double s : grid.stand_offs) {
                out.push_back({c, offset, s});
            }
        }
    }
    return out;
}

SweepRow run_scenario(const Scenario &scenario, const WallSpec &wall, const RobotSpec &robot, const TimeModel &model) {
    SweepRow row;
    row.scenario = scenario;
    if (!(scenario.stand_off < robot.r_workspace)) {
        row.reason = "stand_off " + detail::fixed6(scenario.stand_off) + " is not below r_workspace";
        return row;
    }
    if (scenario.material_offset < robot.r_min() || scenario.material_offset > robot.r_max()) {
        row.reason = "material offset " + detail::fixed6(scenario.material_offset) + " outside [" +
                     detail::fixed6(robot.r_min()) + ", " + detail::fixed6(robot.r_max()) + "]";
        return row;
    }
    try {
        RobotSpec r = robot;
        r.stand_off = scenario.stand_off;
        r.configuration = scenario.configuration;
        PipelineOptions options;
        options.material_offset = scenario.material_offset;
        const WallPlan plan = plan_wall(wall, r, options);
        const SimulationRun run = simulate_plan(plan, model);
        row.feasible = true;
        row.robots = plan.placement.robot_count();
        row.makespan = run.result.makespan;
        row.t_total_sum = run.result.t_total_sum;
        for (const auto &t : run.result.per_robot) {
            row.busy.push_back(t.busy);
        }
    } catch (const Error &e) {
        row.reason = e.what();
    }
    return row;
}

SweepReport sort_report(std::vector<SweepRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        return std::make_tuple(static_cast<int>(a.scenario.configuration), a.scenario.material_offset,
                               a.scenario.stand_off) < std::make_tuple(static_cast<int>(b.scenario.configuration),
                                                                       b.scenario.material_offset, b.scenario.stand_off);
    });
    return SweepReport{std::move(rows)};
}

SweepReport run_sweep(const ScenarioGrid &grid, const RobotSpec &robot, const TimeModel &model, unsigned threads) {
    validate(grid.wall);
    validate(model);
    const std::vector<Scenario> scenarios = enumerate_scenarios(grid);
    std::vector<SweepRow> rows(scenarios.size());

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, scenarios.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) {
            rows[i] = run_scenario(scenarios[i], grid.wall, robot, model);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return sort_report(std::move(rows));
}

double objective_value(const SweepRow &row, Objective objective) {
    return objective == Objective::Makespan ? row.makespan : row.t_total_sum;
}

BestPlacement best_placement(const SweepReport &report, Objective objective) {
    const SweepRow *best = nullptr;
    for (const auto &row : report.rows) {
        if (!row.feasible) {
            continue;
        }
        if (best == nullptr) {
            best = &row;
            continue;
        }
        const double v = objective_value(row, objective);
        const double b = objective_value(*best, objective);
        const double tol = 1e-9 * std::max(std::abs(v), std::abs(b));
        if (v < b - tol) {
            best = &row;
        } else if (std::abs(v - b) <= tol) {
            const auto &s = row.scenario;
            const auto &t = best->scenario;
            if (std::make_tuple(s.stand_off, s.material_offset, static_cast<int>(s.configuration)) <
                std::make_tuple(t.stand_off, t.material_offset, static_cast<int>(t.configuration))) {
                best = &row;
            }
        }
    }
    if (best == nullptr) {
        throw Error(ErrorCode::EmptyReport, "best_placement: report has no feasible rows");
    }
    return {best->scenario.material_offset, best->scenario.stand_off, best->scenario.configuration,
            objective_value(*best, objective)};
}

std::string sweep_csv(const SweepReport &report) {
    using detail::fixed6;
    std::size_t max_robots = 0;
    for (const auto &row : report.rows) {
        max_robots = std::max(max_robots, row.busy.size());
    }
    std::string out = "config,material_offset_m,stand_off_m,makespan_s,t_total_sum_s";
    for (std::size_t r = 0; r < max_robots; ++r) {
        out += ",robot" + std::to_string(r) + "_busy_s";
    }
    out += ",feasible,reason\n";
    for (const auto &row : report.rows) {
        out += configuration_name(row.scenario.configuration) + "," + fixed6(row.scenario.material_offset) + "," +
               fixed6(row.scenario.stand_off) + ",";
        out += row.feasible ? fixed6(row.makespan) + "," + fixed6(row.t_total_sum) : std::string(",");
        for (std::size_t r = 0; r < max_robots; ++r) {
            out += ",";
            if (r < row.busy.size()) {
                out += fixed6(row.busy[r]);
            }
        }
        std::string reason = row.reason;
        std::replace(reason.begin(), reason.end(), ',', ';');
        std::replace(reason.begin(), reason.end(), '"', '\'');
        out += std::string(",") + (row.feasible ? "1" : "0") + "," + reason + "\n";
    }
    return out;
}

std::string sweep_plot_svg(const SweepReport &report, Configuration configuration, Objective objective) {
    using detail::fixed6;
    std::map<double, std::vector<std::pair<double, double>>> series;
    double x_min = std::numeric_limits<double>::max();
    double x_max = std::numeric_limits<double>::lowest();
    double y_min = x_min;
    double y_max = x_max;
    for (const auto &row : report.rows) {
        if (row.scenario.configuration != configuration || !row.feasible) {
            continue;
        }
        const double v = objective_value(row, objective);
        series[row.scenario.material_offset].emplace_back(row.scenario.stand_off, v);
        x_min = std::min(x_min, row.scenario.stand_off);
        x_max = std::max(x_max, row.scenario.stand_off);
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
    }
    if (series.empty()) {
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max - x_min < 1e-12) {
        x_max = x_min + 1.0;
    }
    const double y_pad = std::max(1e-6, 0.05 * (y_max - y_min));
    y_min -= y_pad;
    y_max += y_pad;

    const double width = 640.0;
    const double height = 420.0;
    const double left = 70.0;
    const double right = 150.0;
    const double top = 40.0;
    const double bottom = 50.0;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * ph; };

    static const char *palette[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
    const std::string metric = objective == Objective::Makespan ? "makespan [s]" : "t_total_sum [s]";

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" font-family=\"sans-serif\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"white\"/>\n";
    out += "<text x=\"" + fixed6(left + pw / 2) + "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" +
           configuration_name(configuration) + ": " + metric + " vs stand-off</text>\n";
    out += "<line x1=\"" + fixed6(left) + "\" y1=\"" + fixed6(top + ph) + "\" x2=\"" + fixed6(left + pw) + "\" y2=\"" +
           fixed6(top + ph) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fixed6(left) + "\" y1=\"" + fixed6(top) + "\" x2=\"" + fixed6(left) + "\" y2=\"" +
           fixed6(top + ph) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_min + (y_max - y_min) * i / 5.0;
        out += "<text x=\"" + fixed6(px(xv)) + "\" y=\"" + fixed6(top + ph + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + fixed6(xv).substr(0, 4) + "</text>\n";
        out += "<text x=\"" + fixed6(left - 6) + "\" y=\"" + fixed6(py(yv) + 4) +
               "\" font-size=\"11\" text-anchor=\"end\">" + fixed6(yv).substr(0, fixed6(yv).size() - 4) +
               "</text>\n";
    }
    out += "<text x=\"" + fixed6(left + pw / 2) + "\" y=\"" + fixed6(height - 10) +
           "\" font-size=\"12\" text-anchor=\"middle\">stand-off y [m]</text>\n";
    out += "<text x=\"16\" y=\"" + fixed6(top + ph / 2) + "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           fixed6(top + ph / 2) + ")\">" + metric + "</text>\n";

    std::size_t idx = 0;
    for (const auto &[offset, points] : series) {
        const std::string color = palette[idx % (sizeof palette / sizeof palette[0])];
        std::string pts;
        for (const auto &[x, y] : points) {
            pts += (pts.empty() ? "" : " ") + fixed6(px(x)) + "," + fixed6(py(y));
        }
        out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        for (const auto &[x, y] : points) {
            out += "<circle cx=\"" + fixed6(px(x)) + "\" cy=\"" + fixed6(py(y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        const double ly = top + 10 + 18.0 * static_cast<double>(idx);
        out += "<line x1=\"" + fixed6(left + pw + 15) + "\" y1=\"" + fixed6(ly) + "\" x2=\"" + fixed6(left + pw + 35) +
               "\" y2=\"" + fixed6(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fixed6(left + pw + 40) + "\" y=\"" + fixed6(ly + 4) + "\" font-size=\"11\">x = " +
               fixed6(offset).substr(0, 4) + " m</text>\n";
        ++idx;
    }
    out += "</svg>\n";
    return out;
}

} // namespace brickplan
