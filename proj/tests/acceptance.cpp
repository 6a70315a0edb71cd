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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "sweep.hpp"

using namespace brickplan;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (detail.size() < 400) {
                detail += (detail.empty() ? "" : "; ") + what;
            }
        }
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const SweepReport &default_sweep() {
    static const SweepReport report = run_sweep(ScenarioGrid{}, RobotSpec{}, TimeModel{});
    return report;
}

Outcome l_optimal_value() {
    Outcome o;
    const double l = l_optimal(0.8, 0.3);
    o.expect(std::abs(l - 1.4832) <= 0.005, "L_optimal=" + num(l));
    o.detail = o.pass ? "L_optimal=" + num(l) : o.detail;
    return o;
}

Outcome placement_formulas() {
    Outcome o;
    const auto b = closed_form_bases({0.0, 0.0}, 1.48, 0.3, 0.0);
    o.expect(b.p1.x == 0.74 && b.p1.y == -0.30, "P1=(" + num(b.p1.x) + ", " + num(b.p1.y) + ")");
    o.expect(std::abs(b.p2.x - 2.22) <= 1e-12 && b.p2.y == 0.30, "P2=(" + num(b.p2.x) + ", " + num(b.p2.y) + ")");
    const double d = line_distance(b.p3, {2.96, 0.0}, {1.0, 0.0});
    o.expect(std::abs(d - 0.3) <= 1e-9, "P3 stand-off " + num(d));

    WallSpec w;
    w.segments = {{4.44, 0.0}};
    const auto bases = place_robots(w, decompose_wall(w, 3, 1.48), RobotSpec{});
    o.expect(std::abs(bases[0].position.x - 0.74) <= 1e-9 && std::abs(bases[0].position.y + 0.30) <= 1e-9,
             "generated P1 differs");
    o.expect(std::abs(bases[1].position.x - 2.22) <= 1e-9 && std::abs(bases[1].position.y - 0.30) <= 1e-9,
             "generated P2 differs");
    o.expect(std::abs(bases[2].clearance - 0.3) <= 1e-9, "generated P3 stand-off differs");
    if (o.pass) {
        o.detail = "P1=(" + num(b.p1.x) + ", " + num(b.p1.y) + ") P2=(" + num(b.p2.x) + ", " + num(b.p2.y) +
                   ") P3 stand-off=" + num(d);
    }
    return o;
}

Outcome scenario_count() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = run_sweep(ScenarioGrid{}, RobotSpec{}, TimeModel{});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(report.rows.size() == 78, "rows=" + std::to_string(report.rows.size()));
    o.expect(secs < 10.0, "took " + num(secs) + " s");
    if (o.pass) {
        o.detail = "rows=78 in " + num(secs) + " s";
    }
    return o;
}

Outcome qualitative_optima() {
    Outcome o;
    const auto &report = default_sweep();
    const auto best = best_placement(report, Objective::Makespan);
    o.expect(best.stand_off == 0.3, "best stand_off=" + num(best.stand_off));
    o.expect(best.material_offset == 0.4 || best.material_offset == 0.5,
             "best material_offset=" + num(best.material_offset));
    std::map<std::pair<double, double>, std::map<Configuration, double>> cells;
    for (const auto &row : report.rows) {
        o.expect(row.feasible, "infeasible row: " + row.reason);
        cells[{row.scenario.material_offset, row.scenario.stand_off}][row.scenario.configuration] = row.makespan;
    }
    for (const auto &[cell, times] : cells) {
        const double rf = times.at(Configuration::ReadyFront01);
        for (const auto &[c, t] : times) {
            o.expect(rf <= t, configuration_name(c) + " faster at offset " + num(cell.first) + " stand_off " +
                                  num(cell.second));
        }
    }
    if (o.pass) {
        o.detail = "best offset=" + num(best.material_offset) + " stand_off=" + num(best.stand_off) + " " +
                   configuration_name(best.configuration);
    }
    return o;
}

Outcome penalty_shape() {
    Outcome o;
    std::map<std::pair<Configuration, double>, std::map<double, double>> series;
    for (const auto &row : default_sweep().rows) {
        series[{row.scenario.configuration, row.scenario.material_offset}][row.scenario.stand_off] = row.makespan;
    }
    for (const auto &[key, pts] : series) {
        const std::string where = configuration_name(key.first) + " offset " + num(key.second);
        o.expect(pts.at(0.2) > pts.at(0.3), where + ": 0.2 not slower than 0.3");
        double prev = pts.at(0.3);
        for (double s : {0.4, 0.5, 0.6, 0.7}) {
            o.expect(pts.at(s) >= prev, where + ": decreases at " + num(s));
            prev = pts.at(s);
        }
    }
    if (o.pass) {
        o.detail = std::to_string(series.size()) + " series checked";
    }
    return o;
}

Outcome zone_oracle(unsigned seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::size_t bricks = 0;
    for (int i = 0; i < 100; ++i) {
        const auto sc = oracle::random_scenario(rng);
        const auto plan = plan_wall(sc.wall, sc.robot, sc.options);
        for (const auto &b : plan.bricks) {
            ++bricks;
            const auto expect = oracle::reachers(plan.placement.bases, b, sc.robot.r_workspace);
            const auto &z = plan.zones.at(b.id);
            const ZoneClass cls = expect.empty()       ? ZoneClass::Unreachable
                                  : expect.size() == 1 ? ZoneClass::Exclusive
                                                       : ZoneClass::Shared;
            o.expect(z.robots == expect && z.zone == cls,
                     "scenario " + std::to_string(i) + " brick " + std::to_string(b.id));
        }
    }
    if (o.pass) {
        o.detail = std::to_string(bricks) + " bricks agree";
    }
    return o;
}

Outcome safety_suite(unsigned seed) {
    Outcome o;
    std::mt19937_64 rng(seed + 1);
    const TimeModel model;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto sc = oracle::random_scenario(rng);
        const auto plan = plan_wall(sc.wall, sc.robot, sc.options);
        const auto run = simulate_plan(plan, model);
        const std::string tag = "scenario " + std::to_string(i);
        o.expect(oracle::mutual_exclusion_violations(run.schedule, plan.zones).empty(), tag + ": zone overlap");
        o.expect(oracle::precedence_violations(run.schedule, plan.precedence).empty(), tag + ": support order");
        const double gap = std::abs(run.result.t_total_sum - oracle::contention_free_total(plan, model));
        worst = std::max(worst, gap);
        o.expect(gap <= 1e-9, tag + ": work conservation off by " + std::to_string(gap));
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max work gap %.3g s", worst);
        o.detail = buf;
    }
    return o;
}

Outcome speedup_bounds() {
    Outcome o;
    const auto plan = plan_wall(default_wall(), RobotSpec{});
    const auto run = simulate_plan(plan, TimeModel{});
    const double single = simulate(single_robot_replay(run.schedule)).makespan;
    const double makespan = run.result.makespan;
    const double lower = run.result.t_total_sum / 3.0;
    o.expect(plan.placement.robot_count() == 3, "n=" + std::to_string(plan.placement.robot_count()));
    o.expect(lower <= makespan, "makespan below t_total_sum/3");
    o.expect(makespan <= single, "makespan above single-robot makespan");
    o.expect(single / makespan >= 1.5, "speedup " + num(single / makespan));
    if (o.pass) {
        o.detail = "makespan=" + num(makespan) + " single=" + num(single) + " speedup=" + num(single / makespan);
    }
    return o;
}

Outcome determinism(const std::string &cli_path) {
    Outcome o;
    cli::TempDir dir("acceptance");
    std::vector<std::string> csvs;
    for (const char *sub : {"first", "second"}) {
        const auto r = cli::run(cli_path, "sweep --out " + cli::quote(dir / sub));
        o.expect(r.exit_code == 0, std::string("sweep run ") + sub + " exited " + std::to_string(r.exit_code));
        csvs.push_back(cli::slurp(dir.path() / sub / "sweep.csv"));
    }
    o.expect(!csvs[0].empty(), "empty sweep.csv");
    o.expect(csvs[0] == csvs[1], "sweep.csv differs between runs");
    if (o.pass) {
        o.detail = std::to_string(csvs[0].size()) + " identical bytes";
    }
    return o;
}

Outcome scale_invariance() {
    Outcome o;
    const auto scaled = run_sweep(ScenarioGrid{}, RobotSpec{}, TimeModel{}.scaled(3.7));
    for (Objective obj : {Objective::Makespan, Objective::TotalSum}) {
        const auto a = best_placement(default_sweep(), obj);
        const auto b = best_placement(scaled, obj);
        o.expect(a.material_offset == b.material_offset && a.stand_off == b.stand_off &&
                     a.configuration == b.configuration,
                 std::string(obj == Objective::Makespan ? "makespan" : "sum") + " optimum moved");
    }
    if (o.pass) {
        o.detail = "optimum unchanged at k=3.7";
    }
    return o;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"brickplan acceptance suite"};
    unsigned seed = 20260101;
    std::string cli_path = BRICKPLAN_CLI_PATH;
    app.add_option("--seed", seed, "Seed for the randomized criteria")->capture_default_str();
    app.add_option("--cli", cli_path, "Command-line binary used by the determinism check")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"L_optimal reproduction", l_optimal_value},
        {"placement formulas", placement_formulas},
        {"scenario count", scenario_count},
        {"qualitative optima", qualitative_optima},
        {"penalty shape", penalty_shape},
        {"zone oracle equivalence", [seed] { return zone_oracle(seed); }},
        {"safety invariants", [seed] { return safety_suite(seed); }},
        {"speedup bounds", speedup_bounds},
        {"determinism", [&cli_path] { return determinism(cli_path); }},
        {"argmin scale invariance", scale_invariance},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed (seed %u)\n", criteria.size() - static_cast<std::size_t>(failed),
                criteria.size(), seed);
    return failed == 0 ? 0 : 1;
}
