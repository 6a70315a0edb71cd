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

// Command-line front end. Talks to the library only through the C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "brickplan/brickplan.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInfeasible = 2, kInternal = 3 };

int exit_code_for(bp_status status) {
    switch (status) {
    case BP_OK:
        return kOk;
    case BP_ERR_PARSE:
    case BP_ERR_VALIDATION:
    case BP_ERR_IO:
    case BP_ERR_INVALID_ARGUMENT:
        return kUsage;
    case BP_ERR_INFEASIBLE:
    case BP_ERR_UNSUPPORTED_GEOMETRY:
    case BP_ERR_DOMAIN:
    case BP_ERR_COVERAGE:
    case BP_ERR_EMPTY_REPORT:
        return kInfeasible;
    case BP_ERR_DEADLOCK:
    case BP_ERR_INTERNAL:
        return kInternal;
    }
    return kInternal;
}

struct Failure {
    int code;
};

void check(bp_status status, const char *what) {
    if (status != BP_OK) {
        std::cerr << "error: " << what << ": " << bp_status_name(status) << ": " << bp_last_error() << "\n";
        throw Failure{exit_code_for(status)};
    }
}

template <typename T, void (*Free)(T *)> struct Deleter {
    void operator()(T *p) const { Free(p); }
};

using Wall = std::unique_ptr<bp_wall, Deleter<bp_wall, bp_wall_free>>;
using Robot = std::unique_ptr<bp_robot, Deleter<bp_robot, bp_robot_free>>;
using Model = std::unique_ptr<bp_time_model, Deleter<bp_time_model, bp_time_model_free>>;
using Plan = std::unique_ptr<bp_plan, Deleter<bp_plan, bp_plan_free>>;
using Simulation = std::unique_ptr<bp_simulation, Deleter<bp_simulation, bp_simulation_free>>;
using Grid = std::unique_ptr<bp_grid, Deleter<bp_grid, bp_grid_free>>;
using Sweep = std::unique_ptr<bp_sweep, Deleter<bp_sweep, bp_sweep_free>>;

/// Takes ownership of a string returned by the library.
std::string take(char *raw) {
    std::string s = raw ? raw : "";
    bp_string_free(raw);
    return s;
}

struct RunConfig {
    std::string wall_path;
    std::string robot_path;
    std::string time_model_path;
    std::string grid_path;
    std::string out_dir = "out";
    std::string objective = "makespan";
    int robot_count = 0;
    double material_offset = 0.4;
    bool svg = false;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf) == "-0.000000" ? "0.000000" : buf;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content)) {
        std::cerr << "error: cannot write '" << path.string() << "'\n";
        throw Failure{kUsage};
    }
}

std::filesystem::path prepare_out_dir(const RunConfig &cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec || !std::filesystem::is_directory(cfg.out_dir)) {
        std::cerr << "error: cannot create output directory '" << cfg.out_dir << "'\n";
        throw Failure{kUsage};
    }
    return cfg.out_dir;
}

Wall load_wall(const RunConfig &cfg) {
    bp_wall *raw = nullptr;
    if (cfg.wall_path.empty()) {
        check(bp_wall_default(&raw), "default wall");
    } else {
        check(bp_wall_load(cfg.wall_path.c_str(), &raw), cfg.wall_path.c_str());
    }
    return Wall(raw);
}

Robot load_robot(const RunConfig &cfg) {
    bp_robot *raw = nullptr;
    if (cfg.robot_path.empty()) {
        check(bp_robot_default(&raw), "default robot");
    } else {
        check(bp_robot_load(cfg.robot_path.c_str(), &raw), cfg.robot_path.c_str());
    }
    return Robot(raw);
}

Model load_model(const RunConfig &cfg) {
    bp_time_model *raw = nullptr;
    if (cfg.time_model_path.empty()) {
        check(bp_time_model_default(&raw), "default time model");
    } else {
        check(bp_time_model_load(cfg.time_model_path.c_str(), &raw), cfg.time_model_path.c_str());
    }
    return Model(raw);
}

Plan make_plan(const RunConfig &cfg, const bp_wall *wall, const bp_robot *robot) {
    bp_plan_options options;
    bp_plan_options_init(&options);
    options.robot_count = cfg.robot_count;
    options.material_offset = cfg.material_offset;
    bp_plan *raw = nullptr;
    check(bp_plan_create(wall, robot, &options, &raw), "plan");
    return Plan(raw);
}

void print_plan_summary(const bp_plan *plan) {
    int n = 0;
    double l_opt = 0.0;
    check(bp_plan_robot_count(plan, &n), "robot count");
    check(bp_plan_l_optimal(plan, &l_opt), "L_optimal");
    std::cout << "n=" << n << "\n";
    std::cout << "L_optimal=" << fixed6(l_opt) << "\n";
    for (int i = 0; i < n; ++i) {
        double bx = 0, by = 0, dx = 0, dy = 0;
        check(bp_plan_base(plan, i, &bx, &by), "base");
        check(bp_plan_depot(plan, i, &dx, &dy), "depot");
        std::cout << "robot " << i << ": base=(" << fixed6(bx) << ", " << fixed6(by) << ") depot=(" << fixed6(dx)
                  << ", " << fixed6(dy) << ")\n";
    }
}

void cmd_plan(const RunConfig &cfg) {
    const auto out = prepare_out_dir(cfg);
    Wall wall = load_wall(cfg);
    Robot robot = load_robot(cfg);
    Plan plan = make_plan(cfg, wall.get(), robot.get());

    char *text = nullptr;
    check(bp_plan_placement_json(plan.get(), &text), "placement plan");
    write_file(out / "placement_plan.json", take(text));
    check(bp_plan_zones_csv(plan.get(), &text), "zones");
    write_file(out / "zones.csv", take(text));
    check(bp_wall_bricks_csv(wall.get(), &text), "bricks");
    write_file(out / "bricks.csv", take(text));
    if (cfg.svg) {
        check(bp_plan_zones_svg(plan.get(), &text), "zone overlay");
        write_file(out / "zones.svg", take(text));
    }
    print_plan_summary(plan.get());
}

void cmd_simulate(const RunConfig &cfg) {
    const auto out = prepare_out_dir(cfg);
    Wall wall = load_wall(cfg);
    Robot robot = load_robot(cfg);
    Model model = load_model(cfg);
    Plan plan = make_plan(cfg, wall.get(), robot.get());

    bp_simulation *raw = nullptr;
    check(bp_simulate(plan.get(), model.get(), &raw), "simulate");
    Simulation sim(raw);

    char *text = nullptr;
    check(bp_simulation_schedule_csv(sim.get(), &text), "schedule");
    write_file(out / "schedule.csv", take(text));
    check(bp_simulation_result_json(sim.get(), &text), "result");
    write_file(out / "sim_result.json", take(text));
    if (cfg.svg) {
        check(bp_plan_zones_svg(plan.get(), &text), "zone overlay");
        write_file(out / "zones.svg", take(text));
    }

    double makespan = 0.0;
    double total = 0.0;
    check(bp_simulation_makespan(sim.get(), &makespan), "makespan");
    check(bp_simulation_total_sum(sim.get(), &total), "total");
    print_plan_summary(plan.get());
    std::cout << "makespan_s=" << fixed6(makespan) << "\n";
    std::cout << "t_total_sum_s=" << fixed6(total) << "\n";
}

void cmd_sweep(const RunConfig &cfg) {
    const auto out = prepare_out_dir(cfg);
    bp_objective objective = BP_OBJECTIVE_MAKESPAN;
    if (cfg.objective == "sum") {
        objective = BP_OBJECTIVE_TOTAL_SUM;
    }

    bp_grid *graw = nullptr;
    if (cfg.grid_path.empty()) {
        check(bp_grid_default(&graw), "default grid");
    } else {
        check(bp_grid_load(cfg.grid_path.c_str(), &graw), cfg.grid_path.c_str());
    }
    Grid grid(graw);
    if (!cfg.wall_path.empty()) {
        Wall wall = load_wall(cfg);
        check(bp_grid_set_wall(grid.get(), wall.get()), "grid wall");
    }
    Robot robot = load_robot(cfg);
    Model model = load_model(cfg);

    bp_sweep *sraw = nullptr;
    check(bp_sweep_run(grid.get(), robot.get(), model.get(), &sraw), "sweep");
    Sweep sweep(sraw);

    char *text = nullptr;
    check(bp_sweep_csv(sweep.get(), &text), "sweep csv");
    write_file(out / "sweep.csv", take(text));
    for (bp_configuration c : {BP_READY_FRONT_01, BP_READY_FRONT_02, BP_READY_SIDE}) {
        check(bp_sweep_plot_svg(sweep.get(), c, objective, &text), "sweep plot");
        write_file(out / (std::string("sweep_") + bp_configuration_name(c) + ".svg"), take(text));
    }

    size_t rows = 0;
    size_t feasible = 0;
    check(bp_sweep_row_count(sweep.get(), &rows), "rows");
    check(bp_sweep_feasible_count(sweep.get(), &feasible), "rows");
    double offset = 0.0;
    double stand_off = 0.0;
    double value = 0.0;
    bp_configuration config = BP_READY_FRONT_01;
    check(bp_sweep_best(sweep.get(), objective, &offset, &stand_off, &config, &value), "best placement");
    std::cout << "rows=" << rows << " feasible=" << feasible << "\n";
    std::cout << "best material_offset=" << fixed6(offset) << " stand_off=" << fixed6(stand_off)
              << " configuration=" << bp_configuration_name(config) << " " << cfg.objective << "_s=" << fixed6(value)
              << "\n";
}

void add_common(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--wall", cfg.wall_path, "Wall document (JSON)")->check(CLI::ExistingFile);
    cmd->add_option("--robot", cfg.robot_path, "Robot parameter document (JSON)")->check(CLI::ExistingFile);
    cmd->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    cmd->add_flag("--svg", cfg.svg, "Emit zone/plot graphics");
}

void add_planning(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--n", cfg.robot_count, "Override the robot count")->check(CLI::PositiveNumber);
    cmd->add_option("--material-offset", cfg.material_offset, "Depot offset along the robot x axis [m]")
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"brickplan: multi-robot brick wall placement planner and simulator"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *plan = app.add_subcommand("plan", "Decompose the wall, place robots and depots, classify zones");
    add_common(plan, cfg);
    add_planning(plan, cfg);

    auto *simulate = app.add_subcommand("simulate", "Plan, schedule and simulate the assembly");
    add_common(simulate, cfg);
    add_planning(simulate, cfg);
    simulate->add_option("--time-model", cfg.time_model_path, "Time model document (JSON)")
        ->check(CLI::ExistingFile);

    auto *sweep = app.add_subcommand("sweep", "Grid search over material offset, stand-off and configuration");
    add_common(sweep, cfg);
    sweep->add_option("--time-model", cfg.time_model_path, "Time model document (JSON)")->check(CLI::ExistingFile);
    sweep->add_option("--grid", cfg.grid_path, "Scenario grid document (JSON)")->check(CLI::ExistingFile);
    sweep->add_option("--objective", cfg.objective, "Objective")
        ->check(CLI::IsMember({"makespan", "sum"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (plan->parsed()) {
            cmd_plan(cfg);
        } else if (simulate->parsed()) {
            cmd_simulate(cfg);
        } else if (sweep->parsed()) {
            cmd_sweep(cfg);
        }
    } catch (const Failure &f) {
        return f.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
