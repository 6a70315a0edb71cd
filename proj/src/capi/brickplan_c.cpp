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

#include "brickplan/brickplan.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "error.hpp"
#include "pipeline.hpp"
#include "sweep.hpp"

struct bp_wall {
    brickplan::WallSpec spec;
};

struct bp_robot {
    brickplan::RobotSpec spec;
};

struct bp_time_model {
    brickplan::TimeModel model;
};

struct bp_plan {
    brickplan::WallPlan plan;
};

struct bp_simulation {
    brickplan::SimulationRun run;
    double single_robot_makespan = 0.0;
};

struct bp_grid {
    brickplan::ScenarioGrid grid;
};

struct bp_sweep {
    brickplan::SweepReport report;
};

namespace {

thread_local std::string g_last_error;

bp_status fail(bp_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <typename Fn> bp_status guard(Fn &&fn) {
    try {
        g_last_error.clear();
        fn();
        return BP_OK;
    } catch (const brickplan::Error &e) {
        return fail(static_cast<bp_status>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(BP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(BP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BP_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *ptr, const char *name) {
    if (ptr == nullptr) {
        throw brickplan::Error(brickplan::ErrorCode::InvalidArgument, std::string(name) + " must not be null");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

brickplan::Configuration to_cpp(bp_configuration c) {
    switch (c) {
    case BP_READY_FRONT_01:
        return brickplan::Configuration::ReadyFront01;
    case BP_READY_FRONT_02:
        return brickplan::Configuration::ReadyFront02;
    case BP_READY_SIDE:
        return brickplan::Configuration::ReadySide;
    }
    throw brickplan::Error(brickplan::ErrorCode::InvalidArgument, "unknown configuration");
}

brickplan::Objective to_cpp(bp_objective o) {
    switch (o) {
    case BP_OBJECTIVE_MAKESPAN:
        return brickplan::Objective::Makespan;
    case BP_OBJECTIVE_TOTAL_SUM:
        return brickplan::Objective::TotalSum;
    }
    throw brickplan::Error(brickplan::ErrorCode::InvalidArgument, "unknown objective");
}

template <typename Handle, typename Make> bp_status create(Handle **out, Make &&make) {
    return guard([&] {
        require(out, "out");
        *out = nullptr;
        *out = new Handle{make()};
    });
}

template <typename Handle> void check_index(const Handle &items, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= items.size()) {
        throw brickplan::Error(brickplan::ErrorCode::InvalidArgument,
                               "robot index " + std::to_string(index) + " out of range");
    }
}

} // namespace

extern "C" {

const char *bp_version(void) { return "0.1.0"; }

const char *bp_last_error(void) { return g_last_error.c_str(); }

const char *bp_status_name(bp_status status) {
    switch (status) {
    case BP_OK:
        return "ok";
    case BP_ERR_PARSE:
        return "parse error";
    case BP_ERR_VALIDATION:
        return "validation error";
    case BP_ERR_INFEASIBLE:
        return "infeasible";
    case BP_ERR_UNSUPPORTED_GEOMETRY:
        return "unsupported geometry";
    case BP_ERR_DOMAIN:
        return "domain error";
    case BP_ERR_COVERAGE:
        return "coverage error";
    case BP_ERR_DEADLOCK:
        return "deadlock";
    case BP_ERR_IO:
        return "i/o error";
    case BP_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case BP_ERR_EMPTY_REPORT:
        return "empty report";
    case BP_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *bp_configuration_name(bp_configuration config) {
    switch (config) {
    case BP_READY_FRONT_01:
        return "ReadyFront01";
    case BP_READY_FRONT_02:
        return "ReadyFront02";
    case BP_READY_SIDE:
        return "ReadySide";
    }
    return "unknown";
}

void bp_string_free(char *str) { std::free(str); }

// --- wall -------------------------------------------------------------------

bp_status bp_wall_default(bp_wall **out) {
    return create(out, [] { return brickplan::default_wall(); });
}

bp_status bp_wall_parse(const char *text, bp_wall **out) {
    return create(out, [&] {
        require(text, "text");
        return brickplan::parse_wall_spec(text);
    });
}

bp_status bp_wall_load(const char *path, bp_wall **out) {
    return create(out, [&] {
        require(path, "path");
        return brickplan::load_wall_spec(path);
    });
}

void bp_wall_free(bp_wall *wall) { delete wall; }

bp_status bp_wall_length(const bp_wall *wall, double *out) {
    return guard([&] {
        require(wall, "wall");
        require(out, "out");
        *out = brickplan::wall_length(wall->spec);
    });
}

bp_status bp_wall_brick_count(const bp_wall *wall, size_t *out) {
    return guard([&] {
        require(wall, "wall");
        require(out, "out");
        *out = brickplan::generate_bricks(wall->spec).size();
    });
}

bp_status bp_wall_serialize(const bp_wall *wall, char **out) {
    return guard([&] {
        require(wall, "wall");
        require(out, "out");
        *out = dup_string(brickplan::serialize_wall_spec(wall->spec));
    });
}

bp_status bp_wall_bricks_csv(const bp_wall *wall, char **out) {
    return guard([&] {
        require(wall, "wall");
        require(out, "out");
        *out = dup_string(brickplan::bricks_csv(brickplan::generate_bricks(wall->spec)));
    });
}

// --- robot ------------------------------------------------------------------

bp_status bp_robot_default(bp_robot **out) {
    return create(out, [] { return brickplan::RobotSpec{}; });
}

bp_status bp_robot_parse(const char *text, bp_robot **out) {
    return create(out, [&] {
        require(text, "text");
        return brickplan::parse_robot_spec(text);
    });
}

bp_status bp_robot_load(const char *path, bp_robot **out) {
    return create(out, [&] {
        require(path, "path");
        return brickplan::load_robot_spec(path);
    });
}

void bp_robot_free(bp_robot *robot) { delete robot; }

bp_status bp_robot_l_optimal(const bp_robot *robot, double *out) {
    return guard([&] {
        require(robot, "robot");
        require(out, "out");
        *out = brickplan::l_optimal(robot->spec);
    });
}

bp_status bp_l_optimal(double r_cover, double stand_off, double *out) {
    return guard([&] {
        require(out, "out");
        *out = brickplan::l_optimal(r_cover, stand_off);
    });
}

bp_status bp_required_robot_count(double wall_length, double l_optimal, int *out) {
    return guard([&] {
        require(out, "out");
        *out = brickplan::required_robot_count(wall_length, l_optimal);
    });
}

// --- time model -------------------------------------------------------------

bp_status bp_time_model_default(bp_time_model **out) {
    return create(out, [] { return brickplan::TimeModel{}; });
}

bp_status bp_time_model_parse(const char *text, bp_time_model **out) {
    return create(out, [&] {
        require(text, "text");
        return brickplan::parse_time_model(text);
    });
}

bp_status bp_time_model_load(const char *path, bp_time_model **out) {
    return create(out, [&] {
        require(path, "path");
        return brickplan::load_time_model(path);
    });
}

bp_status bp_time_model_scaled(const bp_time_model *model, double factor, bp_time_model **out) {
    return create(out, [&] {
        require(model, "model");
        if (!(factor > 0.0)) {
            throw brickplan::DomainError("scale factor must be > 0");
        }
        return model->model.scaled(factor);
    });
}

void bp_time_model_free(bp_time_model *model) { delete model; }

bp_status bp_eval_action_time(const bp_time_model *model, double pick_distance, double place_distance,
                              double wall_clearance, bp_configuration config, double *t_plan, double *t_exec) {
    return guard([&] {
        require(model, "model");
        require(t_plan, "t_plan");
        require(t_exec, "t_exec");
        if (pick_distance < 0.0 || place_distance < 0.0) {
            throw brickplan::DomainError("distances must be >= 0");
        }
        const auto t =
            brickplan::eval_action_time(model->model, pick_distance, place_distance, wall_clearance, to_cpp(config));
        *t_plan = t.planning;
        *t_exec = t.execution;
    });
}

// --- plan -------------------------------------------------------------------

void bp_plan_options_init(bp_plan_options *options) {
    if (options != nullptr) {
        options->robot_count = 0;
        options->material_offset = brickplan::PipelineOptions{}.material_offset;
    }
}

bp_status bp_plan_create(const bp_wall *wall, const bp_robot *robot, const bp_plan_options *options, bp_plan **out) {
    return create(out, [&] {
        require(wall, "wall");
        require(robot, "robot");
        brickplan::PipelineOptions opts;
        if (options != nullptr) {
            if (options->robot_count < 0) {
                throw brickplan::DomainError("robot_count must be >= 0");
            }
            if (options->robot_count > 0) {
                opts.robot_count = options->robot_count;
            }
            opts.material_offset = options->material_offset;
        }
        return brickplan::plan_wall(wall->spec, robot->spec, opts);
    });
}

void bp_plan_free(bp_plan *plan) { delete plan; }

bp_status bp_plan_robot_count(const bp_plan *plan, int *out) {
    return guard([&] {
        require(plan, "plan");
        require(out, "out");
        *out = plan->plan.placement.robot_count();
    });
}

bp_status bp_plan_l_optimal(const bp_plan *plan, double *out) {
    return guard([&] {
        require(plan, "plan");
        require(out, "out");
        *out = plan->plan.placement.l_optimal;
    });
}

bp_status bp_plan_base(const bp_plan *plan, int robot, double *x, double *y) {
    return guard([&] {
        require(plan, "plan");
        require(x, "x");
        require(y, "y");
        check_index(plan->plan.placement.bases, robot);
        const auto &p = plan->plan.placement.bases[static_cast<std::size_t>(robot)].position;
        *x = p.x;
        *y = p.y;
    });
}

bp_status bp_plan_depot(const bp_plan *plan, int robot, double *x, double *y) {
    return guard([&] {
        require(plan, "plan");
        require(x, "x");
        require(y, "y");
        check_index(plan->plan.placement.depots, robot);
        const auto &p = plan->plan.placement.depots[static_cast<std::size_t>(robot)].position;
        *x = p.x;
        *y = p.y;
    });
}

bp_status bp_plan_zone_counts(const bp_plan *plan, size_t *exclusive, size_t *shared, size_t *unreachable) {
    return guard([&] {
        require(plan, "plan");
        size_t counts[3] = {0, 0, 0};
        for (const auto &z : plan->plan.zones.zones) {
            ++counts[static_cast<int>(z.zone)];
        }
        if (exclusive) {
            *exclusive = counts[0];
        }
        if (shared) {
            *shared = counts[1];
        }
        if (unreachable) {
            *unreachable = counts[2];
        }
    });
}

bp_status bp_plan_placement_json(const bp_plan *plan, char **out) {
    return guard([&] {
        require(plan, "plan");
        require(out, "out");
        *out = dup_string(brickplan::placement_plan_json(plan->plan.placement));
    });
}

bp_status bp_plan_zones_csv(const bp_plan *plan, char **out) {
    return guard([&] {
        require(plan, "plan");
        require(out, "out");
        *out = dup_string(brickplan::zones_csv(plan->plan.zones));
    });
}

bp_status bp_plan_zones_svg(const bp_plan *plan, char **out) {
    return guard([&] {
        require(plan, "plan");
        require(out, "out");
        *out = dup_string(brickplan::zones_svg(plan->plan.placement, plan->plan.bricks, plan->plan.zones));
    });
}

// --- simulation -------------------------------------------------------------

bp_status bp_simulate(const bp_plan *plan, const bp_time_model *model, bp_simulation **out) {
    return create(out, [&] {
        require(plan, "plan");
        require(model, "model");
        bp_simulation sim;
        sim.run = brickplan::simulate_plan(plan->plan, model->model);
        const auto problems = brickplan::check_schedule(sim.run.schedule, plan->plan.precedence);
        if (!problems.empty()) {
            throw brickplan::Error(brickplan::ErrorCode::Internal, "schedule invariant violated: " + problems.front());
        }
        sim.single_robot_makespan = brickplan::simulate(brickplan::single_robot_replay(sim.run.schedule)).makespan;
        return sim;
    });
}

void bp_simulation_free(bp_simulation *sim) { delete sim; }

bp_status bp_simulation_makespan(const bp_simulation *sim, double *out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = sim->run.result.makespan;
    });
}

bp_status bp_simulation_total_sum(const bp_simulation *sim, double *out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = sim->run.result.t_total_sum;
    });
}

bp_status bp_simulation_single_robot_makespan(const bp_simulation *sim, double *out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = sim->single_robot_makespan;
    });
}

bp_status bp_simulation_robot_count(const bp_simulation *sim, int *out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = static_cast<int>(sim->run.result.per_robot.size());
    });
}

bp_status bp_simulation_robot_times(const bp_simulation *sim, int robot, double *busy, double *idle) {
    return guard([&] {
        require(sim, "sim");
        check_index(sim->run.result.per_robot, robot);
        const auto &t = sim->run.result.per_robot[static_cast<std::size_t>(robot)];
        if (busy) {
            *busy = t.busy;
        }
        if (idle) {
            *idle = t.idle;
        }
    });
}

bp_status bp_simulation_schedule_csv(const bp_simulation *sim, char **out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = dup_string(brickplan::schedule_csv(sim->run.schedule));
    });
}

bp_status bp_simulation_result_json(const bp_simulation *sim, char **out) {
    return guard([&] {
        require(sim, "sim");
        require(out, "out");
        *out = dup_string(brickplan::sim_result_json(sim->run.result));
    });
}

// --- sweep ------------------------------------------------------------------

bp_status bp_grid_default(bp_grid **out) {
    return create(out, [] { return brickplan::ScenarioGrid{}; });
}

bp_status bp_grid_parse(const char *text, bp_grid **out) {
    return create(out, [&] {
        require(text, "text");
        return brickplan::parse_scenario_grid(text);
    });
}

bp_status bp_grid_load(const char *path, bp_grid **out) {
    return create(out, [&] {
        require(path, "path");
        return brickplan::load_scenario_grid(path);
    });
}

void bp_grid_free(bp_grid *grid) { delete grid; }

bp_status bp_grid_set_wall(bp_grid *grid, const bp_wall *wall) {
    return guard([&] {
        require(grid, "grid");
        require(wall, "wall");
        grid->grid.wall = wall->spec;
    });
}

bp_status bp_grid_scenario_count(const bp_grid *grid, size_t *out) {
    return guard([&] {
        require(grid, "grid");
        require(out, "out");
        *out = brickplan::enumerate_scenarios(grid->grid).size();
    });
}

bp_status bp_sweep_run(const bp_grid *grid, const bp_robot *robot, const bp_time_model *model, bp_sweep **out) {
    return create(out, [&] {
        require(grid, "grid");
        require(robot, "robot");
        require(model, "model");
        return brickplan::run_sweep(grid->grid, robot->spec, model->model);
    });
}

void bp_sweep_free(bp_sweep *sweep) { delete sweep; }

bp_status bp_sweep_row_count(const bp_sweep *sweep, size_t *out) {
    return guard([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = sweep->report.rows.size();
    });
}

bp_status bp_sweep_feasible_count(const bp_sweep *sweep, size_t *out) {
    return guard([&] {
        require(sweep, "sweep");
        require(out, "out");
        size_t n = 0;
        for (const auto &row : sweep->report.rows) {
            n += row.feasible ? 1 : 0;
        }
        *out = n;
    });
}

bp_status bp_sweep_best(const bp_sweep *sweep, bp_objective objective, double *material_offset, double *stand_off,
                        bp_configuration *config, double *value) {
    return guard([&] {
        require(sweep, "sweep");
        const auto best = brickplan::best_placement(sweep->report, to_cpp(objective));
        if (material_offset) {
            *material_offset = best.material_offset;
        }
        if (stand_off) {
            *stand_off = best.stand_off;
        }
        if (config) {
            *config = static_cast<bp_configuration>(best.configuration);
        }
        if (value) {
            *value = best.value;
        }
    });
}

bp_status bp_sweep_csv(const bp_sweep *sweep, char **out) {
    return guard([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = dup_string(brickplan::sweep_csv(sweep->report));
    });
}

bp_status bp_sweep_plot_svg(const bp_sweep *sweep, bp_configuration config, bp_objective objective, char **out) {
    return guard([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = dup_string(brickplan::sweep_plot_svg(sweep->report, to_cpp(config), to_cpp(objective)));
    });
}

} // extern "C"
