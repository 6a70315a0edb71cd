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

#ifndef BRICKPLAN_BRICKPLAN_H
#define BRICKPLAN_BRICKPLAN_H

/*
 * C interface to the brickplan planner and simulator.
 *
 * Every object is an opaque handle created by a *_create/_parse/_load/_default function and
 * released with the matching *_free function. Functions return a bp_status; on failure the
 * thread-local message from bp_last_error() describes the problem. Strings returned through
 * char** out-parameters are heap allocated and must be released with bp_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BRICKPLAN_BUILDING_LIBRARY)
#    define BRICKPLAN_API __declspec(dllexport)
#  else
#    define BRICKPLAN_API __declspec(dllimport)
#  endif
#else
#  define BRICKPLAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
    BP_OK = 0,
    BP_ERR_PARSE = 1,
    BP_ERR_VALIDATION = 2,
    BP_ERR_INFEASIBLE = 3,
    BP_ERR_UNSUPPORTED_GEOMETRY = 4,
    BP_ERR_DOMAIN = 5,
    BP_ERR_COVERAGE = 6,
    BP_ERR_DEADLOCK = 7,
    BP_ERR_IO = 8,
    BP_ERR_INVALID_ARGUMENT = 9,
    BP_ERR_EMPTY_REPORT = 10,
    BP_ERR_INTERNAL = 11
} bp_status;

typedef enum bp_configuration {
    BP_READY_FRONT_01 = 0,
    BP_READY_FRONT_02 = 1,
    BP_READY_SIDE = 2
} bp_configuration;

typedef enum bp_objective {
    BP_OBJECTIVE_MAKESPAN = 0,
    BP_OBJECTIVE_TOTAL_SUM = 1
} bp_objective;

typedef struct bp_wall bp_wall;
typedef struct bp_robot bp_robot;
typedef struct bp_time_model bp_time_model;
typedef struct bp_plan bp_plan;
typedef struct bp_simulation bp_simulation;
typedef struct bp_grid bp_grid;
typedef struct bp_sweep bp_sweep;

BRICKPLAN_API const char *bp_version(void);
BRICKPLAN_API const char *bp_last_error(void);
BRICKPLAN_API const char *bp_status_name(bp_status status);
BRICKPLAN_API const char *bp_configuration_name(bp_configuration config);
BRICKPLAN_API void bp_string_free(char *str);

/* Wall geometry. */
BRICKPLAN_API bp_status bp_wall_default(bp_wall **out);
BRICKPLAN_API bp_status bp_wall_parse(const char *text, bp_wall **out);
BRICKPLAN_API bp_status bp_wall_load(const char *path, bp_wall **out);
BRICKPLAN_API void bp_wall_free(bp_wall *wall);
BRICKPLAN_API bp_status bp_wall_length(const bp_wall *wall, double *out);
BRICKPLAN_API bp_status bp_wall_brick_count(const bp_wall *wall, size_t *out);
BRICKPLAN_API bp_status bp_wall_serialize(const bp_wall *wall, char **out);
BRICKPLAN_API bp_status bp_wall_bricks_csv(const bp_wall *wall, char **out);

/* Robot parameters and coverage arithmetic. */
BRICKPLAN_API bp_status bp_robot_default(bp_robot **out);
BRICKPLAN_API bp_status bp_robot_parse(const char *text, bp_robot **out);
BRICKPLAN_API bp_status bp_robot_load(const char *path, bp_robot **out);
BRICKPLAN_API void bp_robot_free(bp_robot *robot);
BRICKPLAN_API bp_status bp_robot_l_optimal(const bp_robot *robot, double *out);
BRICKPLAN_API bp_status bp_l_optimal(double r_cover, double stand_off, double *out);
BRICKPLAN_API bp_status bp_required_robot_count(double wall_length, double l_optimal, int *out);

/* Time model. */
BRICKPLAN_API bp_status bp_time_model_default(bp_time_model **out);
BRICKPLAN_API bp_status bp_time_model_parse(const char *text, bp_time_model **out);
BRICKPLAN_API bp_status bp_time_model_load(const char *path, bp_time_model **out);
BRICKPLAN_API bp_status bp_time_model_scaled(const bp_time_model *model, double factor, bp_time_model **out);
BRICKPLAN_API void bp_time_model_free(bp_time_model *model);
BRICKPLAN_API bp_status bp_eval_action_time(const bp_time_model *model, double pick_distance, double place_distance,
                                            double wall_clearance, bp_configuration config, double *t_plan,
                                            double *t_exec);

/* Planning: decomposition, base and depot placement, zoning, brick ownership. */
typedef struct bp_plan_options {
    int robot_count;        /* 0 selects the minimal robot count */
    double material_offset; /* metres along the robot's local x axis */
} bp_plan_options;

BRICKPLAN_API void bp_plan_options_init(bp_plan_options *options);
BRICKPLAN_API bp_status bp_plan_create(const bp_wall *wall, const bp_robot *robot, const bp_plan_options *options,
                                       bp_plan **out);
BRICKPLAN_API void bp_plan_free(bp_plan *plan);
BRICKPLAN_API bp_status bp_plan_robot_count(const bp_plan *plan, int *out);
BRICKPLAN_API bp_status bp_plan_l_optimal(const bp_plan *plan, double *out);
BRICKPLAN_API bp_status bp_plan_base(const bp_plan *plan, int robot, double *x, double *y);
BRICKPLAN_API bp_status bp_plan_depot(const bp_plan *plan, int robot, double *x, double *y);
BRICKPLAN_API bp_status bp_plan_zone_counts(const bp_plan *plan, size_t *exclusive, size_t *shared,
                                            size_t *unreachable);
BRICKPLAN_API bp_status bp_plan_placement_json(const bp_plan *plan, char **out);
BRICKPLAN_API bp_status bp_plan_zones_csv(const bp_plan *plan, char **out);
BRICKPLAN_API bp_status bp_plan_zones_svg(const bp_plan *plan, char **out);

/* Scheduling and simulation. bp_simulate fails with BP_ERR_INTERNAL if the emitted schedule
 * violates mutual exclusion, precedence or per-robot ordering. */
BRICKPLAN_API bp_status bp_simulate(const bp_plan *plan, const bp_time_model *model, bp_simulation **out);
BRICKPLAN_API void bp_simulation_free(bp_simulation *sim);
BRICKPLAN_API bp_status bp_simulation_makespan(const bp_simulation *sim, double *out);
BRICKPLAN_API bp_status bp_simulation_total_sum(const bp_simulation *sim, double *out);
BRICKPLAN_API bp_status bp_simulation_single_robot_makespan(const bp_simulation *sim, double *out);
BRICKPLAN_API bp_status bp_simulation_robot_count(const bp_simulation *sim, int *out);
BRICKPLAN_API bp_status bp_simulation_robot_times(const bp_simulation *sim, int robot, double *busy, double *idle);
BRICKPLAN_API bp_status bp_simulation_schedule_csv(const bp_simulation *sim, char **out);
BRICKPLAN_API bp_status bp_simulation_result_json(const bp_simulation *sim, char **out);

/* Placement sweep. */
BRICKPLAN_API bp_status bp_grid_default(bp_grid **out);
BRICKPLAN_API bp_status bp_grid_parse(const char *text, bp_grid **out);
BRICKPLAN_API bp_status bp_grid_load(const char *path, bp_grid **out);
BRICKPLAN_API void bp_grid_free(bp_grid *grid);
BRICKPLAN_API bp_status bp_grid_set_wall(bp_grid *grid, const bp_wall *wall);
BRICKPLAN_API bp_status bp_grid_scenario_count(const bp_grid *grid, size_t *out);

BRICKPLAN_API bp_status bp_sweep_run(const bp_grid *grid, const bp_robot *robot, const bp_time_model *model,
                                     bp_sweep **out);
BRICKPLAN_API void bp_sweep_free(bp_sweep *sweep);
BRICKPLAN_API bp_status bp_sweep_row_count(const bp_sweep *sweep, size_t *out);
BRICKPLAN_API bp_status bp_sweep_feasible_count(const bp_sweep *sweep, size_t *out);
BRICKPLAN_API bp_status bp_sweep_best(const bp_sweep *sweep, bp_objective objective, double *material_offset,
                                      double *stand_off, bp_configuration *config, double *value);
BRICKPLAN_API bp_status bp_sweep_csv(const bp_sweep *sweep, char **out);
BRICKPLAN_API bp_status bp_sweep_plot_svg(const bp_sweep *sweep, bp_configuration config, bp_objective objective,
                                          char **out);

#ifdef __cplusplus
}
#endif

#endif /* BRICKPLAN_BRICKPLAN_H */
