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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <brickplan/brickplan.h>

#include <cstdlib>
#include <string>

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    bp_string_free(s);
    return out;
}

} // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(bp_version()).size() > 0);
    CHECK(std::string(bp_status_name(BP_OK)) == "ok");
    CHECK(std::string(bp_status_name(BP_ERR_INFEASIBLE)) == "infeasible");
    CHECK(std::string(bp_status_name(static_cast<bp_status>(99))) == "unknown status");
    CHECK(std::string(bp_configuration_name(BP_READY_SIDE)) == "ReadySide");
}

TEST_CASE("scalar helpers") {
    double l = 0.0;
    REQUIRE(bp_l_optimal(0.8, 0.3, &l) == BP_OK);
    CHECK(l == doctest::Approx(1.48324).epsilon(1e-5));
    CHECK(bp_l_optimal(0.3, 0.5, &l) == BP_ERR_DOMAIN);
    CHECK(std::string(bp_last_error()).size() > 0);
    CHECK(bp_l_optimal(0.8, 0.3, nullptr) == BP_ERR_INVALID_ARGUMENT);

    int n = 0;
    REQUIRE(bp_required_robot_count(4.44, 1.48, &n) == BP_OK);
    CHECK(n == 3);
    REQUIRE(bp_required_robot_count(4.45, 1.48, &n) == BP_OK);
    CHECK(n == 4);

    bp_time_model *m = nullptr;
    REQUIRE(bp_time_model_default(&m) == BP_OK);
    double tp = 0.0;
    double te = 0.0;
    REQUIRE(bp_eval_action_time(m, 0.5, 0.3, 0.3, BP_READY_FRONT_01, &tp, &te) == BP_OK);
    CHECK(tp == doctest::Approx(1.0));
    CHECK(te == doctest::Approx(5.2));
    bp_time_model *s = nullptr;
    REQUIRE(bp_time_model_scaled(m, 2.0, &s) == BP_OK);
    REQUIRE(bp_eval_action_time(s, 0.5, 0.3, 0.3, BP_READY_FRONT_01, &tp, &te) == BP_OK);
    CHECK(te == doctest::Approx(10.4));
    bp_time_model_free(s);
    bp_time_model_free(m);
}

TEST_CASE("parse errors carry codes and messages") {
    bp_wall *w = nullptr;
    CHECK(bp_wall_parse("{ not json", &w) == BP_ERR_PARSE);
    CHECK(w == nullptr);
    CHECK(std::string(bp_last_error()).find("line 1") != std::string::npos);
    CHECK(bp_wall_parse(R"({"segments": [{"length": 1.0}], "height": 0})", &w) == BP_ERR_VALIDATION);
    CHECK(bp_wall_parse(nullptr, &w) == BP_ERR_INVALID_ARGUMENT);
    CHECK(bp_wall_load("/nonexistent/wall.json", &w) == BP_ERR_IO);
    bp_robot *r = nullptr;
    CHECK(bp_robot_parse(R"({"configuration": "Upside"})", &r) == BP_ERR_PARSE);
    CHECK(bp_wall_length(nullptr, nullptr) == BP_ERR_INVALID_ARGUMENT);
    bp_wall_free(nullptr);
    bp_plan_free(nullptr);
}

TEST_CASE("plan and simulate the default wall") {
    bp_wall *w = nullptr;
    bp_robot *r = nullptr;
    bp_time_model *m = nullptr;
    REQUIRE(bp_wall_default(&w) == BP_OK);
    REQUIRE(bp_robot_default(&r) == BP_OK);
    REQUIRE(bp_time_model_default(&m) == BP_OK);

    double len = 0.0;
    REQUIRE(bp_wall_length(w, &len) == BP_OK);
    CHECK(len == doctest::Approx(4.44));
    size_t bricks = 0;
    REQUIRE(bp_wall_brick_count(w, &bricks) == BP_OK);
    CHECK(bricks == 138);
    char *text = nullptr;
    REQUIRE(bp_wall_bricks_csv(w, &text) == BP_OK);
    CHECK(take(text).rfind("id,x,y,z,course", 0) == 0);

    bp_plan_options opts;
    bp_plan_options_init(&opts);
    CHECK(opts.robot_count == 0);
    CHECK(opts.material_offset == 0.4);
    bp_plan *p = nullptr;
    REQUIRE(bp_plan_create(w, r, &opts, &p) == BP_OK);
    int n = 0;
    REQUIRE(bp_plan_robot_count(p, &n) == BP_OK);
    CHECK(n == 3);
    double x = 0.0;
    double y = 0.0;
    REQUIRE(bp_plan_base(p, 0, &x, &y) == BP_OK);
    CHECK(x == doctest::Approx(0.74));
    CHECK(y == doctest::Approx(-0.30));
    REQUIRE(bp_plan_depot(p, 0, &x, &y) == BP_OK);
    CHECK(x == doctest::Approx(1.14));
    CHECK(bp_plan_base(p, 3, &x, &y) == BP_ERR_INVALID_ARGUMENT);
    size_t ex = 0;
    size_t sh = 0;
    size_t un = 0;
    REQUIRE(bp_plan_zone_counts(p, &ex, &sh, &un) == BP_OK);
    CHECK(ex + sh + un == 138);
    CHECK(sh > 0);
    CHECK(un == 0);
    REQUIRE(bp_plan_placement_json(p, &text) == BP_OK);
    CHECK(take(text).find("\"n\": 3") != std::string::npos);
    REQUIRE(bp_plan_zones_svg(p, &text) == BP_OK);
    CHECK(take(text).find("<svg") != std::string::npos);

    bp_simulation *s = nullptr;
    REQUIRE(bp_simulate(p, m, &s) == BP_OK);
    double makespan = 0.0;
    double sum = 0.0;
    double single = 0.0;
    REQUIRE(bp_simulation_makespan(s, &makespan) == BP_OK);
    REQUIRE(bp_simulation_total_sum(s, &sum) == BP_OK);
    REQUIRE(bp_simulation_single_robot_makespan(s, &single) == BP_OK);
    CHECK(sum / 3 <= makespan);
    CHECK(single / makespan >= 1.5);
    double busy = 0.0;
    double idle = 0.0;
    REQUIRE(bp_simulation_robot_times(s, 1, &busy, &idle) == BP_OK);
    CHECK(busy > 0.0);
    CHECK(idle >= 0.0);
    REQUIRE(bp_simulation_schedule_csv(s, &text) == BP_OK);
    CHECK(take(text).rfind("robot,brick_id,action", 0) == 0);

    bp_simulation_free(s);
    bp_plan_free(p);
    bp_time_model_free(m);
    bp_robot_free(r);
    bp_wall_free(w);
}

TEST_CASE("plan errors map to status codes") {
    bp_wall *w = nullptr;
    bp_robot *r = nullptr;
    REQUIRE(bp_wall_parse(R"({"segments": [{"length": 6.0}], "height": 0.05})", &w) == BP_OK);
    REQUIRE(bp_robot_default(&r) == BP_OK);
    bp_plan_options opts;
    bp_plan_options_init(&opts);
    opts.robot_count = 3;
    bp_plan *p = nullptr;
    CHECK(bp_plan_create(w, r, &opts, &p) == BP_ERR_INFEASIBLE);
    CHECK(std::string(bp_last_error()).find("L_wall=6.000000") != std::string::npos);
    opts.robot_count = 0;
    opts.material_offset = 0.9;
    CHECK(bp_plan_create(w, r, &opts, &p) == BP_ERR_DOMAIN);
    CHECK(p == nullptr);
    bp_wall_free(w);

    REQUIRE(bp_wall_parse(R"({"segments": [{"length": 1.48}, {"length": 2.96, "turn_angle_deg": 45}], "height": 0.05})",
                          &w) == BP_OK);
    opts.material_offset = 0.4;
    CHECK(bp_plan_create(w, r, &opts, &p) == BP_ERR_UNSUPPORTED_GEOMETRY);
    bp_wall_free(w);
    bp_robot_free(r);
}

TEST_CASE("sweep through the C interface") {
    bp_grid *g = nullptr;
    bp_robot *r = nullptr;
    bp_time_model *m = nullptr;
    REQUIRE(bp_grid_parse(R"({"material_offsets": [0.4, 0.9], "ready_front01_extra_offsets": [],
                             "stand_offs": [0.2, 0.3], "configurations": ["ReadyFront01", "ReadySide"]})",
                          &g) == BP_OK);
    REQUIRE(bp_robot_default(&r) == BP_OK);
    REQUIRE(bp_time_model_default(&m) == BP_OK);
    size_t count = 0;
    REQUIRE(bp_grid_scenario_count(g, &count) == BP_OK);
    CHECK(count == 8);

    bp_sweep *s = nullptr;
    REQUIRE(bp_sweep_run(g, r, m, &s) == BP_OK);
    size_t rows = 0;
    size_t feasible = 0;
    REQUIRE(bp_sweep_row_count(s, &rows) == BP_OK);
    REQUIRE(bp_sweep_feasible_count(s, &feasible) == BP_OK);
    CHECK(rows == 8);
    CHECK(feasible == 4);
    double offset = 0.0;
    double stand_off = 0.0;
    double value = 0.0;
    bp_configuration config = BP_READY_SIDE;
    REQUIRE(bp_sweep_best(s, BP_OBJECTIVE_MAKESPAN, &offset, &stand_off, &config, &value) == BP_OK);
    CHECK(offset == 0.4);
    CHECK(stand_off == 0.3);
    CHECK(config == BP_READY_FRONT_01);
    CHECK(value > 0.0);
    char *text = nullptr;
    REQUIRE(bp_sweep_csv(s, &text) == BP_OK);
    CHECK(take(text).rfind("config,", 0) == 0);
    REQUIRE(bp_sweep_plot_svg(s, BP_READY_SIDE, BP_OBJECTIVE_TOTAL_SUM, &text) == BP_OK);
    CHECK(take(text).find("ReadySide") != std::string::npos);
    bp_sweep_free(s);

    bp_wall *w = nullptr;
    REQUIRE(bp_wall_parse(R"({"segments": [{"length": 0.4}], "height": 0.05})", &w) == BP_OK);
    REQUIRE(bp_grid_set_wall(g, w) == BP_OK);
    REQUIRE(bp_sweep_run(g, r, m, &s) == BP_OK);
    REQUIRE(bp_sweep_row_count(s, &rows) == BP_OK);
    CHECK(rows == 8);
    bp_sweep_free(s);

    bp_grid_free(g);
    REQUIRE(bp_grid_parse(R"({"material_offsets": [0.9], "ready_front01_extra_offsets": []})", &g) == BP_OK);
    REQUIRE(bp_sweep_run(g, r, m, &s) == BP_OK);
    CHECK(bp_sweep_best(s, BP_OBJECTIVE_MAKESPAN, &offset, &stand_off, &config, &value) == BP_ERR_EMPTY_REPORT);
    bp_sweep_free(s);
    bp_grid_free(g);
    bp_wall_free(w);
    bp_time_model_free(m);
    bp_robot_free(r);
}
