// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// viewplan: command-line front end for the view planners.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "viewplan/experiment.hpp"
#include "viewplan/image_io.hpp"
#include "viewplan/raster.hpp"
#include "viewplan/scenario_io.hpp"

namespace {

using namespace viewplan;
using namespace viewplan::experiment;

void add_common(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--scenario", cfg.scenario, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("--seed", cfg.seed,
                 "0 uses the scenario's start sets; otherwise seeds random "
                 "start sets")
      ->capture_default_str();
  cmd.add_option("--render-scale", cfg.render_scale,
                 "Fraction of native resolution rendered during planning")
      ->capture_default_str()
      ->check(CLI::Range(1e-6, 1.0));
  cmd.add_option("--robots", cfg.robots, "Robot count override")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--order-seed", cfg.order_seed,
                 "Shuffle the sequential planning order with this seed");
  cmd.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  cmd.add_option("--trial", cfg.trial, "Run only this start configuration");
}

void print_outcome(const TrialOutcome& o) {
  std::printf(
      "%s trial %d: view reward %.3f (per robot %.3f), stationary %.3f, "
      "collisions %d, %.3f s\n",
      o.row.planner.c_str(), o.trial, o.row.view_reward,
      o.row.per_robot_view_reward, o.row.stationary_reward, o.row.collisions,
      o.row.wall_time_s);
}

int cmd_plan(const RunConfig& cfg) {
  const Scenario scenario = load_scenario(cfg.scenario);
  const std::vector<Trial> trials = make_trials(scenario, cfg);
  ViewEvaluator evaluator(scenario, RenderScale(cfg.render_scale));
  const std::vector<TrialOutcome> outcomes =
      run_trials(scenario, cfg.planner, trials, cfg.order_seed, evaluator);

  std::vector<MetricsRow> rows;
  for (const TrialOutcome& o : outcomes) {
    print_outcome(o);
    rows.push_back(o.row);
    if (cfg.dump_frames) {
      dump_frames(scenario, o.plan, o.trial, RenderScale(cfg.render_scale),
                  cfg.out / "frames");
    }
  }
  write_metrics_csv(cfg.out / "metrics.csv", rows);
  const std::string doc = trajectories_json(scenario, outcomes);
  validate_trajectories_json(doc, &scenario);
  std::ofstream(cfg.out / "trajectories.json") << doc << '\n';
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, const std::vector<std::string>& planners) {
  const Scenario scenario = load_scenario(cfg.scenario);
  const std::vector<Trial> trials = make_trials(scenario, cfg);
  ViewEvaluator evaluator(scenario, RenderScale(cfg.render_scale));
  std::vector<MetricsRow> rows;
  for (const std::string& planner : planners) {
    for (const TrialOutcome& o :
         run_trials(scenario, planner, trials, cfg.order_seed, evaluator)) {
      rows.push_back(o.row);
    }
  }
  write_metrics_csv(cfg.out / "metrics.csv", rows);
  const std::vector<PlannerSummary> summaries = summarize(rows);
  write_compare_csv(cfg.out / "compare.csv", summaries);
  std::printf("%-22s %8s %22s %10s %10s\n", "planner", "robots",
              "per-robot view reward", "vs form.", "collide");
  for (const PlannerSummary& s : summaries) {
    std::printf("%-22s %8d %12.2f +- %6.2f %10.3f %10.2f\n", s.planner.c_str(),
                s.robots, s.mean_per_robot, s.stddev_per_robot,
                s.ratio_to_formation, s.mean_collisions);
  }
  return kExitOk;
}

int cmd_scale(RunConfig cfg) {
  const Scenario scenario = load_scenario(cfg.scenario);
  const int max_robots = cfg.robots > 0 ? cfg.robots : scenario.num_robots();
  cfg.robots = max_robots;
  const std::vector<Trial> trials = make_trials(scenario, cfg);
  const std::vector<ScaleRow> rows =
      scale_sweep(scenario, trials, max_robots, cfg.render_scale);
  write_scale_csv(cfg.out / "scale.csv", rows);
  for (const ScaleRow& r : rows) {
    std::printf("robots %2d: total %.2f, marginal %.2f, %.3f s\n", r.robots,
                r.total_view_reward, r.marginal_view_reward, r.wall_time_s);
  }
  std::printf("wall-time growth exponent %.3f\n", growth_exponent(rows));
  return kExitOk;
}

// Renders the start views of one trial, holding each robot in place for the
// whole horizon, and prints the t = 0 pixel counts.
int cmd_render_debug(RunConfig cfg) {
  const Scenario scenario = load_scenario(cfg.scenario);
  if (!cfg.trial) cfg.trial = 0;
  const Trial trial = make_trials(scenario, cfg).front();
  const RenderScale scale(cfg.render_scale);
  std::filesystem::create_directories(cfg.out);
  for (int t = 0; t <= scenario.horizon; ++t) {
    const std::vector<ActorInstance> actors = actors_at(scenario.actors, t);
    for (std::size_t r = 0; r < trial.starts.size(); ++r) {
      RobotState s = trial.starts[r];
      s.t = t;
      const CameraPose pose =
          camera_pose(s, scenario.robot_config, scenario.height_map);
      const RenderedView view = render(pose, scenario.robot_config.intrinsics,
                                       scenario.height_map, actors, scale);
      char stem[64];
      std::snprintf(stem, sizeof stem, "robot%02zu_t%03d", r, t);
      write_face_ppm(view, cfg.out / (std::string(stem) + ".ppm"));
      write_depth_pgm(view, cfg.out / (std::string(stem) + "_depth.pgm"));
      if (t == 0) {
        const PixelTally counts = tally(view);
        std::printf("robot %zu: %dx%d px, background %lld\n", r, view.width,
                    view.height, static_cast<long long>(counts.background));
        for (const auto& [face, n] : counts.faces) {
          std::printf("  actor %d face %d: %lld px\n", face.actor_id,
                      face.face_index, static_cast<long long>(n));
        }
      }
    }
  }
  return kExitOk;
}

int cmd_validate(const std::filesystem::path& scenario_path,
                 const std::filesystem::path& trajectories) {
  const Scenario scenario = load_scenario(scenario_path);
  std::printf("scenario ok: %dx%d grid, %zu actors, %d robots, %zu start "
              "sets, horizon %d\n",
              scenario.height_map.cols, scenario.height_map.rows,
              scenario.actors.size(), scenario.num_robots(),
              scenario.start_sets.size(), scenario.horizon);
  if (!trajectories.empty()) {
    std::ifstream in(trajectories);
    if (!in) throw ValidationError("cannot read " + trajectories.string());
    std::ostringstream text;
    text << in.rdbuf();
    validate_trajectories_json(text.str(), &scenario);
    std::printf("trajectories ok\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot view planning for filming moving actors"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> compare_planners = {"sequential",
                                               "sequential-nocollide",
                                               "formation"};
  std::filesystem::path trajectories;
  std::filesystem::path validate_scenario;

  CLI::App* plan = app.add_subcommand("plan", "Plan every start configuration");
  add_common(*plan, cfg);
  plan->add_option("--planner", cfg.planner)
      ->capture_default_str()
      ->check(CLI::IsMember(planner_names()));
  plan->add_flag("--dump-frames", cfg.dump_frames,
                 "Write face-ID PPM frames per robot per timestep");

  CLI::App* compare =
      app.add_subcommand("compare", "Mean per-robot reward for several planners");
  add_common(*compare, cfg);
  compare->add_option("--planner", compare_planners, "Planner (repeatable)")
      ->capture_default_str()
      ->check(CLI::IsMember(planner_names()));

  CLI::App* scale =
      app.add_subcommand("scale", "Sequential planning for 1..N robots");
  add_common(*scale, cfg);

  CLI::App* debug = app.add_subcommand("render-debug",
                                       "Dump start views as PPM/PGM images");
  add_common(*debug, cfg);

  CLI::App* validate =
      app.add_subcommand("validate", "Check a scenario and optional plan file");
  validate->add_option("--scenario", validate_scenario)->required();
  validate->add_option("--trajectories", trajectories,
                       "trajectories.json written by plan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*plan) return cmd_plan(cfg);
    if (*compare) return cmd_compare(cfg, compare_planners);
    if (*scale) return cmd_scale(cfg);
    if (*debug) return cmd_render_debug(cfg);
    if (*validate) return cmd_validate(validate_scenario, trajectories);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const PlanningError& e) {
    std::cerr << "planning error: " << e.what() << '\n';
    return kExitPlanning;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
