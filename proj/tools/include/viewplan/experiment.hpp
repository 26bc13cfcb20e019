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

// Experiment runner shared by the command-line tool and the acceptance
// suite: trial setup, planner dispatch, CSV and JSON artifacts.

#ifndef VIEWPLAN_EXPERIMENT_HPP_
#define VIEWPLAN_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viewplan/coord.hpp"
#include "viewplan/scene.hpp"
#include "viewplan/view_evaluator.hpp"

namespace viewplan::experiment {

inline constexpr std::string_view kMetricsHeader =
    "planner,trial,robots,view_reward,per_robot_view_reward,"
    "stationary_reward,collisions,wall_time_s";
inline constexpr std::string_view kScaleHeader =
    "robots,total_view_reward,marginal_view_reward,wall_time_s";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitPlanning = 2,
  kExitBudget = 3,
};

/// sequential, sequential-nocollide, formation, oracle.
const std::vector<std::string>& planner_names();
bool is_planner(std::string_view name);

struct RunConfig {
  std::filesystem::path scenario;
  std::string planner = "sequential";
  // Zero keeps the scenario's start sets; any other value replaces them with
  // the same number of seeded random start sets.
  std::uint64_t seed = 0;
  double render_scale = 0.25;
  std::filesystem::path out = "out";
  int robots = 0;  // 0 keeps the scenario's robot count
  std::optional<std::uint64_t> order_seed;
  bool dump_frames = false;
  std::optional<int> trial;  // run a single start set
};

struct Trial {
  int index = 0;
  std::vector<RobotState> starts;
};

/// Start configurations for a run. Throws ValidationError when a robot
/// count override exceeds the available starts or the trial index is bad.
std::vector<Trial> make_trials(const Scenario& scenario,
                               const RunConfig& config);

/// Seeded random start set: distinct free cells, random headings.
std::vector<RobotState> random_starts(const Scenario& scenario, int robots,
                                      std::uint64_t seed);

/// Identity, or a seeded shuffle when `order_seed` is set.
std::vector<int> planning_order(int robots,
                                std::optional<std::uint64_t> order_seed);

struct MetricsRow {
  std::string planner;
  int trial = 0;
  int robots = 0;
  double view_reward = 0.0;
  double per_robot_view_reward = 0.0;
  double stationary_reward = 0.0;
  int collisions = 0;
  double wall_time_s = 0.0;
};

/// `normalizing_robots` is the team size of the trial's start set. It
/// differs from plan.num_robots() only when the formation planner fields
/// extra robots.
MetricsRow metrics_row(const PlanResult& plan, int trial,
                       int normalizing_robots);

/// CSV line without the trailing newline. With `include_time` false the
/// wall-time column is left empty, which gives a reproducible fingerprint.
std::string format_metrics_row(const MetricsRow& row, bool include_time = true);
void write_metrics_csv(const std::filesystem::path& path,
                       std::span<const MetricsRow> rows);

PlanResult run_planner(const Scenario& scenario, std::string_view planner,
                       std::span<const RobotState> starts,
                       std::span<const int> order, ViewEvaluator& evaluator);

struct TrialOutcome {
  int trial = 0;
  PlanResult plan;
  MetricsRow row;
};

/// Runs one planner over every trial. The formation planner ignores start
/// positions, so it is planned once and reported for each trial.
std::vector<TrialOutcome> run_trials(const Scenario& scenario,
                                     std::string_view planner,
                                     std::span<const Trial> trials,
                                     std::optional<std::uint64_t> order_seed,
                                     ViewEvaluator& evaluator);

std::string trajectories_json(const Scenario& scenario,
                              std::span<const TrialOutcome> outcomes);

/// Checks the trajectories document's structure and, when a scenario is
/// given, that grid trajectories obey its motion model. Throws
/// ValidationError with the offending path.
void validate_trajectories_json(std::string_view text,
                                const Scenario* scenario = nullptr);

struct PlannerSummary {
  std::string planner;
  int trials = 0;
  int robots = 0;
  double mean_per_robot = 0.0;
  double stddev_per_robot = 0.0;  // sample standard deviation; 0 for 1 trial
  double ratio_to_formation = 0.0;  // NaN without a formation row
  double mean_view_reward = 0.0;
  double mean_collisions = 0.0;
  double mean_wall_time_s = 0.0;
};

std::vector<PlannerSummary> summarize(std::span<const MetricsRow> rows);
void write_compare_csv(const std::filesystem::path& path,
                       std::span<const PlannerSummary> summaries);

struct ScaleRow {
  int robots = 0;
  double total_view_reward = 0.0;
  double marginal_view_reward = 0.0;
  double wall_time_s = 0.0;
};

/// Sequential planning with the first n starts of each trial for
/// n = 1..max_robots; every column is the mean over trials. Each robot count
/// gets a fresh view cache so its timing includes rendering.
std::vector<ScaleRow> scale_sweep(const Scenario& scenario,
                                  std::span<const Trial> trials,
                                  int max_robots, double render_scale);
void write_scale_csv(const std::filesystem::path& path,
                     std::span<const ScaleRow> rows);

/// Least-squares slope of log(wall time) against log(robots).
double growth_exponent(std::span<const ScaleRow> rows);

/// One face-ID PPM per robot per timestep.
void dump_frames(const Scenario& scenario, const PlanResult& plan, int trial,
                 RenderScale scale, const std::filesystem::path& dir);

}  // namespace viewplan::experiment

#endif  // VIEWPLAN_EXPERIMENT_HPP_
