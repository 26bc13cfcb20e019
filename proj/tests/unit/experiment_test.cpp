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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "viewplan/experiment.hpp"
#include "viewplan/scenario_io.hpp"

namespace viewplan::experiment {
namespace {

std::filesystem::path scenario_path(const char* name) {
  return std::filesystem::path(VIEWPLAN_SCENARIO_DIR) / name;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

MetricsRow row(const std::string& planner, int trial, double per_robot) {
  MetricsRow r;
  r.planner = planner;
  r.trial = trial;
  r.robots = 2;
  r.per_robot_view_reward = per_robot;
  r.view_reward = 2 * per_robot;
  return r;
}

TEST(Planners, NamesAreRecognized) {
  for (const std::string& name : planner_names()) EXPECT_TRUE(is_planner(name));
  EXPECT_FALSE(is_planner("greedy"));
  EXPECT_EQ(planner_names().size(), 4u);
}

TEST(Metrics, CsvHeaderAndRowLayout) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "viewplan_metrics_test";
  std::filesystem::create_directories(dir);
  MetricsRow r = row("sequential", 3, 1.5);
  r.stationary_reward = 0.25;
  r.collisions = 1;
  r.wall_time_s = 0.125;
  const std::vector<MetricsRow> rows = {r};
  write_metrics_csv(dir / "m.csv", rows);

  std::istringstream lines(read_file(dir / "m.csv"));
  std::string header, line;
  std::getline(lines, header);
  std::getline(lines, line);
  EXPECT_EQ(header, kMetricsHeader);
  EXPECT_EQ(line, "sequential,3,2,3,1.5,0.25,1,0.125");
  EXPECT_EQ(format_metrics_row(r, false), "sequential,3,2,3,1.5,0.25,1,");
}

TEST(Trials, StartSetsRobotOverrideAndErrors) {
  const Scenario sc = load_scenario(scenario_path("split.json"));
  RunConfig cfg;
  std::vector<Trial> trials = make_trials(sc, cfg);
  ASSERT_EQ(trials.size(), sc.start_sets.size());
  EXPECT_EQ(trials[4].starts, sc.start_sets[4]);

  cfg.robots = 2;
  trials = make_trials(sc, cfg);
  EXPECT_EQ(trials[0].starts.size(), 2u);

  cfg.robots = sc.num_robots() + 1;
  EXPECT_THROW(make_trials(sc, cfg), ValidationError);

  cfg.robots = 0;
  cfg.trial = static_cast<int>(sc.start_sets.size());
  EXPECT_THROW(make_trials(sc, cfg), ValidationError);
  cfg.trial = 1;
  trials = make_trials(sc, cfg);
  ASSERT_EQ(trials.size(), 1u);
  EXPECT_EQ(trials[0].index, 1);
}

TEST(Trials, SeededStartsAreFreeDistinctAndReproducible) {
  const Scenario sc = load_scenario(scenario_path("forest.json"));
  const std::vector<RobotState> a = random_starts(sc, 6, 42);
  EXPECT_EQ(a, random_starts(sc, 6, 42));
  EXPECT_NE(a, random_starts(sc, 6, 43));
  std::set<std::pair<int, int>> cells;
  for (const RobotState& s : a) {
    EXPECT_TRUE(is_env_free(s.x, s.y, sc.robot_config, sc.height_map));
    EXPECT_TRUE(cells.emplace(s.x, s.y).second);
    EXPECT_EQ(s.t, 0);
  }
}

TEST(Trials, PlanningOrderIsAPermutation) {
  EXPECT_EQ(planning_order(3, std::nullopt), (std::vector<int>{0, 1, 2}));
  std::vector<int> shuffled = planning_order(6, 9);
  EXPECT_EQ(shuffled, planning_order(6, 9));
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, planning_order(6, std::nullopt));
}

TEST(Summary, MeansSampleStddevAndRatio) {
  const std::vector<MetricsRow> rows = {row("sequential", 0, 2.0),
                                        row("sequential", 1, 4.0),
                                        row("formation", 0, 2.0)};
  const std::vector<PlannerSummary> s = summarize(rows);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].planner, "sequential");
  EXPECT_DOUBLE_EQ(s[0].mean_per_robot, 3.0);
  EXPECT_DOUBLE_EQ(s[0].stddev_per_robot, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(s[0].ratio_to_formation, 1.5);
  EXPECT_EQ(s[1].stddev_per_robot, 0.0);

  const std::vector<MetricsRow> lone = {row("sequential", 0, 2.0)};
  EXPECT_TRUE(std::isnan(summarize(lone)[0].ratio_to_formation));
}

TEST(Scaling, GrowthExponentOfPowerLaws) {
  std::vector<ScaleRow> rows;
  for (int n = 1; n <= 5; ++n) {
    rows.push_back({n, 0.0, 0.0, 0.3 * n * n});
  }
  EXPECT_NEAR(growth_exponent(rows), 2.0, 1e-12);
  for (ScaleRow& r : rows) r.wall_time_s = 7.0 * r.robots;
  EXPECT_NEAR(growth_exponent(rows), 1.0, 1e-12);
}

TEST(Scaling, SingleRobotSweepOnTinyScenario) {
  const Scenario sc = load_scenario(scenario_path("tiny.json"));
  const std::vector<Trial> trials = make_trials(sc, RunConfig{});
  const std::vector<ScaleRow> rows = scale_sweep(sc, trials, 1, 1.0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].robots, 1);
  EXPECT_DOUBLE_EQ(rows[0].marginal_view_reward, rows[0].total_view_reward);
}

class TrajectoriesJson : public ::testing::Test {
 protected:
  void SetUp() override {
    sc_ = load_scenario(scenario_path("tiny.json"));
    ViewEvaluator ev(sc_, RenderScale(1.0));
    const std::vector<Trial> trials = make_trials(sc_, RunConfig{});
    auto seq = run_trials(sc_, "sequential", trials, std::nullopt, ev);
    auto form = run_trials(sc_, "formation", trials, std::nullopt, ev);
    outcomes_ = seq;
    outcomes_.insert(outcomes_.end(), form.begin(), form.end());
    text_ = trajectories_json(sc_, outcomes_);
    doc_ = nlohmann::json::parse(text_);
  }

  void expect_rejected(const nlohmann::json& doc) {
    EXPECT_THROW(validate_trajectories_json(doc.dump(), &sc_), ValidationError)
        << doc.dump();
  }

  Scenario sc_;
  std::vector<TrialOutcome> outcomes_;
  std::string text_;
  nlohmann::json doc_;
};

TEST_F(TrajectoriesJson, RoundTripsThroughValidator) {
  EXPECT_NO_THROW(validate_trajectories_json(text_, &sc_));
  EXPECT_NO_THROW(validate_trajectories_json(text_));
  ASSERT_EQ(doc_["trials"].size(), 2u);
  EXPECT_EQ(doc_["horizon"], sc_.horizon);

  const auto& seq_robot = doc_["trials"][0]["robots"][0];
  const Trajectory& traj = outcomes_[0].plan.trajectories[0];
  ASSERT_EQ(seq_robot["states"].size(), traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    EXPECT_EQ(seq_robot["states"][t]["x"], traj[t].x);
    EXPECT_EQ(seq_robot["states"][t]["y"], traj[t].y);
    EXPECT_EQ(seq_robot["states"][t]["theta"], traj[t].theta);
  }
  const auto& form_state = doc_["trials"][1]["robots"][0]["states"][0];
  EXPECT_TRUE(form_state["x"].is_null());
  EXPECT_DOUBLE_EQ(form_state["pose"]["x"].get<double>(),
                   outcomes_[1].plan.poses[0][0].position.x());
}

TEST_F(TrajectoriesJson, RejectsStructuralDamage) {
  EXPECT_THROW(validate_trajectories_json("{", &sc_), ValidationError);

  nlohmann::json d = doc_;
  d.erase("horizon");
  expect_rejected(d);

  d = doc_;
  d["horizon"] = sc_.horizon + 1;
  expect_rejected(d);

  d = doc_;
  d["trials"][0]["planner"] = "greedy";
  expect_rejected(d);

  d = doc_;
  d["trials"][0]["robots"][0]["states"].erase(0);
  expect_rejected(d);

  d = doc_;
  d["trials"][0]["robots"][0]["states"][1]["t"] = 5;
  expect_rejected(d);

  d = doc_;
  d["trials"][0]["robots"][1]["robot"] = 0;
  expect_rejected(d);
}

TEST_F(TrajectoriesJson, RejectsStatesTheScenarioForbids) {
  nlohmann::json d = doc_;
  auto& s1 = d["trials"][0]["robots"][0]["states"][1];
  s1["pose"]["z"] = s1["pose"]["z"].get<double>() + 1.0;
  expect_rejected(d);

  // Teleport two cells: outside the one-cell step bound.
  d = doc_;
  auto& states = d["trials"][0]["robots"][0]["states"];
  const int x0 = states[0]["x"];
  const int y0 = states[0]["y"];
  const int x2 = x0 >= 2 ? x0 - 2 : x0 + 2;
  const RobotState jump{x2, y0, states[1]["theta"].get<int>(), 1};
  const CameraPose p = camera_pose(jump, sc_.robot_config, sc_.height_map);
  states[1]["x"] = jump.x;
  states[1]["y"] = jump.y;
  states[1]["pose"] = {{"x", p.position.x()}, {"y", p.position.y()},
                       {"z", p.position.z()}, {"yaw", p.yaw},
                       {"pitch", p.pitch}};
  expect_rejected(d);
}

}  // namespace
}  // namespace viewplan::experiment
