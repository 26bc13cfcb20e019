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

// Exhaustive joint planner. Trajectories are enumerated directly from the
// motion model, independently of the state-graph construction.

#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "viewplan/coord.hpp"

namespace viewplan {
namespace {

struct Candidate {
  Trajectory trajectory;
  std::vector<double> densities;  // (horizon + 1) x faces, dense
  double stationary = 0.0;
};

void enumerate(const Scenario& sc, Trajectory& prefix,
               std::vector<Trajectory>& out) {
  if (prefix.back().t == sc.horizon) {
    out.push_back(prefix);
    return;
  }
  for (const RobotState& next :
       neighbors(prefix.back(), sc.robot_config, sc.height_map)) {
    prefix.push_back(next);
    enumerate(sc, prefix, out);
    prefix.pop_back();
  }
}

bool collide(const Trajectory& a, const Trajectory& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].x == b[t].x && a[t].y == b[t].y) return true;
  }
  return false;
}

}  // namespace

double count_trajectories(const RobotState& start, const Scenario& scenario) {
  std::map<RobotState, double> layer{{start, 1.0}};
  for (int t = 0; t < scenario.horizon; ++t) {
    std::map<RobotState, double> next;
    for (const auto& [state, paths] : layer) {
      for (const RobotState& s :
           neighbors(state, scenario.robot_config, scenario.height_map)) {
        next[s] += paths;
      }
    }
    layer = std::move(next);
  }
  double total = 0.0;
  for (const auto& [state, paths] : layer) total += paths;
  return total;
}

PlanResult joint_oracle(const Scenario& scenario,
                        std::span<const RobotState> starts,
                        bool enforce_inter_robot, ViewEvaluator& evaluator,
                        std::uint64_t budget) {
  const auto started = std::chrono::steady_clock::now();
  const int n = static_cast<int>(starts.size());

  double combinations = 1.0;
  for (const RobotState& s : starts) {
    combinations *= count_trajectories(s, scenario);
  }
  if (combinations > static_cast<double>(budget)) {
    throw BudgetExceeded(combinations, budget);
  }

  const int faces = evaluator.layout().num_faces();
  const std::size_t cells = static_cast<std::size_t>(scenario.horizon + 1) * faces;
  const double eps = scenario.robot_config.stationary_bonus;

  std::vector<std::vector<Candidate>> candidates(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Trajectory> all;
    Trajectory prefix{starts[i]};
    enumerate(scenario, prefix, all);
    for (Trajectory& traj : all) {
      Candidate c;
      c.densities.assign(cells, 0.0);
      for (const RobotState& s : traj) {
        for (const FaceDensity& d : evaluator.evaluate(s)) {
          c.densities[static_cast<std::size_t>(s.t) * faces + d.face] +=
              d.density;
        }
      }
      for (std::size_t t = 1; t < traj.size(); ++t) {
        c.stationary += stationary_reward(traj[t - 1], traj[t], eps);
      }
      c.trajectory = std::move(traj);
      candidates[i].push_back(std::move(c));
    }
  }

  std::vector<std::size_t> pick(n, 0);
  std::vector<std::size_t> best_pick;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> sum(cells);
  bool done = n > 0 && std::any_of(candidates.begin(), candidates.end(),
                                   [](const auto& c) { return c.empty(); });
  while (!done) {
    bool feasible = true;
    if (enforce_inter_robot) {
      for (int a = 0; a < n && feasible; ++a) {
        for (int b = a + 1; b < n && feasible; ++b) {
          feasible = !collide(candidates[a][pick[a]].trajectory,
                              candidates[b][pick[b]].trajectory);
        }
      }
    }
    if (feasible) {
      std::fill(sum.begin(), sum.end(), 0.0);
      double value = 0.0;
      for (int i = 0; i < n; ++i) {
        const Candidate& c = candidates[i][pick[i]];
        for (std::size_t k = 0; k < cells; ++k) sum[k] += c.densities[k];
        value += c.stationary;
      }
      for (double v : sum) value += std::sqrt(v);
      if (value > best_value) {
        best_value = value;
        best_pick = pick;
      }
    }
    // Odometer over the product space; the last robot varies fastest.
    int digit = n - 1;
    while (digit >= 0 && ++pick[digit] == candidates[digit].size()) {
      pick[digit] = 0;
      --digit;
    }
    done = digit < 0;
  }
  if (best_pick.size() != static_cast<std::size_t>(n)) {
    throw PlanningError("no collision-free joint plan exists");
  }

  PlanResult result;
  result.planner = enforce_inter_robot ? "oracle" : "oracle-nocollide";
  for (int i = 0; i < n; ++i) {
    const Trajectory& traj = candidates[i][best_pick[i]].trajectory;
    result.trajectories.push_back(traj);
    result.controls.emplace_back(traj.begin() + 1, traj.end());
    std::vector<CameraPose> poses;
    for (const RobotState& s : traj) {
      poses.push_back(camera_pose(s, scenario.robot_config, scenario.height_map));
    }
    result.poses.push_back(std::move(poses));
  }
  result.reward = joint_objective(scenario, result.trajectories, evaluator);
  result.collision_count = collision_report(result.trajectories).collision_count;
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  result.wall_time_s.assign(n, n > 0 ? elapsed / n : 0.0);
  return result;
}

}  // namespace viewplan
