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

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "viewplan/coord.hpp"
#include "viewplan/mdp.hpp"

namespace viewplan {

double PlanResult::total_wall_time() const {
  return std::accumulate(wall_time_s.begin(), wall_time_s.end(), 0.0);
}

PlanResult sequential_plan(const Scenario& scenario,
                           std::span<const RobotState> starts,
                           bool enforce_inter_robot,
                           std::span<const int> order,
                           ViewEvaluator& evaluator) {
  const int n = static_cast<int>(starts.size());
  std::vector<int> sequence(order.begin(), order.end());
  if (sequence.empty()) {
    sequence.resize(n);
    std::iota(sequence.begin(), sequence.end(), 0);
  }
  {
    std::vector<int> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) {
      throw std::invalid_argument("planning order must permute the robots");
    }
  }

  const HeightMap& map = scenario.height_map;
  DensityField field(scenario.horizon, evaluator.layout().num_faces());
  const CollisionMap no_collisions;
  CollisionMap occupied(map.cols, map.rows, scenario.horizon);

  PlanResult result;
  result.planner =
      enforce_inter_robot ? "sequential" : "sequential-nocollide";
  result.trajectories.resize(n);
  result.controls.resize(n);
  result.poses.resize(n);
  result.wall_time_s.assign(n, 0.0);

  for (int robot : sequence) {
    const auto started = std::chrono::steady_clock::now();
    ExtractedPlan plan;
    try {
      const StateGraph graph =
          build_graph(starts[robot], scenario, field,
                      enforce_inter_robot ? occupied : no_collisions, evaluator);
      plan = extract_trajectory(graph, value_iteration(graph));
    } catch (const PlanningError& e) {
      throw PlanningError("robot " + std::to_string(robot) + ": " + e.what());
    }

    for (const RobotState& s : plan.trajectory) {
      field.add(s.t, evaluator.evaluate(s));
    }
    if (enforce_inter_robot) occupied.add(plan.trajectory);

    result.trajectories[robot] = std::move(plan.trajectory);
    result.controls[robot] = std::move(plan.controls);
    result.wall_time_s[robot] = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - started)
                                    .count();
  }

  const double eps = scenario.robot_config.stationary_bonus;
  result.reward.view_reward = total_view_reward(field);
  for (int i = 0; i < n; ++i) {
    const Trajectory& traj = result.trajectories[i];
    for (std::size_t t = 1; t < traj.size(); ++t) {
      result.reward.stationary_reward +=
          stationary_reward(traj[t - 1], traj[t], eps);
    }
    for (const RobotState& s : traj) {
      result.poses[i].push_back(camera_pose(s, scenario.robot_config, map));
    }
  }
  if (n > 0) result.reward.per_robot_view_reward = result.reward.view_reward / n;
  result.collision_count = collision_report(result.trajectories).collision_count;
  return result;
}

}  // namespace viewplan
