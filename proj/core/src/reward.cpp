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

#include "viewplan/reward.hpp"

#include <cmath>
#include <string>

namespace viewplan {

DensityField::DensityField(int horizon, int num_faces)
    : horizon_(horizon),
      num_faces_(num_faces),
      values_(static_cast<std::size_t>(horizon + 1) * num_faces, 0.0) {}

void DensityField::add(int t, const SparseDensities& view) {
  double* row = values_.data() + static_cast<std::size_t>(t) * num_faces_;
  for (const FaceDensity& d : view) row[d.face] += d.density;
}

double view_reward(const DensityField& field, int t, int face) {
  if (t < 0 || t > field.horizon() || face < 0 || face >= field.num_faces()) {
    return 0.0;
  }
  return std::sqrt(field.at(t, face));
}

double total_view_reward(const DensityField& field) {
  double sum = 0.0;
  for (int t = 0; t <= field.horizon(); ++t) {
    for (double v : field.row(t)) sum += std::sqrt(v);
  }
  return sum;
}

double stationary_reward(const RobotState& from, const RobotState& to,
                         double epsilon) {
  return from.same_pose(to) ? epsilon : 0.0;
}

double marginal_view_reward(const DensityField& prior, int t,
                            const SparseDensities& own) {
  double gain = 0.0;
  for (const FaceDensity& d : own) {
    const double p = prior.at(t, d.face);
    gain += std::sqrt(p + d.density) - std::sqrt(p);
  }
  return gain;
}

double marginal_view_reward(const DensityField& prior,
                            const TrajectoryDensities& own) {
  double gain = 0.0;
  for (std::size_t t = 0; t < own.size(); ++t) {
    gain += marginal_view_reward(prior, static_cast<int>(t), own[t]);
  }
  return gain;
}

void check_feasible(const Scenario& scenario,
                    std::span<const Trajectory> trajectories) {
  const RobotConfig& cfg = scenario.robot_config;
  const HeightMap& map = scenario.height_map;
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const Trajectory& traj = trajectories[i];
    const std::string robot = "robot " + std::to_string(i);
    if (traj.size() != static_cast<std::size_t>(scenario.horizon) + 1) {
      throw FeasibilityError(robot + ": trajectory must have horizon+1 states");
    }
    for (std::size_t t = 0; t < traj.size(); ++t) {
      const RobotState& s = traj[t];
      const std::string at = robot + " at t=" + std::to_string(t);
      if (s.t != static_cast<int>(t) || !map.contains(s.x, s.y) ||
          s.theta < 0 || s.theta >= cfg.num_headings) {
        throw FeasibilityError(at + ": invalid state");
      }
      if (!is_env_free(s.x, s.y, cfg, map)) {
        throw FeasibilityError(at + ": environment collision");
      }
      if (t > 0 && !is_transition(traj[t - 1], s, cfg, map)) {
        throw FeasibilityError(at + ": violates the motion model");
      }
    }
  }
}

DensityField accumulate(const Scenario& scenario,
                        std::span<const Trajectory> trajectories,
                        ViewEvaluator& evaluator) {
  DensityField field(scenario.horizon, evaluator.layout().num_faces());
  for (const Trajectory& traj : trajectories) {
    for (const RobotState& s : traj) field.add(s.t, evaluator.evaluate(s));
  }
  return field;
}

RewardBreakdown joint_objective(const Scenario& scenario,
                                std::span<const Trajectory> trajectories,
                                ViewEvaluator& evaluator) {
  check_feasible(scenario, trajectories);
  RewardBreakdown out;
  out.view_reward =
      total_view_reward(accumulate(scenario, trajectories, evaluator));
  const double eps = scenario.robot_config.stationary_bonus;
  for (const Trajectory& traj : trajectories) {
    for (std::size_t t = 1; t < traj.size(); ++t) {
      out.stationary_reward += stationary_reward(traj[t - 1], traj[t], eps);
    }
  }
  if (!trajectories.empty()) {
    out.per_robot_view_reward =
        out.view_reward / static_cast<double>(trajectories.size());
  }
  return out;
}

}  // namespace viewplan
