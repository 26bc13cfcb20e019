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

// Multi-robot coordination: sequential greedy planning, the exhaustive joint
// oracle used to check it, and the formation baseline.

#ifndef VIEWPLAN_COORD_HPP_
#define VIEWPLAN_COORD_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "viewplan/collision.hpp"
#include "viewplan/reward.hpp"
#include "viewplan/scene.hpp"
#include "viewplan/view_evaluator.hpp"

namespace viewplan {

struct PlanResult {
  std::string planner;
  // Grid trajectories, indexed by robot. Empty for the formation planner,
  // whose robots live off the grid.
  std::vector<Trajectory> trajectories;
  std::vector<std::vector<RobotState>> controls;
  // Camera pose of every robot at every timestep.
  std::vector<std::vector<CameraPose>> poses;
  RewardBreakdown reward;
  int collision_count = 0;
  std::vector<double> wall_time_s;  // per robot

  int num_robots() const { return static_cast<int>(poses.size()); }
  double total_wall_time() const;
};

/// Plans robots one at a time in `order` (empty: index order). Each robot
/// maximizes its marginal reward over the densities of the robots planned
/// before it and, when `enforce_inter_robot` is set, avoids their cells.
/// Throws PlanningError when a robot has no feasible trajectory.
PlanResult sequential_plan(const Scenario& scenario,
                           std::span<const RobotState> starts,
                           bool enforce_inter_robot,
                           std::span<const int> order,
                           ViewEvaluator& evaluator);

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

/// Number of dynamically feasible trajectories from start (saturating).
double count_trajectories(const RobotState& start, const Scenario& scenario);

/// Exhaustive maximization of the joint objective over the product of every
/// robot's feasible trajectories. Throws BudgetExceeded when the product
/// space is larger than `budget`, PlanningError when every combination
/// collides.
PlanResult joint_oracle(const Scenario& scenario,
                        std::span<const RobotState> starts,
                        bool enforce_inter_robot, ViewEvaluator& evaluator,
                        std::uint64_t budget = kDefaultOracleBudget);

/// Angle between neighbouring robots of a formation of `group_size`.
double formation_separation(int group_size);

/// Robot `slot` of a formation around an actor: on the circle of `radius`
/// at `base_angle + slot * separation`, at altitude, aimed at the actor's
/// mid-height.
CameraPose formation_pose(const ActorPose& actor, const ActorModel& model,
                          double radius, double altitude, double base_angle,
                          int slot, int group_size);

inline constexpr int kFormationOrientations = 64;

/// Robot index -> actor index; actors in id order, robots dealt round-robin.
std::vector<int> formation_groups(int num_robots, int num_actors);

/// Formation baseline with `num_robots` robots (0: the scenario's formation
/// robot count). Per timestep, groups in actor order pick the base
/// orientation, among `orientations` uniform samples, that maximizes the
/// total view reward given the groups already placed.
PlanResult formation_plan(const Scenario& scenario, ViewEvaluator& evaluator,
                          int num_robots = 0,
                          int orientations = kFormationOrientations);

}  // namespace viewplan

#endif  // VIEWPLAN_COORD_HPP_
