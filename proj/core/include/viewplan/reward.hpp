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

// Coverage reward: square root of the pixel density accumulated on each
// actor face at each timestep, summed over faces and time, plus a small
// bonus for every stationary step.

#ifndef VIEWPLAN_REWARD_HPP_
#define VIEWPLAN_REWARD_HPP_

#include <span>
#include <vector>

#include "viewplan/scene.hpp"
#include "viewplan/view_evaluator.hpp"

namespace viewplan {

/// Accumulated density per (timestep, global face), summed over the robots
/// added so far. Entries only ever grow.
class DensityField {
 public:
  DensityField() = default;
  DensityField(int horizon, int num_faces);

  int horizon() const { return horizon_; }
  int num_faces() const { return num_faces_; }

  double at(int t, int face) const {
    return values_[static_cast<std::size_t>(t) * num_faces_ + face];
  }
  std::span<const double> row(int t) const {
    return {values_.data() + static_cast<std::size_t>(t) * num_faces_,
            static_cast<std::size_t>(num_faces_)};
  }

  void add(int t, const SparseDensities& view);

 private:
  int horizon_ = 0;
  int num_faces_ = 0;
  std::vector<double> values_;
};

/// Densities produced by one robot, one entry per timestep.
using TrajectoryDensities = std::vector<SparseDensities>;

struct RewardBreakdown {
  double view_reward = 0.0;
  double stationary_reward = 0.0;
  double per_robot_view_reward = 0.0;

  double total() const { return view_reward + stationary_reward; }
};

/// sqrt of the accumulated density of one face at one timestep.
double view_reward(const DensityField& field, int t, int face);

/// Sum of view_reward over every (t, face).
double total_view_reward(const DensityField& field);

/// epsilon when the step keeps position and heading, else 0.
double stationary_reward(const RobotState& from, const RobotState& to,
                         double epsilon);

/// Sum over (t, face) of sqrt(prior + own) - sqrt(prior).
double marginal_view_reward(const DensityField& prior,
                            const TrajectoryDensities& own);

/// Marginal reward of a single view at timestep t.
double marginal_view_reward(const DensityField& prior, int t,
                            const SparseDensities& own);

/// Throws FeasibilityError naming the robot and timestep of the first
/// violation of the motion model or environment constraints.
void check_feasible(const Scenario& scenario,
                    std::span<const Trajectory> trajectories);

/// Renders every robot view, accumulates the density field and sums the
/// joint objective.
RewardBreakdown joint_objective(const Scenario& scenario,
                                std::span<const Trajectory> trajectories,
                                ViewEvaluator& evaluator);

/// Density field of a set of trajectories (no feasibility check).
DensityField accumulate(const Scenario& scenario,
                        std::span<const Trajectory> trajectories,
                        ViewEvaluator& evaluator);

}  // namespace viewplan

#endif  // VIEWPLAN_REWARD_HPP_
