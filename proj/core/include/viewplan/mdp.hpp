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

// Single-robot finite-horizon planning. States are (x, y, theta, t); an
// action names the successor state, so the reachable state space is a DAG
// layered by time and one backward sweep yields the optimal plan.

#ifndef VIEWPLAN_MDP_HPP_
#define VIEWPLAN_MDP_HPP_

#include <vector>

#include "viewplan/collision.hpp"
#include "viewplan/reward.hpp"
#include "viewplan/scene.hpp"
#include "viewplan/view_evaluator.hpp"

namespace viewplan {

struct Edge {
  int target = 0;
  double reward = 0.0;
};

/// Layered DAG. Node 0 is the root; nodes are stored by increasing t and,
/// within a layer, by increasing (x, y, theta). Every edge goes from layer t
/// to layer t+1 and each node's edges are sorted by target key.
struct StateGraph {
  int horizon = 0;
  std::vector<RobotState> nodes;
  std::vector<std::vector<Edge>> edges;
  std::vector<int> layer_begin;  // horizon + 2 entries
  // Reward of the root's own view; constant across plans.
  double root_reward = 0.0;

  std::size_t size() const { return nodes.size(); }
  int layer_size(int t) const { return layer_begin[t + 1] - layer_begin[t]; }
  std::size_t edge_count() const;
};

/// Values and greedy successors. best[n] == -1 for terminal nodes and for
/// dead ends, whose value is -infinity.
struct ValueTable {
  std::vector<double> value;
  std::vector<int> best;
};

/// Breadth-first expansion of every state reachable from start. States whose
/// (cell, t) is blocked in `collisions` are pruned. Edge rewards are the
/// marginal view reward of the successor's view over `prior` plus the
/// stationary bonus.
StateGraph build_graph(const RobotState& start, const Scenario& scenario,
                       const DensityField& prior,
                       const CollisionMap& collisions,
                       ViewEvaluator& evaluator);

/// One backward pass in reverse topological order. Ties keep the successor
/// with the smallest key.
ValueTable value_iteration(const StateGraph& graph);

struct ExtractedPlan {
  std::vector<RobotState> controls;  // control u_t is the state at t+1
  Trajectory trajectory;
};

/// Follows best successors from the root to the final layer. Throws
/// PlanningError when the root has no path to the horizon.
ExtractedPlan extract_trajectory(const StateGraph& graph,
                                 const ValueTable& table);

}  // namespace viewplan

#endif  // VIEWPLAN_MDP_HPP_
