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

#include "viewplan/mdp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace viewplan {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string describe(const RobotState& s) {
  return "(" + std::to_string(s.x) + ", " + std::to_string(s.y) + ", " +
         std::to_string(s.theta) + ", t=" + std::to_string(s.t) + ")";
}

}  // namespace

std::size_t StateGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.size();
  return n;
}

StateGraph build_graph(const RobotState& start, const Scenario& scenario,
                       const DensityField& prior,
                       const CollisionMap& collisions,
                       ViewEvaluator& evaluator) {
  const RobotConfig& cfg = scenario.robot_config;
  const HeightMap& map = scenario.height_map;
  if (start.t != 0 || !map.contains(start.x, start.y) ||
      !is_env_free(start.x, start.y, cfg, map) ||
      collisions.blocked(start.x, start.y, 0)) {
    throw PlanningError("start " + describe(start) + " is in collision");
  }

  StateGraph g;
  g.horizon = scenario.horizon;
  g.nodes.push_back(start);
  g.layer_begin = {0, 1};
  g.root_reward = marginal_view_reward(prior, 0, evaluator.evaluate(start));

  std::vector<double> gains;  // marginal view reward of each node's view
  gains.push_back(g.root_reward);

  for (int t = 0; t < scenario.horizon; ++t) {
    const int begin = g.layer_begin[t];
    const int end = g.layer_begin[t + 1];

    std::vector<RobotState> next;
    for (int n = begin; n < end; ++n) {
      for (const RobotState& s : neighbors(g.nodes[n], cfg, map)) {
        if (!collisions.blocked(s.x, s.y, s.t)) next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    const int next_begin = static_cast<int>(g.nodes.size());
    for (const RobotState& s : next) {
      g.nodes.push_back(s);
      gains.push_back(marginal_view_reward(prior, s.t, evaluator.evaluate(s)));
    }
    g.layer_begin.push_back(static_cast<int>(g.nodes.size()));

    g.edges.resize(g.nodes.size());
    for (int n = begin; n < end; ++n) {
      const RobotState& from = g.nodes[n];
      for (const RobotState& s : neighbors(from, cfg, map)) {
        const auto it = std::lower_bound(next.begin(), next.end(), s);
        if (it == next.end() || *it != s) continue;  // pruned by collisions
        const int target = next_begin + static_cast<int>(it - next.begin());
        g.edges[n].push_back(
            {target, gains[target] +
                         stationary_reward(from, s, cfg.stationary_bonus)});
      }
    }
  }
  g.edges.resize(g.nodes.size());
  return g;
}

ValueTable value_iteration(const StateGraph& graph) {
  const std::size_t n = graph.size();
  ValueTable table;
  table.value.assign(n, kNegInf);
  table.best.assign(n, -1);

  for (std::size_t k = n; k-- > 0;) {
    if (graph.nodes[k].t == graph.horizon) {
      table.value[k] = 0.0;
      continue;
    }
    double best_value = kNegInf;
    int best = -1;
    for (const Edge& e : graph.edges[k]) {
      assert(static_cast<std::size_t>(e.target) > k);
      const double v = table.value[e.target];
      if (v == kNegInf) continue;
      const double candidate = e.reward + v;
      if (best == -1 || candidate > best_value) {
        best_value = candidate;
        best = e.target;
      }
    }
    table.value[k] = best_value;
    table.best[k] = best;
  }
  return table;
}

ExtractedPlan extract_trajectory(const StateGraph& graph,
                                 const ValueTable& table) {
  if (graph.nodes.empty() || table.value.front() == kNegInf) {
    throw PlanningError("no feasible trajectory reaches the horizon");
  }
  ExtractedPlan plan;
  int node = 0;
  plan.trajectory.push_back(graph.nodes[0]);
  while (graph.nodes[node].t < graph.horizon) {
    node = table.best[node];
    plan.trajectory.push_back(graph.nodes[node]);
    plan.controls.push_back(graph.nodes[node]);
  }
  return plan;
}

}  // namespace viewplan
