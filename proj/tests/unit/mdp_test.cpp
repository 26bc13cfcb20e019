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
#include <functional>
#include <limits>
#include <set>

#include "random_scenes.hpp"
#include "viewplan/mdp.hpp"

namespace viewplan {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Scenario open_scenario(int cols, int rows, int horizon, int turn) {
  Scenario sc;
  sc.height_map.cols = cols;
  sc.height_map.rows = rows;
  sc.height_map.heights.assign(static_cast<std::size_t>(cols) * rows, 0.0);
  sc.horizon = horizon;
  sc.robot_config.num_headings = 4;
  sc.robot_config.max_step = 1;
  sc.robot_config.max_turn = turn;
  sc.robot_config.intrinsics = {20, 16, 12};
  sc.start_sets = {{{cols / 2, rows / 2, 0, 0}}};
  sc.validate();
  return sc;
}

// Breadth-first reachable set computed straight from the motion rules.
std::vector<std::set<RobotState>> reachable_layers(const Scenario& sc,
                                                   const RobotState& start,
                                                   const CollisionMap& blocked) {
  const RobotConfig& cfg = sc.robot_config;
  std::vector<std::set<RobotState>> layers(sc.horizon + 1);
  layers[0].insert(start);
  for (int t = 0; t < sc.horizon; ++t) {
    for (const RobotState& s : layers[t]) {
      for (int x = 0; x < sc.height_map.cols; ++x) {
        for (int y = 0; y < sc.height_map.rows; ++y) {
          for (int h = 0; h < cfg.num_headings; ++h) {
            const RobotState n{x, y, h, t + 1};
            if (std::max(std::abs(x - s.x), std::abs(y - s.y)) > cfg.max_step)
              continue;
            const int dh = std::abs(h - s.theta);
            if (std::min(dh, cfg.num_headings - dh) > cfg.max_turn) continue;
            if (sc.height_map.at(x, y) >= cfg.altitude) continue;
            if (blocked.blocked(x, y, t + 1)) continue;
            layers[t + 1].insert(n);
          }
        }
      }
    }
  }
  return layers;
}

TEST(BuildGraph, ZeroHorizonIsJustTheStart) {
  const Scenario sc = open_scenario(5, 5, 0, 1);
  ViewEvaluator ev(sc, RenderScale(1.0));
  const StateGraph g =
      build_graph(sc.robot_starts()[0], sc, DensityField(0, 0), {}, ev);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  const ValueTable vt = value_iteration(g);
  EXPECT_EQ(vt.value[0], 0.0);
  const ExtractedPlan plan = extract_trajectory(g, vt);
  EXPECT_TRUE(plan.controls.empty());
  EXPECT_EQ(plan.trajectory, Trajectory{sc.robot_starts()[0]});
}

TEST(BuildGraph, LayersMatchIndependentEnumeration) {
  const Scenario sc = open_scenario(5, 5, 2, 2);
  ViewEvaluator ev(sc, RenderScale(1.0));
  const RobotState start = sc.robot_starts()[0];
  const StateGraph g = build_graph(start, sc, DensityField(2, 0), {}, ev);
  const auto layers = reachable_layers(sc, start, {});
  std::size_t total = 0;
  for (int t = 0; t <= 2; ++t) {
    EXPECT_EQ(g.layer_size(t), static_cast<int>(layers[t].size())) << t;
    total += layers[t].size();
  }
  EXPECT_EQ(g.size(), total);
  EXPECT_EQ(g.layer_size(1), 36);
  EXPECT_EQ(g.edges[0].size(), 36u);
}

TEST(BuildGraph, GraphIsLayeredDagOfLegalTransitions) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Scenario sc = testing::random_planning_scenario(seed, 1, 3);
    ViewEvaluator ev(sc, RenderScale(0.5));
    const RobotState start = sc.robot_starts()[0];
    const StateGraph g =
        build_graph(start, sc, DensityField(sc.horizon, 6), {}, ev);
    const auto layers = reachable_layers(sc, start, {});
    for (int t = 0; t <= sc.horizon; ++t) {
      std::set<RobotState> got(g.nodes.begin() + g.layer_begin[t],
                               g.nodes.begin() + g.layer_begin[t + 1]);
      EXPECT_EQ(got, layers[t]) << "seed " << seed << " t " << t;
    }
    for (std::size_t n = 0; n < g.size(); ++n) {
      for (const Edge& e : g.edges[n]) {
        EXPECT_TRUE(is_transition(g.nodes[n], g.nodes[e.target],
                                  sc.robot_config, sc.height_map));
        EXPECT_GE(e.reward, 0.0);
      }
    }
  }
}

TEST(BuildGraph, BlockedCellIsAbsentAtThatTime) {
  const Scenario sc = open_scenario(5, 5, 2, 1);
  ViewEvaluator ev(sc, RenderScale(1.0));
  CollisionMap blocked(5, 5, 2);
  blocked.block(3, 2, 1);
  const StateGraph g =
      build_graph(sc.robot_starts()[0], sc, DensityField(2, 0), blocked, ev);
  bool present_later = false;
  for (const RobotState& s : g.nodes) {
    EXPECT_FALSE(s.x == 3 && s.y == 2 && s.t == 1);
    present_later = present_later || (s.x == 3 && s.y == 2 && s.t == 2);
  }
  EXPECT_TRUE(present_later);
  EXPECT_EQ(g.layer_size(1), 24);

  CollisionMap at_start(5, 5, 2);
  at_start.block(2, 2, 0);
  EXPECT_THROW(build_graph(sc.robot_starts()[0], sc, DensityField(2, 0),
                           at_start, ev),
               PlanningError);
}

TEST(BuildGraph, LayerSizeBound) {
  const Scenario sc = testing::random_planning_scenario(9, 1, 4, 1, 6, 6);
  ViewEvaluator ev(sc, RenderScale(0.5));
  const StateGraph g =
      build_graph(sc.robot_starts()[0], sc, DensityField(4, 6), {}, ev);
  for (int t = 0; t <= sc.horizon; ++t) {
    EXPECT_LE(g.layer_size(t), 6 * 6 * 4);
  }
}

// Random layered DAG with dyadic rewards (exact in binary floating point) and
// some dead ends.
StateGraph random_graph(testing::Rng& rng) {
  StateGraph g;
  g.horizon = rng.integer(1, 5);
  g.layer_begin = {0};
  for (int t = 0; t <= g.horizon; ++t) {
    const int width = t == 0 ? 1 : rng.integer(1, 5);
    for (int k = 0; k < width; ++k) g.nodes.push_back({k, 0, 0, t});
    g.layer_begin.push_back(static_cast<int>(g.nodes.size()));
  }
  g.edges.resize(g.nodes.size());
  for (int t = 0; t < g.horizon; ++t) {
    for (int n = g.layer_begin[t]; n < g.layer_begin[t + 1]; ++n) {
      for (int m = g.layer_begin[t + 1]; m < g.layer_begin[t + 2]; ++m) {
        if (rng.chance(0.6)) {
          g.edges[n].push_back({m, rng.integer(0, 64) / 8.0});
        }
      }
    }
  }
  return g;
}

std::uint64_t count_paths(const StateGraph& g, int node) {
  if (g.nodes[node].t == g.horizon) return 1;
  std::uint64_t n = 0;
  for (const Edge& e : g.edges[node]) n += count_paths(g, e.target);
  return n;
}

double brute_force_best(const StateGraph& g, int node) {
  if (g.nodes[node].t == g.horizon) return 0.0;
  double best = kNegInf;
  for (const Edge& e : g.edges[node]) {
    best = std::max(best, e.reward + brute_force_best(g, e.target));
  }
  return best;
}

TEST(ValueIteration, EqualsBruteForceOnRandomGraphs) {
  testing::Rng rng(2024);
  int checked = 0;
  int infeasible = 0;
  while (checked < 200) {
    const StateGraph g = random_graph(rng);
    if (count_paths(g, 0) > 10000) continue;
    ++checked;
    const ValueTable vt = value_iteration(g);
    const double want = brute_force_best(g, 0);
    EXPECT_EQ(vt.value[0], want);
    if (want == kNegInf) {
      ++infeasible;
      EXPECT_THROW(extract_trajectory(g, vt), PlanningError);
      continue;
    }
    const ExtractedPlan plan = extract_trajectory(g, vt);
    ASSERT_EQ(plan.trajectory.size(), static_cast<std::size_t>(g.horizon) + 1);
    double sum = 0.0;
    int node = 0;
    for (std::size_t k = 1; k < plan.trajectory.size(); ++k) {
      bool found = false;
      for (const Edge& e : g.edges[node]) {
        if (g.nodes[e.target] == plan.trajectory[k]) {
          sum += e.reward;
          node = e.target;
          found = true;
          break;
        }
      }
      ASSERT_TRUE(found);
    }
    EXPECT_EQ(sum, vt.value[0]);
  }
  EXPECT_GT(infeasible, 0);
}

TEST(ValueIteration, HandBuiltChain) {
  StateGraph g;
  g.horizon = 3;
  g.nodes = {{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 1},
             {0, 0, 0, 2}, {0, 0, 0, 3}};
  g.layer_begin = {0, 1, 3, 4, 5};
  g.edges = {{{1, 1.0}, {2, 5.0}}, {{3, 1.0}}, {}, {{4, 1.0}}, {}};
  const ValueTable vt = value_iteration(g);
  EXPECT_EQ(vt.value[2], kNegInf);  // dead end before the horizon
  EXPECT_EQ(vt.value[0], 3.0);
  EXPECT_EQ(vt.best[0], 1);
}

TEST(ValueIteration, TiesPickLowestSuccessor) {
  StateGraph g;
  g.horizon = 1;
  g.nodes = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}};
  g.layer_begin = {0, 1, 3};
  g.edges = {{{1, 2.0}, {2, 2.0}}, {}, {}};
  EXPECT_EQ(value_iteration(g).best[0], 1);
}

TEST(ValueIteration, StationaryBonusWinsWhenNothingIsVisible) {
  Scenario sc = open_scenario(5, 5, 3, 1);
  sc.robot_config.stationary_bonus = 0.5;
  ViewEvaluator ev(sc, RenderScale(1.0));
  const RobotState start = sc.robot_starts()[0];
  const StateGraph g = build_graph(start, sc, DensityField(3, 0), {}, ev);
  const ValueTable vt = value_iteration(g);
  EXPECT_DOUBLE_EQ(vt.value[0], 1.5);
  for (const RobotState& s : extract_trajectory(g, vt).trajectory) {
    EXPECT_TRUE(s.same_pose(start));
  }
}

TEST(ExtractTrajectory, RewardRecomputesFromScratch) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scenario sc = testing::random_planning_scenario(seed, 1, 4, 2);
    ViewEvaluator ev(sc, RenderScale(0.5));
    const int faces = ev.layout().num_faces();
    DensityField prior(sc.horizon, faces);
    // A prior robot parked at its start.
    const RobotState other = sc.robot_starts()[0];
    for (int t = 0; t <= sc.horizon; ++t) {
      prior.add(t, ev.evaluate(RobotState{other.x, other.y, other.theta, t}));
    }
    const RobotState start{other.x, other.y, (other.theta + 2) % 4, 0};
    const StateGraph g = build_graph(start, sc, prior, {}, ev);
    const ValueTable vt = value_iteration(g);
    const ExtractedPlan plan = extract_trajectory(g, vt);

    TrajectoryDensities own;
    double stationary = 0.0;
    for (std::size_t t = 0; t < plan.trajectory.size(); ++t) {
      own.push_back(ev.evaluate(plan.trajectory[t]));
      if (t > 0) {
        stationary += stationary_reward(plan.trajectory[t - 1],
                                        plan.trajectory[t], 0.01);
      }
    }
    const double recomputed = marginal_view_reward(prior, own) + stationary;
    EXPECT_NEAR(recomputed, vt.value[0] + g.root_reward,
                1e-9 * std::max(1.0, recomputed))
        << "seed " << seed;
    for (std::size_t k = 0; k < plan.controls.size(); ++k) {
      EXPECT_EQ(plan.controls[k], plan.trajectory[k + 1]);
    }
  }
}

TEST(BuildGraph, DeterministicAcrossRuns) {
  const Scenario sc = testing::random_planning_scenario(3, 1, 3);
  ViewEvaluator a(sc, RenderScale(0.5));
  ViewEvaluator b(sc, RenderScale(0.5));
  const StateGraph ga =
      build_graph(sc.robot_starts()[0], sc, DensityField(3, 6), {}, a);
  const StateGraph gb =
      build_graph(sc.robot_starts()[0], sc, DensityField(3, 6), {}, b);
  EXPECT_EQ(ga.nodes, gb.nodes);
  const ValueTable va = value_iteration(ga);
  const ValueTable vb = value_iteration(gb);
  EXPECT_EQ(va.value, vb.value);
  EXPECT_EQ(va.best, vb.best);
}

}  // namespace
}  // namespace viewplan
