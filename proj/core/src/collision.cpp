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

#include "viewplan/collision.hpp"

#include <map>
#include <set>
#include <tuple>

namespace viewplan {

CollisionMap::CollisionMap(int cols, int rows, int horizon)
    : cols_(cols),
      rows_(rows),
      horizon_(horizon),
      cells_(static_cast<std::size_t>(cols) * rows * (horizon + 1), 0) {}

void CollisionMap::block(int x, int y, int t) {
  if (x < 0 || y < 0 || x >= cols_ || y >= rows_ || t < 0 || t > horizon_) {
    return;
  }
  auto& cell = cells_[(static_cast<std::size_t>(t) * rows_ + y) * cols_ + x];
  if (!cell) {
    cell = 1;
    ++occupied_;
  }
}

void CollisionMap::add(const Trajectory& trajectory) {
  for (const RobotState& s : trajectory) block(s.x, s.y, s.t);
}

bool CollisionMap::blocked(int x, int y, int t) const {
  if (x < 0 || y < 0 || x >= cols_ || y >= rows_ || t < 0 || t > horizon_) {
    return false;
  }
  return cells_[(static_cast<std::size_t>(t) * rows_ + y) * cols_ + x] != 0;
}

CollisionReport collision_report(std::span<const Trajectory> trajectories) {
  std::map<std::tuple<int, int, int>, std::vector<int>> occupancy;
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    for (const RobotState& s : trajectories[i]) {
      auto& robots = occupancy[{s.t, s.x, s.y}];
      if (robots.empty() || robots.back() != static_cast<int>(i)) {
        robots.push_back(static_cast<int>(i));
      }
    }
  }
  CollisionReport report;
  std::set<int> involved;
  for (const auto& [key, robots] : occupancy) {
    if (robots.size() < 2) continue;
    const auto& [t, x, y] = key;
    report.events.push_back({robots, x, y, t});
    involved.insert(robots.begin(), robots.end());
  }
  report.collision_count = static_cast<int>(involved.size());
  return report;
}

}  // namespace viewplan
