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

// Inter-robot collisions: two robots collide when they occupy the same cell
// at the same timestep. Swaps across a shared edge are not conflicts.

#ifndef VIEWPLAN_COLLISION_HPP_
#define VIEWPLAN_COLLISION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "viewplan/scene.hpp"

namespace viewplan {

/// (cell, timestep) pairs occupied by robots planned so far.
class CollisionMap {
 public:
  CollisionMap() = default;
  CollisionMap(int cols, int rows, int horizon);

  void add(const Trajectory& trajectory);
  void block(int x, int y, int t);
  bool blocked(int x, int y, int t) const;
  std::size_t size() const { return occupied_; }

 private:
  int cols_ = 0;
  int rows_ = 0;
  int horizon_ = -1;
  std::size_t occupied_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct CollisionEvent {
  std::vector<int> robots;  // ascending robot indices sharing the cell
  int x = 0;
  int y = 0;
  int t = 0;
};

struct CollisionReport {
  int collision_count = 0;  // robots involved in at least one event
  std::vector<CollisionEvent> events;
};

CollisionReport collision_report(std::span<const Trajectory> trajectories);

}  // namespace viewplan

#endif  // VIEWPLAN_COLLISION_HPP_
