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

// World data model: the 2.5D environment, actors, robots and their cameras,
// plus the discrete motion model shared by every planner.

#ifndef VIEWPLAN_SCENE_HPP_
#define VIEWPLAN_SCENE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "viewplan/errors.hpp"

namespace viewplan {

/// Gridded environment; every cell stores one obstacle height. Cell (x, y)
/// covers [x, x+1) * cell_size along world x and [y, y+1) * cell_size along y.
struct HeightMap {
  int cols = 1;
  int rows = 1;
  double cell_size = 1.0;
  std::vector<double> heights{0.0};  // row-major, heights[y * cols + x]

  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < cols && y < rows;
  }
  double at(int x, int y) const {
    return heights[static_cast<std::size_t>(y) * cols + x];
  }
  double& at(int x, int y) {
    return heights[static_cast<std::size_t>(y) * cols + x];
  }
  Eigen::Vector2d cell_center(int x, int y) const {
    return {(x + 0.5) * cell_size, (y + 0.5) * cell_size};
  }

  void validate() const;

  bool operator==(const HeightMap&) const = default;
};

struct CameraIntrinsics {
  double focal_px = 500.0;
  int width_px = 800;
  int height_px = 600;

  void validate() const;
  bool operator==(const CameraIntrinsics&) const = default;
};

/// How the per-step translation bound is measured on the grid.
enum class StepMetric { kChebyshev, kEuclidean };

struct RobotConfig {
  double altitude = 5.0;               // m
  double camera_tilt_deg = 10.0;       // below the horizon
  int max_step = 1;                    // cells per timestep
  int max_turn = 1;                    // heading increments per timestep
  int num_headings = 8;
  StepMetric step_metric = StepMetric::kChebyshev;
  CameraIntrinsics intrinsics;
  double stationary_bonus = 0.01;

  double camera_tilt() const;  // rad
  void validate() const;
  bool operator==(const RobotConfig&) const = default;
};

/// Discrete planar pose plus time.
struct RobotState {
  int x = 0;
  int y = 0;
  int theta = 0;
  int t = 0;

  // Ordering used for deterministic tie-breaking: (x, y, theta) then t.
  auto operator<=>(const RobotState&) const = default;

  bool same_pose(const RobotState& o) const {
    return x == o.x && y == o.y && theta == o.theta;
  }
};

/// A trajectory holds one state per timestep 0..T.
using Trajectory = std::vector<RobotState>;

/// Polygonal cylinder. Only the side faces are modelled; the circumscribed
/// circle has the given radius.
struct ActorModel {
  double radius = 0.3;
  double height = 1.8;
  int num_side_faces = 8;

  double face_width() const;
  double face_area() const;
  void validate() const;
  bool operator==(const ActorModel&) const = default;
};

struct ActorPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // base center, m
  double yaw = 0.0;

  bool operator==(const ActorPose& o) const {
    return position == o.position && yaw == o.yaw;
  }
};

struct ActorTrack {
  int id = 0;
  ActorModel model;
  std::vector<ActorPose> poses;  // one per timestep 0..T

  bool operator==(const ActorTrack&) const = default;
};

struct CameraPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;    // rad, counter-clockwise from +x
  double pitch = 0.0;  // rad, positive looks up
};

/// Actors are kept sorted by id; that order also fixes the global face layout.
struct Scenario {
  HeightMap height_map;
  std::vector<ActorTrack> actors;
  // start_sets[0] is the primary configuration; further entries are the
  // alternative start configurations used as trials.
  std::vector<std::vector<RobotState>> start_sets{{}};
  RobotConfig robot_config;
  int horizon = 0;
  double formation_radius = 5.0;
  int formation_robots = 0;  // 0: same as the number of robot starts

  const std::vector<RobotState>& robot_starts() const {
    return start_sets.front();
  }
  int num_robots() const { return static_cast<int>(robot_starts().size()); }
  int formation_robot_count() const {
    return formation_robots > 0 ? formation_robots : num_robots();
  }

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

/// Maps (actor index, face index) to a dense global face index.
class FaceLayout {
 public:
  FaceLayout() = default;
  explicit FaceLayout(const std::vector<ActorTrack>& actors);

  int num_faces() const { return static_cast<int>(actor_of_.size()); }
  int num_actors() const { return static_cast<int>(offsets_.size()); }
  int global(int actor_index, int face_index) const {
    return offsets_[actor_index] + face_index;
  }
  int actor_of(int global_face) const { return actor_of_[global_face]; }
  int face_of(int global_face) const {
    return global_face - offsets_[actor_of_[global_face]];
  }
  double area(int global_face) const { return areas_[global_face]; }

 private:
  std::vector<int> offsets_;
  std::vector<int> actor_of_;
  std::vector<double> areas_;
};

/// Camera placement for a grid state: cell center at the configured altitude.
CameraPose camera_pose(const RobotState& state, const RobotConfig& config,
                       const HeightMap& map);

/// True iff the cell is strictly lower than the flight altitude.
bool is_env_free(int x, int y, const RobotConfig& config, const HeightMap& map);

/// Successors at t+1 under the translation and rotation bounds, sorted by
/// (x, y, theta). Cells in collision with the environment are dropped.
std::vector<RobotState> neighbors(const RobotState& state,
                                  const RobotConfig& config,
                                  const HeightMap& map);

/// True iff `to` is one of neighbors(from).
bool is_transition(const RobotState& from, const RobotState& to,
                   const RobotConfig& config, const HeightMap& map);

/// Shortest circular distance between two heading indices.
int heading_distance(int a, int b, int num_headings);

}  // namespace viewplan

#endif  // VIEWPLAN_SCENE_HPP_
