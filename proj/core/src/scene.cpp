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

#include "viewplan/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace viewplan {
namespace {

std::string describe(const RobotState& s) {
  std::ostringstream os;
  os << "(" << s.x << ", " << s.y << ", " << s.theta << ")";
  return os.str();
}

}  // namespace

void HeightMap::validate() const {
  if (cols < 1 || rows < 1) {
    throw ValidationError("height_map: cols and rows must be >= 1");
  }
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw ValidationError("height_map: cell_size must be > 0");
  }
  if (heights.size() != static_cast<std::size_t>(cols) * rows) {
    throw ValidationError("height_map: expected cols*rows heights");
  }
  for (double h : heights) {
    if (!std::isfinite(h) || h < 0.0) {
      throw ValidationError("height_map: heights must be finite and >= 0");
    }
  }
}

void CameraIntrinsics::validate() const {
  if (!(focal_px > 0.0) || !std::isfinite(focal_px)) {
    throw ValidationError("intrinsics: focal_px must be > 0");
  }
  if (width_px < 1 || height_px < 1) {
    throw ValidationError("intrinsics: image size must be positive");
  }
}

double RobotConfig::camera_tilt() const {
  return camera_tilt_deg * std::numbers::pi / 180.0;
}

void RobotConfig::validate() const {
  if (!(altitude > 0.0) || !std::isfinite(altitude)) {
    throw ValidationError("robots: altitude must be > 0");
  }
  if (!std::isfinite(camera_tilt_deg) || std::abs(camera_tilt_deg) >= 90.0) {
    throw ValidationError("robots: camera_tilt_deg must be in (-90, 90)");
  }
  if (num_headings < 4) {
    throw ValidationError("robots: num_headings must be >= 4");
  }
  if (max_step < 0) {
    throw ValidationError("robots: max_step must be >= 0");
  }
  if (max_turn < 0 || max_turn > num_headings / 2) {
    throw ValidationError("robots: max_turn must be in [0, num_headings/2]");
  }
  if (!(stationary_bonus >= 0.0) || !std::isfinite(stationary_bonus)) {
    throw ValidationError("robots: stationary_bonus must be >= 0");
  }
  intrinsics.validate();
}

double ActorModel::face_width() const {
  return 2.0 * radius * std::sin(std::numbers::pi / num_side_faces);
}

double ActorModel::face_area() const { return face_width() * height; }

void ActorModel::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ValidationError("actor: radius must be > 0");
  }
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw ValidationError("actor: height must be > 0");
  }
  if (num_side_faces < 3) {
    throw ValidationError("actor: num_side_faces must be >= 3");
  }
}

void Scenario::validate() const {
  height_map.validate();
  robot_config.validate();
  if (horizon < 0) {
    throw ValidationError("horizon must be >= 0");
  }
  if (!(formation_radius > 0.0) || !std::isfinite(formation_radius)) {
    throw ValidationError("formation_radius must be > 0");
  }
  if (formation_robots < 0) {
    throw ValidationError("formation_robots must be >= 0");
  }

  for (std::size_t a = 0; a < actors.size(); ++a) {
    const ActorTrack& track = actors[a];
    if (a > 0 && actors[a - 1].id >= track.id) {
      throw ValidationError("actors must have unique ids in ascending order");
    }
    track.model.validate();
    if (track.poses.size() != static_cast<std::size_t>(horizon) + 1) {
      throw ValidationError("actor " + std::to_string(track.id) +
                            ": expected horizon+1 poses");
    }
    for (const ActorPose& p : track.poses) {
      if (!p.position.allFinite() || !std::isfinite(p.yaw)) {
        throw ValidationError("actor " + std::to_string(track.id) +
                              ": non-finite pose");
      }
    }
  }

  if (start_sets.empty()) {
    throw ValidationError("robots: at least one start configuration required");
  }
  for (const auto& starts : start_sets) {
    if (starts.size() != start_sets.front().size()) {
      throw ValidationError(
          "robots: every start configuration needs the same robot count");
    }
    std::set<std::pair<int, int>> cells;
    for (const RobotState& s : starts) {
      if (!height_map.contains(s.x, s.y)) {
        throw ValidationError("start " + describe(s) + " outside the grid");
      }
      if (s.theta < 0 || s.theta >= robot_config.num_headings) {
        throw ValidationError("start " + describe(s) + " has invalid heading");
      }
      if (s.t != 0) {
        throw ValidationError("start " + describe(s) + " must have t = 0");
      }
      if (!is_env_free(s.x, s.y, robot_config, height_map)) {
        throw ValidationError("start in collision at " + describe(s));
      }
      if (!cells.emplace(s.x, s.y).second) {
        throw ValidationError("starts share a cell at " + describe(s));
      }
    }
  }
}

FaceLayout::FaceLayout(const std::vector<ActorTrack>& actors) {
  offsets_.reserve(actors.size());
  for (std::size_t a = 0; a < actors.size(); ++a) {
    offsets_.push_back(static_cast<int>(actor_of_.size()));
    const double area = actors[a].model.face_area();
    for (int k = 0; k < actors[a].model.num_side_faces; ++k) {
      actor_of_.push_back(static_cast<int>(a));
      areas_.push_back(area);
    }
  }
}

CameraPose camera_pose(const RobotState& state, const RobotConfig& config,
                       const HeightMap& map) {
  const Eigen::Vector2d c = map.cell_center(state.x, state.y);
  CameraPose pose;
  pose.position = {c.x(), c.y(), config.altitude};
  pose.yaw = state.theta * 2.0 * std::numbers::pi / config.num_headings;
  pose.pitch = -config.camera_tilt();
  return pose;
}

bool is_env_free(int x, int y, const RobotConfig& config, const HeightMap& map) {
  return map.at(x, y) < config.altitude;
}

int heading_distance(int a, int b, int num_headings) {
  const int d = ((a - b) % num_headings + num_headings) % num_headings;
  return std::min(d, num_headings - d);
}

std::vector<RobotState> neighbors(const RobotState& state,
                                  const RobotConfig& config,
                                  const HeightMap& map) {
  std::vector<int> headings;
  for (int h = 0; h < config.num_headings; ++h) {
    if (heading_distance(h, state.theta, config.num_headings) <=
        config.max_turn) {
      headings.push_back(h);
    }
  }

  std::vector<RobotState> out;
  const int r = config.max_step;
  for (int x = state.x - r; x <= state.x + r; ++x) {
    for (int y = state.y - r; y <= state.y + r; ++y) {
      if (!map.contains(x, y)) continue;
      if (config.step_metric == StepMetric::kEuclidean) {
        const int dx = x - state.x;
        const int dy = y - state.y;
        if (dx * dx + dy * dy > r * r) continue;
      }
      if (!is_env_free(x, y, config, map)) continue;
      for (int h : headings) out.push_back({x, y, h, state.t + 1});
    }
  }
  return out;
}

bool is_transition(const RobotState& from, const RobotState& to,
                   const RobotConfig& config, const HeightMap& map) {
  if (to.t != from.t + 1 || !map.contains(to.x, to.y)) return false;
  if (to.theta < 0 || to.theta >= config.num_headings) return false;
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  const int r = config.max_step;
  const bool in_reach = config.step_metric == StepMetric::kEuclidean
                            ? dx * dx + dy * dy <= r * r
                            : std::max(std::abs(dx), std::abs(dy)) <= r;
  return in_reach &&
         heading_distance(to.theta, from.theta, config.num_headings) <=
             config.max_turn &&
         is_env_free(to.x, to.y, config, map);
}

}  // namespace viewplan
