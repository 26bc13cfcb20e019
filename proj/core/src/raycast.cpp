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

// Reference visibility by brute-force ray casting. Shares only the pixel
// sampling convention with the rasterizer: obstacles are intersected as
// solid boxes with the slab method and actor faces as bounded planes.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "viewplan/raster.hpp"

namespace viewplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Box {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;
};

// Nearest visible surface of a solid box along origin + s * dir, s >= near.
// When the entry point is in front of the near plane the exit face is seen.
std::optional<double> hit_box(const Box& box, const Eigen::Vector3d& origin,
                              const Eigen::Vector3d& dir) {
  double enter = -kInf;
  double leave = kInf;
  for (int axis = 0; axis < 3; ++axis) {
    if (dir[axis] == 0.0) {
      if (origin[axis] < box.lo[axis] || origin[axis] > box.hi[axis]) {
        return std::nullopt;
      }
      continue;
    }
    double s0 = (box.lo[axis] - origin[axis]) / dir[axis];
    double s1 = (box.hi[axis] - origin[axis]) / dir[axis];
    if (s0 > s1) std::swap(s0, s1);
    enter = std::max(enter, s0);
    leave = std::min(leave, s1);
  }
  if (enter > leave) return std::nullopt;
  if (enter >= kNearPlane) return enter;
  if (leave >= kNearPlane) return leave;
  return std::nullopt;
}

struct Panel {
  Eigen::Vector3d corner;  // bottom-left
  Eigen::Vector3d along;   // bottom edge
  double height;
  Eigen::Vector3d normal;
  std::int32_t code;
};

std::optional<double> hit_panel(const Panel& p, const Eigen::Vector3d& origin,
                                const Eigen::Vector3d& dir) {
  const double facing = p.normal.dot(dir);
  if (facing >= 0.0) return std::nullopt;  // seen from behind
  const double s = p.normal.dot(p.corner - origin) / facing;
  if (!(s >= kNearPlane)) return std::nullopt;
  const Eigen::Vector3d hit = origin + s * dir - p.corner;
  const double u = hit.dot(p.along) / p.along.squaredNorm();
  const double v = hit.z() / p.height;
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return std::nullopt;
  return s;
}

}  // namespace

PixelTally raycast_reference(const CameraPose& pose,
                             const CameraIntrinsics& intrinsics,
                             const HeightMap& map,
                             std::span<const ActorInstance> actors,
                             RenderScale scale) {
  const CameraFrame frame = make_camera_frame(pose, intrinsics, scale);

  std::vector<Box> boxes;
  for (int y = 0; y < map.rows; ++y) {
    for (int x = 0; x < map.cols; ++x) {
      const double h = map.at(x, y);
      if (h <= 0.0) continue;
      boxes.push_back({{x * map.cell_size, y * map.cell_size, 0.0},
                       {(x + 1) * map.cell_size, (y + 1) * map.cell_size, h}});
    }
  }

  std::vector<FaceId> faces;
  std::vector<Panel> panels;
  for (const ActorInstance& a : actors) {
    for (int k = 0; k < a.model.num_side_faces; ++k) {
      const FaceQuad q = actor_face(a, k);
      panels.push_back({q.corners[0], q.corners[1] - q.corners[0],
                        a.model.height, q.normal,
                        static_cast<std::int32_t>(faces.size())});
      faces.push_back({a.actor_id, k});
    }
  }

  std::vector<std::int64_t> counts(faces.size(), 0);
  PixelTally out;
  for (int j = 0; j < frame.height; ++j) {
    for (int i = 0; i < frame.width; ++i) {
      const Eigen::Vector3d dir = frame.pixel_ray(i, j);
      double nearest = kInf;
      std::int32_t owner = RenderedView::kBackground;
      for (const Box& b : boxes) {
        const auto s = hit_box(b, frame.origin, dir);
        if (s && *s < nearest) {
          nearest = *s;
          owner = RenderedView::kBackground;
        }
      }
      for (const Panel& p : panels) {
        const auto s = hit_panel(p, frame.origin, dir);
        if (s && *s < nearest) {
          nearest = *s;
          owner = p.code;
        }
      }
      if (owner == RenderedView::kBackground) {
        ++out.background;
      } else {
        ++counts[owner];
      }
    }
  }
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0) out.faces[faces[c]] = counts[c];
  }
  return out;
}

}  // namespace viewplan
