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

#include "viewplan/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace viewplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ScreenVertex {
  double x;
  double y;
  double inv_depth;
};

// Signed doubled area of (a, b, p); positive when p is left of a->b in a
// y-down image.
inline double edge(const ScreenVertex& a, const ScreenVertex& b, double px,
                   double py) {
  return (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
}

// Top-left fill rule: of two triangles sharing an edge, exactly one owns
// samples lying on it (they traverse the edge in opposite directions).
inline bool owns_edge(const ScreenVertex& a, const ScreenVertex& b) {
  const double dy = b.y - a.y;
  const double dx = b.x - a.x;
  return dy < 0.0 || (dy == 0.0 && dx > 0.0);
}

inline bool covers(double e, bool owned) { return e > 0.0 || (e == 0.0 && owned); }

class Rasterizer {
 public:
  explicit Rasterizer(const CameraFrame& frame, RenderedView& view)
      : frame_(frame), view_(view) {}

  // Vertices in camera space (right, down, forward).
  void draw_triangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const Eigen::Vector3d& c, std::int32_t id) {
    if (a.z() < kNearPlane && b.z() < kNearPlane && c.z() < kNearPlane) return;

    std::array<Eigen::Vector3d, 4> poly;
    int n = 0;
    const std::array<const Eigen::Vector3d*, 3> in{&a, &b, &c};
    for (int k = 0; k < 3; ++k) {
      const Eigen::Vector3d& p = *in[k];
      const Eigen::Vector3d& q = *in[(k + 1) % 3];
      const bool p_in = p.z() >= kNearPlane;
      const bool q_in = q.z() >= kNearPlane;
      if (p_in) poly[n++] = p;
      if (p_in != q_in) {
        const double s = (kNearPlane - p.z()) / (q.z() - p.z());
        Eigen::Vector3d v = p + s * (q - p);
        v.z() = kNearPlane;
        poly[n++] = v;
      }
    }
    if (n < 3) return;

    std::array<ScreenVertex, 4> screen;
    for (int k = 0; k < n; ++k) {
      const double inv = 1.0 / poly[k].z();
      screen[k] = {frame_.cx + frame_.focal * poly[k].x() * inv,
                   frame_.cy + frame_.focal * poly[k].y() * inv, inv};
    }
    for (int k = 1; k + 1 < n; ++k) {
      fill(screen[0], screen[k], screen[k + 1], id);
    }
  }

 private:
  void fill(ScreenVertex v0, ScreenVertex v1, ScreenVertex v2,
            std::int32_t id) {
    double area = edge(v0, v1, v2.x, v2.y);
    if (area == 0.0 || !std::isfinite(area)) return;
    if (area < 0.0) {
      std::swap(v1, v2);
      area = -area;
    }

    const double min_x = std::min({v0.x, v1.x, v2.x});
    const double max_x = std::max({v0.x, v1.x, v2.x});
    const double min_y = std::min({v0.y, v1.y, v2.y});
    const double max_y = std::max({v0.y, v1.y, v2.y});
    const double lo_i = std::max(0.0, std::ceil(min_x - 0.5));
    const double hi_i = std::min(view_.width - 1.0, std::floor(max_x - 0.5));
    const double lo_j = std::max(0.0, std::ceil(min_y - 0.5));
    const double hi_j = std::min(view_.height - 1.0, std::floor(max_y - 0.5));
    if (lo_i > hi_i || lo_j > hi_j) return;

    const bool own0 = owns_edge(v1, v2);
    const bool own1 = owns_edge(v2, v0);
    const bool own2 = owns_edge(v0, v1);
    const double inv_area = 1.0 / area;

    for (int j = static_cast<int>(lo_j); j <= static_cast<int>(hi_j); ++j) {
      const double py = j + 0.5;
      const std::size_t row = static_cast<std::size_t>(j) * view_.width;
      for (int i = static_cast<int>(lo_i); i <= static_cast<int>(hi_i); ++i) {
        const double px = i + 0.5;
        const double w0 = edge(v1, v2, px, py);
        if (!covers(w0, own0)) continue;
        const double w1 = edge(v2, v0, px, py);
        if (!covers(w1, own1)) continue;
        const double w2 = edge(v0, v1, px, py);
        if (!covers(w2, own2)) continue;

        const double inv_depth =
            (w0 * v0.inv_depth + w1 * v1.inv_depth + w2 * v2.inv_depth) *
            inv_area;
        const double depth = 1.0 / inv_depth;
        double& current = view_.depth_buffer[row + i];
        if (depth < current) {
          current = depth;
          view_.id_buffer[row + i] = id;
        }
      }
    }
  }

  const CameraFrame& frame_;
  RenderedView& view_;
};

void draw_quad(Rasterizer& raster, const std::array<Eigen::Vector3d, 4>& q,
               std::int32_t id) {
  raster.draw_triangle(q[0], q[1], q[2], id);
  raster.draw_triangle(q[0], q[2], q[3], id);
}

void draw_obstacles(const CameraFrame& frame, const HeightMap& map,
                    Rasterizer& raster) {
  for (int y = 0; y < map.rows; ++y) {
    for (int x = 0; x < map.cols; ++x) {
      const double h = map.at(x, y);
      if (h <= 0.0) continue;
      const double x0 = x * map.cell_size;
      const double x1 = (x + 1) * map.cell_size;
      const double y0 = y * map.cell_size;
      const double y1 = (y + 1) * map.cell_size;

      // Corner k: bit 0 -> x1, bit 1 -> y1, bit 2 -> top.
      std::array<Eigen::Vector3d, 8> c;
      bool any_in_front = false;
      for (int k = 0; k < 8; ++k) {
        c[k] = frame.to_camera({(k & 1) ? x1 : x0, (k & 2) ? y1 : y0,
                                (k & 4) ? h : 0.0});
        any_in_front = any_in_front || c[k].z() >= kNearPlane;
      }
      if (!any_in_front) continue;

      constexpr int kFaces[6][4] = {
          {0, 1, 3, 2},  // bottom
          {4, 5, 7, 6},  // top
          {0, 1, 5, 4},  // y0 side
          {2, 3, 7, 6},  // y1 side
          {0, 2, 6, 4},  // x0 side
          {1, 3, 7, 5},  // x1 side
      };
      for (const auto& f : kFaces) {
        draw_quad(raster, {c[f[0]], c[f[1]], c[f[2]], c[f[3]]},
                  RenderedView::kBackground);
      }
    }
  }
}

}  // namespace

std::vector<ActorInstance> actors_at(const std::vector<ActorTrack>& tracks,
                                     int t) {
  std::vector<ActorInstance> out;
  out.reserve(tracks.size());
  for (const ActorTrack& track : tracks) {
    out.push_back({track.id, track.model, track.poses.at(t)});
  }
  return out;
}

RenderScale::RenderScale(double scale) : scale_(scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw std::invalid_argument("render scale must lie in (0, 1]");
  }
}

int RenderScale::pixels(int native) const {
  return std::max(1, static_cast<int>(std::ceil(scale_ * native - 1e-9)));
}

FaceQuad actor_face(const ActorInstance& actor, int face_index) {
  const int n = actor.model.num_side_faces;
  const double step = 2.0 * std::numbers::pi / n;
  const double a0 = actor.pose.yaw + step * face_index;
  const double a1 = actor.pose.yaw + step * (face_index + 1);
  const double am = actor.pose.yaw + step * (face_index + 0.5);
  const Eigen::Vector3d& base = actor.pose.position;
  const double r = actor.model.radius;
  const Eigen::Vector3d up(0.0, 0.0, actor.model.height);

  FaceQuad quad;
  quad.corners[0] = base + Eigen::Vector3d(r * std::cos(a0), r * std::sin(a0), 0.0);
  quad.corners[1] = base + Eigen::Vector3d(r * std::cos(a1), r * std::sin(a1), 0.0);
  quad.corners[2] = quad.corners[1] + up;
  quad.corners[3] = quad.corners[0] + up;
  quad.normal = Eigen::Vector3d(std::cos(am), std::sin(am), 0.0);
  return quad;
}

Eigen::Vector3d CameraFrame::to_camera(const Eigen::Vector3d& world) const {
  const Eigen::Vector3d d = world - origin;
  return {d.dot(right), d.dot(down), d.dot(forward)};
}

Eigen::Vector3d CameraFrame::pixel_ray(int i, int j) const {
  const double u = (i + 0.5 - cx) / focal;
  const double v = (j + 0.5 - cy) / focal;
  return forward + u * right + v * down;
}

CameraFrame make_camera_frame(const CameraPose& pose,
                              const CameraIntrinsics& intrinsics,
                              RenderScale scale) {
  CameraFrame f;
  f.origin = pose.position;
  const double cp = std::cos(pose.pitch);
  const double sp = std::sin(pose.pitch);
  const double cy = std::cos(pose.yaw);
  const double sy = std::sin(pose.yaw);
  f.forward = {cy * cp, sy * cp, sp};
  f.right = {sy, -cy, 0.0};
  // down = -(right x forward)
  f.down = -f.right.cross(f.forward);
  f.width = scale.pixels(intrinsics.width_px);
  f.height = scale.pixels(intrinsics.height_px);
  f.focal = intrinsics.focal_px * scale.value();
  f.cx = 0.5 * f.width;
  f.cy = 0.5 * f.height;
  return f;
}

RenderedView render(const CameraPose& pose, const CameraIntrinsics& intrinsics,
                    const HeightMap& map, std::span<const ActorInstance> actors,
                    RenderScale scale) {
  const CameraFrame frame = make_camera_frame(pose, intrinsics, scale);

  RenderedView view;
  view.width = frame.width;
  view.height = frame.height;
  const std::size_t n = static_cast<std::size_t>(view.width) * view.height;
  view.id_buffer.assign(n, RenderedView::kBackground);
  view.depth_buffer.assign(n, kInf);

  Rasterizer raster(frame, view);
  draw_obstacles(frame, map, raster);

  for (const ActorInstance& actor : actors) {
    for (int k = 0; k < actor.model.num_side_faces; ++k) {
      const auto code = static_cast<std::int32_t>(view.faces.size());
      view.faces.push_back({actor.actor_id, k});
      const FaceQuad quad = actor_face(actor, k);
      if (quad.normal.dot(quad.corners[0] - frame.origin) >= 0.0) continue;
      std::array<Eigen::Vector3d, 4> cam;
      for (int c = 0; c < 4; ++c) cam[c] = frame.to_camera(quad.corners[c]);
      draw_quad(raster, cam, code);
    }
  }
  return view;
}

std::int64_t PixelTally::total() const {
  std::int64_t sum = background;
  for (const auto& [face, count] : faces) sum += count;
  return sum;
}

std::int64_t PixelTally::count(const FaceId& f) const {
  const auto it = faces.find(f);
  return it == faces.end() ? 0 : it->second;
}

PixelTally tally(const RenderedView& view) {
  std::vector<std::int64_t> counts(view.faces.size(), 0);
  PixelTally out;
  for (std::int32_t id : view.id_buffer) {
    if (id == RenderedView::kBackground) {
      ++out.background;
    } else {
      ++counts[id];
    }
  }
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0) out.faces[view.faces[c]] = counts[c];
  }
  return out;
}

std::map<FaceId, double> pixel_densities(const RenderedView& view,
                                         std::span<const ActorInstance> actors,
                                         RenderScale scale) {
  std::map<FaceId, double> areas;
  for (const ActorInstance& a : actors) {
    for (int k = 0; k < a.model.num_side_faces; ++k) {
      areas[{a.actor_id, k}] = a.model.face_area();
    }
  }
  std::map<FaceId, double> out;
  for (const auto& [face, count] : tally(view).faces) {
    out[face] = static_cast<double>(count) * scale.count_factor() /
                areas.at(face);
  }
  return out;
}

}  // namespace viewplan
