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

// Face-ID rendering of the height map and actor cylinders.
//
// Sampling convention shared by the rasterizer and the ray-casting reference:
//  * one sample per pixel, at the pixel center (i + 0.5, j + 0.5);
//  * pinhole camera, principal point at the image center, x right, y down;
//  * depth is the camera-space distance along the optical axis, and the
//    near plane sits at kNearPlane;
//  * surfaces are drawn obstacles first (row-major cells), then actors in
//    id order and face order; a surface replaces the incumbent only when it
//    is strictly closer;
//  * actor faces whose outward normal points away from the camera are culled.

#ifndef VIEWPLAN_RASTER_HPP_
#define VIEWPLAN_RASTER_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "viewplan/scene.hpp"

namespace viewplan {

inline constexpr double kNearPlane = 0.01;

struct FaceId {
  int actor_id = 0;
  int face_index = 0;

  auto operator<=>(const FaceId&) const = default;
};

/// An actor frozen at one timestep.
struct ActorInstance {
  int actor_id = 0;
  ActorModel model;
  ActorPose pose;
};

std::vector<ActorInstance> actors_at(const std::vector<ActorTrack>& tracks,
                                     int t);

/// Fraction of the native resolution that is actually rendered.
class RenderScale {
 public:
  RenderScale() = default;
  explicit RenderScale(double scale);

  double value() const { return scale_; }
  int pixels(int native) const;
  /// Multiplier that maps rendered pixel counts back to native counts.
  double count_factor() const { return 1.0 / (scale_ * scale_); }

 private:
  double scale_ = 1.0;
};

/// One side face of an actor: corners counter-clockwise seen from outside,
/// starting bottom-left, plus the outward unit normal.
struct FaceQuad {
  std::array<Eigen::Vector3d, 4> corners;
  Eigen::Vector3d normal;
};

FaceQuad actor_face(const ActorInstance& actor, int face_index);

/// Orthonormal camera basis and the pixel grid it is sampled on.
struct CameraFrame {
  Eigen::Vector3d origin;
  Eigen::Vector3d forward;
  Eigen::Vector3d right;
  Eigen::Vector3d down;
  double focal = 0.0;  // scaled focal length, px
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  /// Camera-space coordinates (right, down, forward) of a world point.
  Eigen::Vector3d to_camera(const Eigen::Vector3d& world) const;
  /// World direction through the center of pixel (i, j), scaled so that its
  /// forward component is one: a hit at parameter s has depth s.
  Eigen::Vector3d pixel_ray(int i, int j) const;
};

CameraFrame make_camera_frame(const CameraPose& pose,
                              const CameraIntrinsics& intrinsics,
                              RenderScale scale);

struct RenderedView {
  static constexpr std::int32_t kBackground = -1;

  int width = 0;
  int height = 0;
  std::vector<FaceId> faces;           // id code -> face
  std::vector<std::int32_t> id_buffer;  // kBackground or a code into faces
  std::vector<double> depth_buffer;    // +inf where nothing was drawn

  std::int32_t id_at(int i, int j) const {
    return id_buffer[static_cast<std::size_t>(j) * width + i];
  }
  double depth_at(int i, int j) const {
    return depth_buffer[static_cast<std::size_t>(j) * width + i];
  }
};

/// Per-face pixel counts; background includes obstacle pixels.
struct PixelTally {
  std::map<FaceId, std::int64_t> faces;
  std::int64_t background = 0;

  std::int64_t total() const;
  std::int64_t count(const FaceId& f) const;
};

RenderedView render(const CameraPose& pose, const CameraIntrinsics& intrinsics,
                    const HeightMap& map, std::span<const ActorInstance> actors,
                    RenderScale scale);

PixelTally tally(const RenderedView& view);

/// Scaled pixel count divided by face area, for every face that received at
/// least one pixel.
std::map<FaceId, double> pixel_densities(const RenderedView& view,
                                         std::span<const ActorInstance> actors,
                                         RenderScale scale);

/// Independent per-pixel ray caster with the same sampling convention as
/// render(); used to verify it.
PixelTally raycast_reference(const CameraPose& pose,
                             const CameraIntrinsics& intrinsics,
                             const HeightMap& map,
                             std::span<const ActorInstance> actors,
                             RenderScale scale);

}  // namespace viewplan

#endif  // VIEWPLAN_RASTER_HPP_
