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

// Debug dumps of rendered views as binary PPM / PGM files.

#ifndef VIEWPLAN_IMAGE_IO_HPP_
#define VIEWPLAN_IMAGE_IO_HPP_

#include <array>
#include <cstdint>
#include <filesystem>

#include "viewplan/raster.hpp"

namespace viewplan {

/// Deterministic distinct color for a face; background is black.
std::array<std::uint8_t, 3> face_color(const FaceId& face);

/// P6 image of the id buffer.
void write_face_ppm(const RenderedView& view, const std::filesystem::path& path);

/// 16-bit P5 image of the depth buffer in millimetres, saturating at
/// max_depth; empty pixels are written as 65535.
void write_depth_pgm(const RenderedView& view, const std::filesystem::path& path,
                     double max_depth = 65.535);

}  // namespace viewplan

#endif  // VIEWPLAN_IMAGE_IO_HPP_
