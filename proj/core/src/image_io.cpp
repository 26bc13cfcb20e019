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

#include "viewplan/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace viewplan {
namespace {

std::ofstream open_binary(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::array<std::uint8_t, 3> face_color(const FaceId& face) {
  // splitmix-style hash; never returns pure black.
  std::uint64_t z = (static_cast<std::uint64_t>(face.actor_id) << 32) ^
                    static_cast<std::uint32_t>(face.face_index);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return {static_cast<std::uint8_t>(64 + (z & 0xbf)),
          static_cast<std::uint8_t>(64 + ((z >> 8) & 0xbf)),
          static_cast<std::uint8_t>(64 + ((z >> 16) & 0xbf))};
}

void write_face_ppm(const RenderedView& view, const std::filesystem::path& path) {
  std::ofstream out = open_binary(path);
  out << "P6\n" << view.width << ' ' << view.height << "\n255\n";
  for (std::int32_t id : view.id_buffer) {
    const std::array<std::uint8_t, 3> rgb =
        id == RenderedView::kBackground ? std::array<std::uint8_t, 3>{0, 0, 0}
                                        : face_color(view.faces[id]);
    out.write(reinterpret_cast<const char*>(rgb.data()), 3);
  }
}

void write_depth_pgm(const RenderedView& view, const std::filesystem::path& path,
                     double max_depth) {
  std::ofstream out = open_binary(path);
  out << "P5\n" << view.width << ' ' << view.height << "\n65535\n";
  const double scale = 65535.0 / max_depth;
  for (double d : view.depth_buffer) {
    const double v = std::isfinite(d) ? std::clamp(d * scale, 0.0, 65535.0)
                                      : 65535.0;
    const auto u = static_cast<std::uint16_t>(std::lround(v));
    const char bytes[2] = {static_cast<char>(u >> 8),
                           static_cast<char>(u & 0xff)};
    out.write(bytes, 2);
  }
}

}  // namespace viewplan
