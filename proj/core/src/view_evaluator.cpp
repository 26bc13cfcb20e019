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

#include "viewplan/view_evaluator.hpp"

namespace viewplan {
namespace {

std::uint64_t pack(const RobotState& s) {
  return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(s.x)) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(s.y)) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(s.theta)) << 16) |
         static_cast<std::uint64_t>(static_cast<std::uint16_t>(s.t));
}

}  // namespace

ViewEvaluator::ViewEvaluator(const Scenario& scenario, RenderScale scale)
    : scenario_(&scenario), scale_(scale), layout_(scenario.actors) {
  for (int t = 0; t <= scenario.horizon; ++t) {
    actors_by_time_.push_back(actors_at(scenario.actors, t));
  }
}

SparseDensities ViewEvaluator::evaluate(const CameraPose& pose, int t) const {
  const Scenario& sc = *scenario_;
  const RenderedView view =
      render(pose, sc.robot_config.intrinsics, sc.height_map,
             actors_by_time_.at(t), scale_);
  {
    std::lock_guard lock(mutex_);
    ++renders_;
  }

  // Render codes follow the scenario actor order, i.e. the global layout.
  std::vector<std::int64_t> counts(view.faces.size(), 0);
  for (std::int32_t id : view.id_buffer) {
    if (id != RenderedView::kBackground) ++counts[id];
  }
  SparseDensities out;
  for (std::size_t f = 0; f < counts.size(); ++f) {
    if (counts[f] == 0) continue;
    const int face = static_cast<int>(f);
    out.push_back({face, static_cast<double>(counts[f]) *
                             scale_.count_factor() / layout_.area(face)});
  }
  return out;
}

SparseDensities ViewEvaluator::evaluate(const RobotState& state) {
  const std::uint64_t key = pack(state);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  SparseDensities value = evaluate(
      camera_pose(state, scenario_->robot_config, scenario_->height_map),
      state.t);
  std::lock_guard lock(mutex_);
  cache_.insert_or_assign(key, value);
  return value;
}

std::size_t ViewEvaluator::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::uint64_t ViewEvaluator::render_count() const {
  std::lock_guard lock(mutex_);
  return renders_;
}

void ViewEvaluator::clear_cache() {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

}  // namespace viewplan
