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

#ifndef VIEWPLAN_VIEW_EVALUATOR_HPP_
#define VIEWPLAN_VIEW_EVALUATOR_HPP_

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "viewplan/raster.hpp"
#include "viewplan/scene.hpp"

namespace viewplan {

/// Density of one face, indexed through the scenario's FaceLayout.
struct FaceDensity {
  int face = 0;
  double density = 0.0;  // px / m^2

  bool operator==(const FaceDensity&) const = default;
};

/// Non-zero face densities of one view, sorted by face.
using SparseDensities = std::vector<FaceDensity>;

/// Renders views of a fixed scenario and memoizes grid-state views.
///
/// Views of a grid state depend only on (x, y, theta, t) since every robot
/// shares the same camera, so the cache is shared across robots and trials.
/// Lookups and inserts are serialized by a mutex; concurrent inserts of the
/// same key store identical values.
class ViewEvaluator {
 public:
  ViewEvaluator(const Scenario& scenario, RenderScale scale);

  ViewEvaluator(const ViewEvaluator&) = delete;
  ViewEvaluator& operator=(const ViewEvaluator&) = delete;

  const Scenario& scenario() const { return *scenario_; }
  const FaceLayout& layout() const { return layout_; }
  RenderScale scale() const { return scale_; }

  SparseDensities evaluate(const RobotState& state);
  SparseDensities evaluate(const CameraPose& pose, int t) const;

  std::size_t cache_size() const;
  std::uint64_t render_count() const;
  void clear_cache();

 private:
  const Scenario* scenario_;
  RenderScale scale_;
  FaceLayout layout_;
  std::vector<std::vector<ActorInstance>> actors_by_time_;

  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, SparseDensities> cache_;
  mutable std::uint64_t renders_ = 0;
};

}  // namespace viewplan

#endif  // VIEWPLAN_VIEW_EVALUATOR_HPP_
