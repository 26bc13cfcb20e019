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

#ifndef VIEWPLAN_ERRORS_HPP_
#define VIEWPLAN_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace viewplan {

/// Raised when a scenario or one of its parts violates a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A trajectory breaks the motion model or the environment constraints.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A planner could not produce any feasible plan.
class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exhaustive oracle refused an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double estimate, std::uint64_t budget)
      : std::runtime_error("joint trajectory space of ~" +
                           std::to_string(estimate) +
                           " combinations exceeds budget " +
                           std::to_string(budget)),
        estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace viewplan

#endif  // VIEWPLAN_ERRORS_HPP_
