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

// Scenario JSON reading and writing. The schema is documented in
// docs/scenario_format.md.

#ifndef VIEWPLAN_SCENARIO_IO_HPP_
#define VIEWPLAN_SCENARIO_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "viewplan/scene.hpp"

namespace viewplan {

/// Malformed input: unreadable file, bad JSON, missing keys or wrong types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON form; parse_scenario(to_json(s)) == s for validated s.
std::string scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace viewplan

#endif  // VIEWPLAN_SCENARIO_IO_HPP_
