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

#include "viewplan/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace viewplan {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing key '" + key + "'");
  }
  return j.at(key);
}

double get_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) {
    throw ParseError(where + "." + key + ": expected a number");
  }
  return v.get<double>();
}

int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return v.get<int>();
}

const json& get_array(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_array()) {
    throw ParseError(where + "." + key + ": expected an array");
  }
  return v;
}

std::vector<RobotState> parse_starts(const json& arr, const std::string& where) {
  std::vector<RobotState> starts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    starts.push_back({get_int(arr[i], "x", at), get_int(arr[i], "y", at),
                      get_int(arr[i], "theta", at), 0});
  }
  return starts;
}

json starts_to_json(const std::vector<RobotState>& starts) {
  json arr = json::array();
  for (const RobotState& s : starts) {
    arr.push_back({{"x", s.x}, {"y", s.y}, {"theta", s.theta}});
  }
  return arr;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }

  Scenario sc;

  const json& hm = require(root, "height_map", "scenario");
  sc.height_map.cols = get_int(hm, "cols", "height_map");
  sc.height_map.rows = get_int(hm, "rows", "height_map");
  sc.height_map.cell_size = get_number(hm, "cell_size", "height_map");
  sc.height_map.heights.clear();
  for (const json& h : get_array(hm, "heights", "height_map")) {
    if (!h.is_number()) throw ParseError("height_map.heights: expected numbers");
    sc.height_map.heights.push_back(h.get<double>());
  }

  sc.horizon = get_int(root, "horizon", "scenario");
  sc.formation_radius = get_number(root, "formation_radius", "scenario");
  if (root.contains("formation_robots")) {
    sc.formation_robots = get_int(root, "formation_robots", "scenario");
  }

  const json& actors = get_array(root, "actors", "scenario");
  for (std::size_t a = 0; a < actors.size(); ++a) {
    const std::string where = "actors[" + std::to_string(a) + "]";
    ActorTrack track;
    track.id = get_int(actors[a], "id", where);
    track.model.radius = get_number(actors[a], "radius", where);
    track.model.height = get_number(actors[a], "height", where);
    track.model.num_side_faces = get_int(actors[a], "num_side_faces", where);
    const json& poses = get_array(actors[a], "poses", where);
    for (std::size_t p = 0; p < poses.size(); ++p) {
      const std::string pw = where + ".poses[" + std::to_string(p) + "]";
      ActorPose pose;
      pose.position = {get_number(poses[p], "x", pw),
                       get_number(poses[p], "y", pw),
                       get_number(poses[p], "z", pw)};
      pose.yaw = get_number(poses[p], "yaw", pw);
      track.poses.push_back(pose);
    }
    sc.actors.push_back(std::move(track));
  }
  std::stable_sort(sc.actors.begin(), sc.actors.end(),
                   [](const ActorTrack& l, const ActorTrack& r) {
                     return l.id < r.id;
                   });

  const json& robots = require(root, "robots", "scenario");
  RobotConfig& cfg = sc.robot_config;
  cfg.altitude = get_number(robots, "altitude", "robots");
  cfg.camera_tilt_deg = get_number(robots, "camera_tilt_deg", "robots");
  cfg.max_step = get_int(robots, "max_step", "robots");
  cfg.max_turn = get_int(robots, "max_turn", "robots");
  cfg.num_headings = get_int(robots, "num_headings", "robots");
  cfg.stationary_bonus = get_number(robots, "stationary_bonus", "robots");
  if (robots.contains("step_metric")) {
    const json& m = robots.at("step_metric");
    if (m == "chebyshev") {
      cfg.step_metric = StepMetric::kChebyshev;
    } else if (m == "euclidean") {
      cfg.step_metric = StepMetric::kEuclidean;
    } else {
      throw ParseError("robots.step_metric: expected chebyshev or euclidean");
    }
  }
  const json& intr = require(robots, "intrinsics", "robots");
  cfg.intrinsics.focal_px = get_number(intr, "focal_px", "intrinsics");
  cfg.intrinsics.width_px = get_int(intr, "width_px", "intrinsics");
  cfg.intrinsics.height_px = get_int(intr, "height_px", "intrinsics");

  sc.start_sets.clear();
  sc.start_sets.push_back(
      parse_starts(get_array(robots, "starts", "robots"), "robots.starts"));
  if (robots.contains("start_sets")) {
    const json& sets = get_array(robots, "start_sets", "robots");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].is_array()) {
        throw ParseError("robots.start_sets: expected arrays of starts");
      }
      sc.start_sets.push_back(parse_starts(
          sets[i], "robots.start_sets[" + std::to_string(i) + "]"));
    }
  }

  sc.validate();
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string scenario_to_json(const Scenario& sc) {
  json root;
  root["height_map"] = {{"cols", sc.height_map.cols},
                        {"rows", sc.height_map.rows},
                        {"cell_size", sc.height_map.cell_size},
                        {"heights", sc.height_map.heights}};

  json actors = json::array();
  for (const ActorTrack& track : sc.actors) {
    json poses = json::array();
    for (const ActorPose& p : track.poses) {
      poses.push_back({{"x", p.position.x()},
                       {"y", p.position.y()},
                       {"z", p.position.z()},
                       {"yaw", p.yaw}});
    }
    actors.push_back({{"id", track.id},
                      {"radius", track.model.radius},
                      {"height", track.model.height},
                      {"num_side_faces", track.model.num_side_faces},
                      {"poses", std::move(poses)}});
  }
  root["actors"] = std::move(actors);

  const RobotConfig& cfg = sc.robot_config;
  json robots = {
      {"altitude", cfg.altitude},
      {"camera_tilt_deg", cfg.camera_tilt_deg},
      {"max_step", cfg.max_step},
      {"max_turn", cfg.max_turn},
      {"num_headings", cfg.num_headings},
      {"step_metric",
       cfg.step_metric == StepMetric::kEuclidean ? "euclidean" : "chebyshev"},
      {"stationary_bonus", cfg.stationary_bonus},
      {"intrinsics",
       {{"focal_px", cfg.intrinsics.focal_px},
        {"width_px", cfg.intrinsics.width_px},
        {"height_px", cfg.intrinsics.height_px}}},
      {"starts", starts_to_json(sc.robot_starts())}};
  if (sc.start_sets.size() > 1) {
    json sets = json::array();
    for (std::size_t i = 1; i < sc.start_sets.size(); ++i) {
      sets.push_back(starts_to_json(sc.start_sets[i]));
    }
    robots["start_sets"] = std::move(sets);
  }
  root["robots"] = std::move(robots);
  root["horizon"] = sc.horizon;
  root["formation_radius"] = sc.formation_radius;
  if (sc.formation_robots > 0) root["formation_robots"] = sc.formation_robots;
  return root.dump(2);
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write scenario file " + path.string());
  out << scenario_to_json(scenario) << '\n';
}

}  // namespace viewplan
