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

#include "viewplan/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"
#include "viewplan/image_io.hpp"
#include "viewplan/raster.hpp"

namespace viewplan::experiment {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError("trajectories" + where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return v.get<int>();
}

double number_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    bad(where + "." + key, "expected a finite number");
  }
  return v.get<double>();
}

}  // namespace

const std::vector<std::string>& planner_names() {
  static const std::vector<std::string> names = {
      "sequential", "sequential-nocollide", "formation", "oracle"};
  return names;
}

bool is_planner(std::string_view name) {
  const auto& names = planner_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<RobotState> random_starts(const Scenario& scenario, int robots,
                                      std::uint64_t seed) {
  const HeightMap& map = scenario.height_map;
  std::vector<std::pair<int, int>> free;
  for (int y = 0; y < map.rows; ++y) {
    for (int x = 0; x < map.cols; ++x) {
      if (is_env_free(x, y, scenario.robot_config, map)) free.emplace_back(x, y);
    }
  }
  if (static_cast<int>(free.size()) < robots) {
    throw ValidationError("not enough free cells for " +
                          std::to_string(robots) + " robots");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(free.begin(), free.end(), rng);
  std::uniform_int_distribution<int> heading(
      0, scenario.robot_config.num_headings - 1);
  std::vector<RobotState> starts;
  for (int r = 0; r < robots; ++r) {
    starts.push_back({free[r].first, free[r].second, heading(rng), 0});
  }
  return starts;
}

std::vector<Trial> make_trials(const Scenario& scenario,
                               const RunConfig& config) {
  const int available = scenario.num_robots();
  const int robots = config.robots > 0 ? config.robots : available;
  if (config.seed == 0 && robots > available) {
    throw ValidationError("scenario has " + std::to_string(available) +
                          " starts per configuration, " +
                          std::to_string(robots) + " requested");
  }
  std::vector<Trial> trials;
  for (std::size_t k = 0; k < scenario.start_sets.size(); ++k) {
    Trial trial;
    trial.index = static_cast<int>(k);
    if (config.seed == 0) {
      const auto& set = scenario.start_sets[k];
      trial.starts.assign(set.begin(), set.begin() + robots);
    } else {
      trial.starts = random_starts(scenario, robots, config.seed * 1000003 + k);
    }
    trials.push_back(std::move(trial));
  }
  if (config.trial) {
    if (*config.trial < 0 || *config.trial >= static_cast<int>(trials.size())) {
      throw ValidationError("trial " + std::to_string(*config.trial) +
                            " out of range");
    }
    return {trials[*config.trial]};
  }
  return trials;
}

std::vector<int> planning_order(int robots,
                                std::optional<std::uint64_t> order_seed) {
  std::vector<int> order(robots);
  std::iota(order.begin(), order.end(), 0);
  if (order_seed) {
    std::mt19937_64 rng(*order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

MetricsRow metrics_row(const PlanResult& plan, int trial,
                       int normalizing_robots) {
  MetricsRow row;
  row.planner = plan.planner;
  row.trial = trial;
  row.robots = plan.num_robots();
  row.view_reward = plan.reward.view_reward;
  row.per_robot_view_reward =
      normalizing_robots > 0 ? plan.reward.view_reward / normalizing_robots
                             : 0.0;
  row.stationary_reward = plan.reward.stationary_reward;
  row.collisions = plan.collision_count;
  row.wall_time_s = plan.total_wall_time();
  return row;
}

std::string format_metrics_row(const MetricsRow& row, bool include_time) {
  return row.planner + "," + std::to_string(row.trial) + "," +
         std::to_string(row.robots) + "," + fmt(row.view_reward) + "," +
         fmt(row.per_robot_view_reward) + "," + fmt(row.stationary_reward) +
         "," + std::to_string(row.collisions) + "," +
         (include_time ? fmt(row.wall_time_s) : "");
}

void write_metrics_csv(const std::filesystem::path& path,
                       std::span<const MetricsRow> rows) {
  std::ofstream out = open_for_write(path);
  out << kMetricsHeader << '\n';
  for (const MetricsRow& row : rows) out << format_metrics_row(row) << '\n';
}

PlanResult run_planner(const Scenario& scenario, std::string_view planner,
                       std::span<const RobotState> starts,
                       std::span<const int> order, ViewEvaluator& evaluator) {
  if (planner == "sequential" || planner == "sequential-nocollide") {
    return sequential_plan(scenario, starts, planner == "sequential", order,
                           evaluator);
  }
  if (planner == "formation") {
    return formation_plan(scenario, evaluator);
  }
  if (planner == "oracle") {
    return joint_oracle(scenario, starts, true, evaluator);
  }
  throw ValidationError("unknown planner '" + std::string(planner) + "'");
}

std::vector<TrialOutcome> run_trials(const Scenario& scenario,
                                     std::string_view planner,
                                     std::span<const Trial> trials,
                                     std::optional<std::uint64_t> order_seed,
                                     ViewEvaluator& evaluator) {
  std::vector<TrialOutcome> out;
  std::optional<PlanResult> formation;
  for (const Trial& trial : trials) {
    TrialOutcome o;
    o.trial = trial.index;
    if (planner == "formation") {
      if (!formation) formation = run_planner(scenario, planner, {}, {}, evaluator);
      o.plan = *formation;
    } else {
      const std::vector<int> order =
          planning_order(static_cast<int>(trial.starts.size()), order_seed);
      o.plan = run_planner(scenario, planner, trial.starts, order, evaluator);
    }
    o.row = metrics_row(o.plan, trial.index,
                        static_cast<int>(trial.starts.size()));
    out.push_back(std::move(o));
  }
  return out;
}

std::string trajectories_json(const Scenario& scenario,
                              std::span<const TrialOutcome> outcomes) {
  json root;
  root["horizon"] = scenario.horizon;
  json trials = json::array();
  for (const TrialOutcome& o : outcomes) {
    json robots = json::array();
    for (int r = 0; r < o.plan.num_robots(); ++r) {
      json states = json::array();
      for (int t = 0; t <= scenario.horizon; ++t) {
        const CameraPose& p = o.plan.poses[r][t];
        json s;
        s["t"] = t;
        if (o.plan.trajectories.empty()) {
          s["x"] = nullptr;
          s["y"] = nullptr;
          s["theta"] = nullptr;
        } else {
          const RobotState& g = o.plan.trajectories[r][t];
          s["x"] = g.x;
          s["y"] = g.y;
          s["theta"] = g.theta;
        }
        s["pose"] = {{"x", p.position.x()}, {"y", p.position.y()},
                     {"z", p.position.z()}, {"yaw", p.yaw},
                     {"pitch", p.pitch}};
        states.push_back(std::move(s));
      }
      robots.push_back({{"robot", r}, {"states", std::move(states)}});
    }
    trials.push_back({{"trial", o.trial},
                      {"planner", o.plan.planner},
                      {"robots", std::move(robots)}});
  }
  root["trials"] = std::move(trials);
  return root.dump(1);
}

void validate_trajectories_json(std::string_view text,
                                const Scenario* scenario) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("", std::string("malformed JSON: ") + e.what());
  }
  const int horizon = int_field(root, "horizon", "");
  if (horizon < 0) bad(".horizon", "must be >= 0");
  if (scenario && horizon != scenario->horizon) {
    bad(".horizon", "does not match the scenario");
  }
  const json& trials = field(root, "trials", "");
  if (!trials.is_array()) bad(".trials", "expected an array");

  for (std::size_t k = 0; k < trials.size(); ++k) {
    const std::string tw = ".trials[" + std::to_string(k) + "]";
    int_field(trials[k], "trial", tw);
    const json& planner = field(trials[k], "planner", tw);
    static const std::set<std::string> known = {
        "sequential", "sequential-nocollide", "formation", "oracle",
        "oracle-nocollide"};
    if (!planner.is_string() || !known.contains(planner.get<std::string>())) {
      bad(tw + ".planner", "unknown planner");
    }
    const json& robots = field(trials[k], "robots", tw);
    if (!robots.is_array()) bad(tw + ".robots", "expected an array");

    std::vector<Trajectory> grid;
    for (std::size_t r = 0; r < robots.size(); ++r) {
      const std::string rw = tw + ".robots[" + std::to_string(r) + "]";
      if (int_field(robots[r], "robot", rw) != static_cast<int>(r)) {
        bad(rw + ".robot", "robots must be numbered in order");
      }
      const json& states = field(robots[r], "states", rw);
      if (!states.is_array() ||
          states.size() != static_cast<std::size_t>(horizon) + 1) {
        bad(rw + ".states", "expected horizon+1 states");
      }
      Trajectory traj;
      bool off_grid = false;
      for (std::size_t t = 0; t < states.size(); ++t) {
        const std::string sw = rw + ".states[" + std::to_string(t) + "]";
        const json& s = states[t];
        if (int_field(s, "t", sw) != static_cast<int>(t)) {
          bad(sw + ".t", "timesteps must count up from 0");
        }
        const json& pose = field(s, "pose", sw);
        CameraPose cam;
        cam.position = {number_field(pose, "x", sw + ".pose"),
                        number_field(pose, "y", sw + ".pose"),
                        number_field(pose, "z", sw + ".pose")};
        cam.yaw = number_field(pose, "yaw", sw + ".pose");
        cam.pitch = number_field(pose, "pitch", sw + ".pose");

        const bool null_cell = field(s, "x", sw).is_null() &&
                               field(s, "y", sw).is_null() &&
                               field(s, "theta", sw).is_null();
        if (null_cell) {
          if (t > 0 && !off_grid) bad(sw, "mixes grid and off-grid states");
          off_grid = true;
          continue;
        }
        if (off_grid) bad(sw, "mixes grid and off-grid states");
        const RobotState g{int_field(s, "x", sw), int_field(s, "y", sw),
                           int_field(s, "theta", sw), static_cast<int>(t)};
        if (scenario) {
          if (!scenario->height_map.contains(g.x, g.y)) {
            bad(sw, "cell outside the grid");
          }
          const CameraPose want =
              camera_pose(g, scenario->robot_config, scenario->height_map);
          if ((want.position - cam.position).norm() > 1e-6 ||
              std::abs(std::remainder(want.yaw - cam.yaw, 2 * M_PI)) > 1e-6 ||
              std::abs(want.pitch - cam.pitch) > 1e-6) {
            bad(sw + ".pose", "does not match the grid state");
          }
        }
        traj.push_back(g);
      }
      if (off_grid && planner != "formation") {
        bad(rw, "only formation robots may be off the grid");
      }
      if (!off_grid) grid.push_back(std::move(traj));
    }
    if (scenario) {
      try {
        check_feasible(*scenario, grid);
      } catch (const FeasibilityError& e) {
        bad(tw, e.what());
      }
    }
  }
}

std::vector<PlannerSummary> summarize(std::span<const MetricsRow> rows) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const MetricsRow*>> by_planner;
  for (const MetricsRow& row : rows) {
    if (!by_planner.contains(row.planner)) order.push_back(row.planner);
    by_planner[row.planner].push_back(&row);
  }

  std::vector<PlannerSummary> out;
  for (const std::string& name : order) {
    const auto& group = by_planner[name];
    PlannerSummary s;
    s.planner = name;
    s.trials = static_cast<int>(group.size());
    s.robots = group.front()->robots;
    for (const MetricsRow* r : group) {
      s.mean_per_robot += r->per_robot_view_reward;
      s.mean_view_reward += r->view_reward;
      s.mean_collisions += r->collisions;
      s.mean_wall_time_s += r->wall_time_s;
    }
    const double n = static_cast<double>(group.size());
    s.mean_per_robot /= n;
    s.mean_view_reward /= n;
    s.mean_collisions /= n;
    s.mean_wall_time_s /= n;
    if (group.size() > 1) {
      double ss = 0.0;
      for (const MetricsRow* r : group) {
        const double d = r->per_robot_view_reward - s.mean_per_robot;
        ss += d * d;
      }
      s.stddev_per_robot = std::sqrt(ss / (n - 1.0));
    }
    out.push_back(s);
  }

  double formation = std::numeric_limits<double>::quiet_NaN();
  for (const PlannerSummary& s : out) {
    if (s.planner == "formation") formation = s.mean_per_robot;
  }
  for (PlannerSummary& s : out) s.ratio_to_formation = s.mean_per_robot / formation;
  return out;
}

void write_compare_csv(const std::filesystem::path& path,
                       std::span<const PlannerSummary> summaries) {
  std::ofstream out = open_for_write(path);
  out << "planner,trials,robots,mean_per_robot_view_reward,"
         "stddev_per_robot_view_reward,ratio_to_formation,mean_view_reward,"
         "mean_collisions,mean_wall_time_s\n";
  for (const PlannerSummary& s : summaries) {
    out << s.planner << ',' << s.trials << ',' << s.robots << ','
        << fmt(s.mean_per_robot) << ',' << fmt(s.stddev_per_robot) << ','
        << (std::isnan(s.ratio_to_formation) ? "" : fmt(s.ratio_to_formation))
        << ',' << fmt(s.mean_view_reward) << ',' << fmt(s.mean_collisions)
        << ',' << fmt(s.mean_wall_time_s) << '\n';
  }
}

std::vector<ScaleRow> scale_sweep(const Scenario& scenario,
                                  std::span<const Trial> trials,
                                  int max_robots, double render_scale) {
  if (trials.empty()) throw ValidationError("scale sweep needs a trial");
  for (const Trial& trial : trials) {
    if (static_cast<int>(trial.starts.size()) < max_robots) {
      throw ValidationError("scale sweep to " + std::to_string(max_robots) +
                            " robots needs that many start positions");
    }
  }
  std::vector<ScaleRow> rows;
  double previous = 0.0;
  for (int n = 1; n <= max_robots; ++n) {
    ViewEvaluator evaluator(scenario, RenderScale(render_scale));
    ScaleRow row;
    row.robots = n;
    const std::vector<int> order = planning_order(n, std::nullopt);
    for (const Trial& trial : trials) {
      const PlanResult plan = sequential_plan(
          scenario, std::span(trial.starts.data(), n), true, order, evaluator);
      row.total_view_reward += plan.reward.view_reward;
      row.wall_time_s += plan.total_wall_time();
    }
    row.total_view_reward /= static_cast<double>(trials.size());
    row.wall_time_s /= static_cast<double>(trials.size());
    row.marginal_view_reward = row.total_view_reward - previous;
    previous = row.total_view_reward;
    rows.push_back(row);
  }
  return rows;
}

void write_scale_csv(const std::filesystem::path& path,
                     std::span<const ScaleRow> rows) {
  std::ofstream out = open_for_write(path);
  out << kScaleHeader << '\n';
  for (const ScaleRow& r : rows) {
    out << r.robots << ',' << fmt(r.total_view_reward) << ','
        << fmt(r.marginal_view_reward) << ',' << fmt(r.wall_time_s) << '\n';
  }
}

double growth_exponent(std::span<const ScaleRow> rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const ScaleRow& r : rows) {
    if (r.wall_time_s <= 0.0) continue;
    const double x = std::log(static_cast<double>(r.robots));
    const double y = std::log(r.wall_time_s);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

void dump_frames(const Scenario& scenario, const PlanResult& plan, int trial,
                 RenderScale scale, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (int t = 0; t <= scenario.horizon; ++t) {
    const std::vector<ActorInstance> actors = actors_at(scenario.actors, t);
    for (int r = 0; r < plan.num_robots(); ++r) {
      const RenderedView view =
          render(plan.poses[r][t], scenario.robot_config.intrinsics,
                 scenario.height_map, actors, scale);
      char name[96];
      std::snprintf(name, sizeof name, "trial%02d_robot%02d_t%03d.ppm", trial,
                    r, t);
      write_face_ppm(view, dir / name);
    }
  }
}

}  // namespace viewplan::experiment
