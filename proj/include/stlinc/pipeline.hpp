/*
 * Copyright (C) 2026 The stlinc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/


#ifndef STLINC__PIPELINE_HPP
#define STLINC__PIPELINE_HPP

#include <stlinc/flatten.hpp>
#include <stlinc/resolve.hpp>
#include <stlinc/scheduler.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stlinc {

struct RunOptions
{
  FlattenOptions flatten;
  ScheduleOptions schedule;
  /// Accepted for interface stability. Every stage is deterministic.
  unsigned seed = 0;
};

/// Wall-clock seconds per stage.
struct StageTimes
{
  double parse = 0.0;
  double flatten = 0.0;
  double resolve = 0.0;
  double schedule = 0.0;
  /// flatten + resolve + schedule (planner included).
  double solve = 0.0;
};

struct RunReport
{
  std::string spec;
  Formula formula = Formula::region("");
  int horizon = 0;
  int depth = 0;
  StageTimes times;
  FlattenOutput flattened;
  ResolveOutput resolved;
  ScheduleResult scheduled;
  /// Robustness of the formula on the plan at step 0, when the plan
  /// covers the horizon.
  std::optional<double> robustness;
  std::optional<bool> satisfied;
  /// Constraint ids that fail the per-constraint scan on success.
  std::vector<int> violations;

  ScheduleStatus status() const { return scheduled.status; }
};

/// Parse, validate, flatten, resolve and schedule. Throws ParseError,
/// FragmentViolation or UnknownRegion on bad input.
RunReport run(const std::string& spec, const Environment& env,
  const RunOptions& options = {});

RunReport run(const Formula& f, const Environment& env,
  const RunOptions& options = {});

/// Throws UnknownRegion if the formula names a region the environment
/// lacks.
void checkRegions(const Formula& f, const Environment& env);

nlohmann::json toJson(const RunReport& report);

struct BenchmarkSpec
{
  std::string name;
  std::string text;
  std::string pattern;
  /// Horizon and depth as published for the pattern.
  int publishedN = 0;
  int publishedD = 0;
};

/// The five benchmark patterns: reach, avoid, sequenced visit and
/// stabilization combinations.
const std::vector<BenchmarkSpec>& benchmarks();

/// Depth-3 sequenced visit over 60 steps.
const BenchmarkSpec& nestingSmokeTest();

} // namespace stlinc

#endif // STLINC__PIPELINE_HPP
