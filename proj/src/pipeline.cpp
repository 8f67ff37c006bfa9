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


#include <stlinc/pipeline.hpp>
#include <stlinc/errors.hpp>
#include <stlinc/io.hpp>
#include <stlinc/parser.hpp>
#include <stlinc/semantics.hpp>

#include <chrono>

namespace stlinc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

} // anonymous namespace

//==============================================================================
void checkRegions(const Formula& f, const Environment& env)
{
  desugarRegions(f, env.regions);
}

//==============================================================================
RunReport run(const std::string& spec, const Environment& env,
  const RunOptions& options)
{
  const auto start = Clock::now();
  const Formula f = parse(spec);
  const double parse_time = seconds_since(start);

  RunReport report = run(f, env, options);
  report.spec = spec;
  report.times.parse = parse_time;
  return report;
}

//==============================================================================
RunReport run(const Formula& f, const Environment& env,
  const RunOptions& options)
{
  const auto fragment = validateFragment(f);
  if (!fragment)
    throw FragmentViolation(fragment.message + " at " + fragment.path);
  checkRegions(f, env);

  RunReport report;
  report.spec = print(f);
  report.formula = f;
  report.horizon = horizon(f);
  report.depth = nestingDepth(f);

  auto t = Clock::now();
  report.flattened = flatten(f, options.flatten);
  report.times.flatten = seconds_since(t);

  t = Clock::now();
  report.resolved = resolve(report.flattened);
  report.times.resolve = seconds_since(t);

  ScheduleOptions schedule_options = options.schedule;
  schedule_options.minLength =
    std::max(schedule_options.minLength, report.horizon + 1);

  t = Clock::now();
  report.scheduled = schedule(report.resolved, env, env.start,
    schedule_options);
  report.times.schedule = seconds_since(t);
  report.times.solve =
    report.times.flatten + report.times.resolve + report.times.schedule;

  const Trajectory& plan = report.scheduled.plan;
  if (!plan.empty() && plan.covers(0) && plan.covers(report.horizon))
  {
    report.robustness = robustness(f, plan, 0, env.regions);
    report.satisfied = satisfies(f, plan, 0, env.regions);
  }

  if (report.scheduled.ok())
  {
    report.violations = violatedConstraints(report.resolved,
      report.scheduled.witness, plan, env.regions);
  }
  return report;
}

//==============================================================================
nlohmann::json toJson(const RunReport& report)
{
  using nlohmann::json;

  json tasks = json::array();
  for (const auto& r : report.scheduled.trace)
  {
    if (r.task && r.status == "planned")
      tasks.push_back(toJson(*r.task));
  }

  return {
    {"spec", report.spec},
    {"horizon", report.horizon},
    {"depth", report.depth},
    {"status", to_string(report.status())},
    {"robustness", report.robustness ? json(*report.robustness) : json(nullptr)},
    {"satisfied", report.satisfied ? json(*report.satisfied) : json(nullptr)},
    {"stages", {
      {"parse", report.times.parse},
      {"flatten", report.times.flatten},
      {"resolve", report.times.resolve},
      {"schedule", report.times.schedule},
      {"solve", report.times.solve}}},
    {"constraint_counts", {
      {"reach", report.resolved.reach.size()},
      {"inv", report.resolved.inv.size()},
      {"tc", report.flattened.tc.size()},
      {"tc_prime", report.resolved.tcPrime.size()},
      {"flattened_reach", report.flattened.reach.size()},
      {"flattened_inv", report.flattened.inv.size()}}},
    {"fresh_inner_vars", report.flattened.freshInnerVars},
    {"atomic_tasks", {{"count", report.scheduled.atomicTasks},
      {"planned", tasks}}},
    {"plan_length", report.scheduled.plan.size()},
    {"constraint_scan_violations", report.violations},
    {"flatten", toJson(report.flattened)},
    {"resolve", toJson(report.resolved)},
    {"schedule", toJson(report.scheduled)}};
}

//==============================================================================
const std::vector<BenchmarkSpec>& benchmarks()
{
  static const std::vector<BenchmarkSpec> specs = {
    {"phi1",
      "F[0,15](R1) & F[5,25](R2) & F[20,30](R3) & G[0,40](!O1)",
      "R+A", 40, 0},
    {"phi2",
      "F[0,15](R1 & F[0,15](R2)) & G[0,40](!O1)",
      "SV+A", 30, 1},
    {"phi3",
      "F[0,15](R1 & F[0,15](R2 & F[0,20](R3 & F[0,15](R1))))",
      "SV", 60, 3},
    {"phi4",
      "F[0,15](G[0,10](R1)) & F[0,35](R2) & G[0,40](!O1)",
      "R+A+SB", 40, 2},
    {"phi5",
      "F[0,15](R1 & F[0,20](G[0,10](R2)))",
      "SV+SB", 40, 2},
  };
  return specs;
}

//==============================================================================
const BenchmarkSpec& nestingSmokeTest()
{
  static const BenchmarkSpec spec = {
    "nest3",
    "F[0,15](R1 & F[0,15](R2 & F[0,15](R3 & F[0,15](R1))))",
    "SV", 60, 3};
  return spec;
}

} // namespace stlinc
