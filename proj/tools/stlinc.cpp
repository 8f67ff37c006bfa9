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


#include <stlinc/errors.hpp>
#include <stlinc/io.hpp>
#include <stlinc/parser.hpp>
#include <stlinc/pipeline.hpp>
#include <stlinc/semantics.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace stlinc;

namespace {

enum ExitCode
{
  kSuccess = 0,
  kOther = 1,
  kPartial = 2,
  kInfeasible = 3,
  kParse = 4,
  kFragment = 5,
  kIo = 6
};

struct SpecInput
{
  std::string path;
  std::string expr;

  std::string text() const
  {
    if (!expr.empty())
      return expr;
    if (path.empty())
      throw Error("no specification given (use a file or --expr)");
    return readFile(path);
  }
};

void add_spec(CLI::App* cmd, SpecInput& spec, bool positional = true)
{
  if (positional)
    cmd->add_option("spec", spec.path, "Specification file");
  else
    cmd->add_option("--spec", spec.path, "Specification file");
  cmd->add_option("-e,--expr", spec.expr, "Specification text");
}

Environment load_env(const std::string& path)
{
  return loadEnvironment(path.empty() ? defaultEnvironmentPath() : fs::path(path));
}

int exit_for(ScheduleStatus s)
{
  switch (s)
  {
    case ScheduleStatus::Success:
      return kSuccess;
    case ScheduleStatus::Partial:
      return kPartial;
    case ScheduleStatus::Infeasible:
      return kInfeasible;
  }
  return kOther;
}

std::string format_double(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_fixed(double v, int digits)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

//==============================================================================
int cmd_run(const SpecInput& spec, const std::string& env_path,
  const std::string& out_dir, bool svg, const RunOptions& options)
{
  const Environment env = load_env(env_path);
  const RunReport report = run(spec.text(), env, options);

  const fs::path out(out_dir);
  fs::create_directories(out);
  writeFile(out / "trajectory.csv", trajectoryCsv(report.scheduled.plan));
  writeFile(out / "report.json", toJson(report).dump(2) + "\n");
  writeFile(out / "trace.jsonl", traceJsonl(report.scheduled));
  if (svg)
    writeFile(out / "plan.svg", renderSvg(env, report.scheduled.plan));

  std::cout << "status: " << to_string(report.status()) << "\n";
  std::cout << "robustness: "
    << (report.robustness ? format_double(*report.robustness) : "n/a") << "\n";
  std::cout << "atomic tasks: " << report.scheduled.atomicTasks << "\n";
  std::cout << "solve time (s): " << format_fixed(report.times.solve, 4) << "\n";
  if (report.scheduled.failure)
    std::cout << "failure: " << report.scheduled.failure->reason << "\n";
  std::cout << "outputs: " << out.string() << "\n";
  return exit_for(report.status());
}

//==============================================================================
int cmd_bench(const std::string& env_path, const RunOptions& options)
{
  const Environment env = load_env(env_path);
  std::cout << "name    N   D  horizon  solve_s   robustness  status\n";
  bool all_ok = true;
  for (const auto& b : benchmarks())
  {
    std::string time = "-";
    std::string rho = "-";
    std::string status;
    int depth = -1;
    int hz = -1;
    try
    {
      const RunReport report = run(b.text, env, options);
      depth = report.depth;
      hz = report.horizon;
      time = format_fixed(report.times.solve, 4);
      if (report.robustness)
        rho = format_fixed(*report.robustness, 3);
      status = to_string(report.status());
      all_ok = all_ok && report.scheduled.ok();
    }
    catch (const std::exception& e)
    {
      status = std::string("error: ") + e.what();
      all_ok = false;
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%-6s %3d %3d %8d %9s %12s  %s\n",
      b.name.c_str(), b.publishedN, depth, hz, time.c_str(), rho.c_str(),
      status.c_str());
    std::cout << line;
  }
  return all_ok ? kSuccess : kPartial;
}

//==============================================================================
int cmd_flatten(const SpecInput& spec, bool json, const FlattenOptions& opts)
{
  const auto out = flatten(parse(spec.text()), opts);
  std::cout << (json ? toJson(out).dump(2) + "\n" : report(out));
  return kSuccess;
}

//==============================================================================
int cmd_resolve(const SpecInput& spec, bool json, const FlattenOptions& opts)
{
  const auto out = resolve(flatten(parse(spec.text()), opts));
  std::cout << (json ? toJson(out).dump(2) + "\n" : report(out));
  return kSuccess;
}

//==============================================================================
int cmd_schedule(const SpecInput& spec, const std::string& env_path,
  const RunOptions& options)
{
  const Environment env = load_env(env_path);
  const RunReport report = run(spec.text(), env, options);
  std::cout << traceJsonl(report.scheduled);
  return exit_for(report.status());
}

//==============================================================================
int cmd_monitor(const SpecInput& spec, const std::string& csv,
  const std::string& env_path, int at, bool boolean)
{
  const Formula f = parse(spec.text());
  std::ifstream in(csv);
  if (!in)
    throw IoError("cannot open '" + csv + "'");
  const Trajectory traj = readTrajectoryCsv(in);

  RegionMap regions;
  if (!env_path.empty())
    regions = loadEnvironment(env_path).regions;

  if (boolean)
    std::cout << (satisfies(f, traj, at, regions) ? "true" : "false") << "\n";
  else
    std::cout << format_double(robustness(f, traj, at, regions)) << "\n";
  return kSuccess;
}

} // anonymous namespace

//==============================================================================
int main(int argc, char** argv)
{
  CLI::App app{"Incremental planning from nested signal temporal logic"};
  app.require_subcommand(1);

  RunOptions options;
  std::size_t max_enum = options.schedule.enumerationCap;
  bool shared_vars = false;
  auto add_common = [&](CLI::App* cmd)
  {
    cmd->add_option("--max-enum", max_enum,
      "Cap on enumerated time-variable assignments");
    cmd->add_flag("--shared-vars", shared_vars,
      "Share inner time variables across unrolled G copies");
  };

  SpecInput spec;
  std::string env_path;
  std::string out_dir = "out";
  bool svg = false;
  bool json = false;
  std::string csv;
  int at = 0;
  bool boolean = false;

  auto* run_cmd = app.add_subcommand("run", "Plan a trajectory for a spec");
  add_spec(run_cmd, spec, false);
  run_cmd->add_option("--env", env_path, "Environment JSON (default: shipped)");
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_flag("--svg", svg, "Also write plan.svg");
  run_cmd->add_option("--seed", options.seed, "Seed (pipeline is deterministic)");
  add_common(run_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
  bench_cmd->add_option("--env", env_path, "Environment JSON (default: shipped)");
  bench_cmd->add_option("--seed", options.seed, "Seed (pipeline is deterministic)");
  add_common(bench_cmd);

  auto* flatten_cmd = app.add_subcommand("flatten", "Print flattened constraints");
  add_spec(flatten_cmd, spec);
  flatten_cmd->add_flag("--json", json, "JSON output");
  add_common(flatten_cmd);

  auto* resolve_cmd = app.add_subcommand("resolve", "Print resolved constraints");
  add_spec(resolve_cmd, spec);
  resolve_cmd->add_flag("--json", json, "JSON output");
  add_common(resolve_cmd);

  auto* schedule_cmd = app.add_subcommand("schedule", "Print the schedule trace");
  add_spec(schedule_cmd, spec);
  schedule_cmd->add_option("--env", env_path, "Environment JSON (default: shipped)");
  add_common(schedule_cmd);

  auto* monitor_cmd = app.add_subcommand("monitor", "Evaluate robustness on a CSV");
  add_spec(monitor_cmd, spec);
  monitor_cmd->add_option("trajectory", csv, "Trajectory CSV")->required();
  monitor_cmd->add_option("--env", env_path, "Environment JSON for region names");
  monitor_cmd->add_option("--at", at, "Evaluation step");
  monitor_cmd->add_flag("--boolean", boolean, "Print Boolean satisfaction");

  CLI11_PARSE(app, argc, argv);

  options.schedule.enumerationCap = max_enum;
  options.flatten.freshInnerVars = !shared_vars;

  try
  {
    if (*run_cmd)
      return cmd_run(spec, env_path, out_dir, svg, options);
    if (*bench_cmd)
      return cmd_bench(env_path, options);
    if (*flatten_cmd)
      return cmd_flatten(spec, json, options.flatten);
    if (*resolve_cmd)
      return cmd_resolve(spec, json, options.flatten);
    if (*schedule_cmd)
      return cmd_schedule(spec, env_path, options);
    if (*monitor_cmd)
      return cmd_monitor(spec, csv, env_path, at, boolean);
  }
  catch (const ParseError& e)
  {
    std::cerr << "parse error at " << e.line() << ":" << e.column() << ": "
      << e.what() << "\n";
    return kParse;
  }
  catch (const FragmentViolation& e)
  {
    std::cerr << "fragment violation: " << e.what() << "\n";
    return kFragment;
  }
  catch (const IoError& e)
  {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  }
  catch (const fs::filesystem_error& e)
  {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
