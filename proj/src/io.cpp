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


#include <stlinc/io.hpp>
#include <stlinc/errors.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace stlinc {

using nlohmann::json;

//==============================================================================
std::string readFile(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

//==============================================================================
void writeFile(const std::filesystem::path& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out)
    throw IoError("failed writing '" + path.string() + "'");
}

namespace {

//==============================================================================
Rect rect_from(const json& j)
{
  Rect r;
  r.min = Vector2(j.at("xmin").get<double>(), j.at("ymin").get<double>());
  r.max = Vector2(j.at("xmax").get<double>(), j.at("ymax").get<double>());
  return r;
}

//==============================================================================
json rect_to(const Rect& r)
{
  return {{"xmin", r.min.x()}, {"xmax", r.max.x()},
    {"ymin", r.min.y()}, {"ymax", r.max.y()}};
}

//==============================================================================
Vector2 vec_from(const json& j)
{
  if (!j.is_array() || j.size() != 2)
    throw Error("expected a two-element array");
  return {j[0].get<double>(), j[1].get<double>()};
}

} // anonymous namespace

//==============================================================================
Environment environmentFromJson(const json& j)
{
  try
  {
    if (j.value("version", 1) != 1)
      throw Error("unsupported environment version");

    Environment env;
    env.bounds = rect_from(j.at("bounds"));

    for (const auto& r : j.at("regions"))
    {
      Region region;
      region.box = rect_from(r);
      const std::string role = r.value("role", "region");
      if (role == "region")
        region.role = RegionRole::Region;
      else if (role == "obstacle")
        region.role = RegionRole::Obstacle;
      else
        throw Error("unknown region role '" + role + "'");
      const std::string name = r.at("name").get<std::string>();
      if (!env.regions.emplace(name, region).second)
        throw Error("duplicate region '" + name + "'");
    }

    if (j.contains("dynamics"))
    {
      const auto& d = j.at("dynamics");
      const auto levels = d.value("accel_levels",
        std::vector<double>{-1.0, 0.0, 1.0});
      env.dynamics = Dynamics::grid(levels, d.value("vmax", 2.0),
        d.value("dt", 1.0));
    }

    if (j.contains("quantization"))
    {
      const auto& q = j.at("quantization");
      env.quantization.position = q.value("position", 0.5);
      env.quantization.velocity = q.value("velocity", 0.5);
    }

    env.epsilon = j.value("margin", 1e-6);

    if (j.contains("start"))
    {
      const auto& s = j.at("start");
      env.start.position = vec_from(s.at("position"));
      if (s.contains("velocity"))
        env.start.velocity = vec_from(s.at("velocity"));
    }

    env.validate();
    return env;
  }
  catch (const json::exception& e)
  {
    throw Error(std::string("malformed environment: ") + e.what());
  }
}

//==============================================================================
json toJson(const Environment& env)
{
  json regions = json::array();
  for (const auto& [name, region] : env.regions)
  {
    json r = rect_to(region.box);
    r["name"] = name;
    r["role"] = region.role == RegionRole::Obstacle ? "obstacle" : "region";
    regions.push_back(r);
  }

  std::vector<double> levels;
  for (const auto& u : env.dynamics.controls)
  {
    if (std::find(levels.begin(), levels.end(), u.x()) == levels.end())
      levels.push_back(u.x());
  }

  return {
    {"version", 1},
    {"bounds", rect_to(env.bounds)},
    {"regions", regions},
    {"dynamics", {{"dt", env.dynamics.dt}, {"accel_levels", levels},
      {"vmax", env.dynamics.vmax}}},
    {"quantization", {{"position", env.quantization.position},
      {"velocity", env.quantization.velocity}}},
    {"margin", env.epsilon},
    {"start", {
      {"position", {env.start.position.x(), env.start.position.y()}},
      {"velocity", {env.start.velocity.x(), env.start.velocity.y()}}}}};
}

//==============================================================================
Environment loadEnvironment(const std::filesystem::path& path)
{
  const std::string text = readFile(path);
  json j;
  try
  {
    j = json::parse(text);
  }
  catch (const json::parse_error& e)
  {
    throw Error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return environmentFromJson(j);
}

//==============================================================================
std::filesystem::path defaultEnvironmentPath()
{
  return std::filesystem::path(STLINC_DATA_DIR) / "default_env.json";
}

//==============================================================================
void writeTrajectoryCsv(std::ostream& out, const Trajectory& traj)
{
  out << "step,px,py,vx,vy,ux,uy\n";
  char line[256];
  for (int k = 0; k < traj.size(); ++k)
  {
    const State& s = traj.states[k];
    const Vector2 u = k < static_cast<int>(traj.inputs.size())
      ? traj.inputs[k] : Vector2::Zero();
    std::snprintf(line, sizeof(line),
      "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.t0 + k,
      s.position.x(), s.position.y(), s.velocity.x(), s.velocity.y(),
      u.x(), u.y());
    out << line;
  }
}

//==============================================================================
std::string trajectoryCsv(const Trajectory& traj)
{
  std::ostringstream s;
  writeTrajectoryCsv(s, traj);
  return s.str();
}

namespace {

//==============================================================================
std::vector<std::string> split_csv(const std::string& line)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream s(line);
  while (std::getline(s, field, ','))
  {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

} // anonymous namespace

//==============================================================================
Trajectory readTrajectoryCsv(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line))
    throw Error("trajectory CSV is empty");

  const auto header = split_csv(line);
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i)
    column[header[i]] = i;
  if (!column.count("px") && !column.count("py"))
    throw Error("trajectory CSV header names neither px nor py");

  auto field = [&](const std::vector<std::string>& row, const char* name,
      int lineno)
  {
    const auto it = column.find(name);
    if (it == column.end())
      return 0.0;
    if (it->second >= row.size())
    {
      throw Error("trajectory CSV line " + std::to_string(lineno)
        + " lacks column " + name);
    }
    try
    {
      std::size_t used = 0;
      const double v = std::stod(row[it->second], &used);
      if (used != row[it->second].size())
        throw std::invalid_argument(name);
      return v;
    }
    catch (const std::logic_error&)
    {
      throw Error("trajectory CSV line " + std::to_string(lineno)
        + " has a malformed " + name + " value");
    }
  };

  Trajectory traj;
  std::vector<Vector2> inputs;
  int lineno = 1;
  while (std::getline(in, line))
  {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    const auto row = split_csv(line);

    const int step = column.count("step")
      ? static_cast<int>(std::lround(field(row, "step", lineno)))
      : traj.t0 + traj.size();
    if (traj.states.empty())
      traj.t0 = step;
    else if (step != traj.end() + 1)
    {
      throw Error("trajectory CSV line " + std::to_string(lineno)
        + " breaks the step sequence");
    }

    State s;
    s.position = {field(row, "px", lineno), field(row, "py", lineno)};
    s.velocity = {field(row, "vx", lineno), field(row, "vy", lineno)};
    traj.states.push_back(s);
    inputs.emplace_back(field(row, "ux", lineno), field(row, "uy", lineno));
  }

  if (traj.states.empty())
    throw Error("trajectory CSV has no rows");
  inputs.pop_back();
  traj.inputs = std::move(inputs);
  return traj;
}

//==============================================================================
json toJson(const TaskConstraint& x)
{
  return {{"id", x.id}, {"kind", to_string(x.kind)}, {"lo", x.lo.str()},
    {"hi", x.hi.str()}, {"prop", print(x.prop)}};
}

namespace {

//==============================================================================
json constraints(const std::vector<TaskConstraint>& xs)
{
  json out = json::array();
  for (const auto& x : xs)
    out.push_back(toJson(x));
  return out;
}

//==============================================================================
json bounds(const std::vector<TimeVarBound>& tc)
{
  json out = json::array();
  for (const auto& b : tc)
    out.push_back({{"var", name(b.var)}, {"lo", b.lo}, {"hi", b.hi}});
  return out;
}

//==============================================================================
json assignment(const Assignment& a)
{
  json out = json::object();
  for (const auto& [v, value] : a)
    out[name(v)] = value;
  return out;
}

//==============================================================================
json finite_or_null(double v)
{
  return std::isfinite(v) ? json(v) : json(nullptr);
}

} // anonymous namespace

//==============================================================================
json toJson(const FlattenOutput& f)
{
  return {{"reach", constraints(f.reach)}, {"inv", constraints(f.inv)},
    {"tc", bounds(f.tc)}, {"fresh_inner_vars", f.freshInnerVars}};
}

//==============================================================================
json toJson(const ResolveOutput& r)
{
  json windows = json::array();
  for (const auto& w : r.tcPrime)
  {
    json j = {{"var", name(w.var)}, {"lo", w.lo.str()}, {"hi", w.hi.str()},
      {"role", w.role == WindowRole::ReachTime ? "reach" : "inv"}};
    if (w.role == WindowRole::InvCompletion)
    {
      j["begin"] = w.begin.str();
      j["end"] = w.end.str();
    }
    windows.push_back(j);
  }
  return {{"reach", constraints(r.reach)}, {"inv", constraints(r.inv)},
    {"tc", bounds(r.tc)}, {"tc_prime", windows}};
}

//==============================================================================
json toJson(const AtomicTask& task)
{
  json sources = json::array();
  for (const auto& s : task.sources)
    sources.push_back({{"id", s.id}, {"kind", to_string(s.kind)}});
  return {
    {"interval", {task.interval.lo, task.interval.hi}},
    {"reach", task.reachProp ? json(print(*task.reachProp)) : json(nullptr)},
    {"inv", task.invProp ? json(print(*task.invProp)) : json(nullptr)},
    {"reach_optional", task.reachOptional},
    {"sources", sources}};
}

//==============================================================================
json toJson(const TraceRecord& record)
{
  json j = {{"iteration", record.iteration}, {"cursor", record.cursor},
    {"status", record.status}, {"bindings", assignment(record.added)},
    {"satisfied", record.satisfied}};
  j["task"] = record.task ? toJson(*record.task) : json(nullptr);
  if (!record.message.empty())
    j["message"] = record.message;
  return j;
}

//==============================================================================
json toJson(const ScheduleResult& s)
{
  json order = json::array();
  for (const auto& [a, b] : s.order.pairs)
    order.push_back({a, b});

  json trace = json::array();
  for (const auto& r : s.trace)
    trace.push_back(toJson(r));

  json j = {
    {"status", to_string(s.status)},
    {"bindings", assignment(s.bindings)},
    {"satisfied", std::vector<int>(s.satisfied.begin(), s.satisfied.end())},
    {"order", order},
    {"atomic_tasks", s.atomicTasks},
    {"expanded_nodes", s.expanded},
    {"trace", trace}};
  if (s.failure)
  {
    j["failure"] = {
      {"task", s.failure->task ? toJson(*s.failure->task) : json(nullptr)},
      {"cursor", s.failure->cursor},
      {"active", s.failure->active},
      {"reason", s.failure->reason},
      {"best_partial_margin", finite_or_null(s.failure->bestPartialMargin)}};
  }
  return j;
}

//==============================================================================
std::string traceJsonl(const ScheduleResult& s)
{
  std::string out;
  for (const auto& r : s.trace)
    out += toJson(r).dump() + "\n";
  return out;
}

//==============================================================================
std::string renderSvg(const Environment& env, const Trajectory& traj)
{
  const double scale = 40.0;
  const double w = (env.bounds.max.x() - env.bounds.min.x()) * scale;
  const double h = (env.bounds.max.y() - env.bounds.min.y()) * scale;
  auto px = [&](double x) { return (x - env.bounds.min.x()) * scale; };
  auto py = [&](double y) { return h - (y - env.bounds.min.y()) * scale; };

  std::ostringstream s;
  s << std::fixed << std::setprecision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
    << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
    << "\" fill=\"white\" stroke=\"black\"/>\n";

  for (const auto& [name, region] : env.regions)
  {
    const auto& b = region.box;
    const bool obstacle = region.role == RegionRole::Obstacle;
    s << "<rect x=\"" << px(b.min.x()) << "\" y=\"" << py(b.max.y())
      << "\" width=\"" << (b.max.x() - b.min.x()) * scale
      << "\" height=\"" << (b.max.y() - b.min.y()) * scale << "\" fill=\""
      << (obstacle ? "#d9534f" : "#5cb85c") << "\" fill-opacity=\"0.4\"/>\n";
    s << "<text x=\"" << px(b.min.x()) + 4 << "\" y=\"" << py(b.max.y()) + 14
      << "\" font-size=\"12\">" << name << "</text>\n";
  }

  if (!traj.empty())
  {
    s << "<polyline fill=\"none\" stroke=\"#337ab7\" stroke-width=\"2\" "
      << "points=\"";
    for (const auto& st : traj.states)
      s << px(st.position.x()) << "," << py(st.position.y()) << " ";
    s << "\"/>\n";
    for (int t = traj.t0; t <= traj.end(); ++t)
    {
      const auto& p = traj.at(t).position;
      s << "<circle cx=\"" << px(p.x()) << "\" cy=\"" << py(p.y())
        << "\" r=\"2.5\" fill=\"#337ab7\"><title>" << t
        << "</title></circle>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

} // namespace stlinc
