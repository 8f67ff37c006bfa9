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


#ifndef STLINC__IO_HPP
#define STLINC__IO_HPP

#include <stlinc/environment.hpp>
#include <stlinc/flatten.hpp>
#include <stlinc/resolve.hpp>
#include <stlinc/scheduler.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace stlinc {

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& text);

Environment environmentFromJson(const nlohmann::json& j);
nlohmann::json toJson(const Environment& env);
Environment loadEnvironment(const std::filesystem::path& path);

/// Shipped default environment.
std::filesystem::path defaultEnvironmentPath();

/// Columns: step, px, py, vx, vy, ux, uy. The last row carries zero input.
void writeTrajectoryCsv(std::ostream& out, const Trajectory& traj);
std::string trajectoryCsv(const Trajectory& traj);

/// Accepts the full column set, or a header naming a subset of px, py, vx,
/// vy (missing channels read as zero). Steps must be consecutive.
Trajectory readTrajectoryCsv(std::istream& in);

nlohmann::json toJson(const TaskConstraint& x);
nlohmann::json toJson(const FlattenOutput& f);
nlohmann::json toJson(const ResolveOutput& r);
nlohmann::json toJson(const AtomicTask& task);
nlohmann::json toJson(const TraceRecord& record);
nlohmann::json toJson(const ScheduleResult& s);

/// One JSON object per line.
std::string traceJsonl(const ScheduleResult& s);

/// Workspace, regions and trajectory as a standalone SVG document.
std::string renderSvg(const Environment& env, const Trajectory& traj);

} // namespace stlinc

#endif // STLINC__IO_HPP
