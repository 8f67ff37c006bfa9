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


#ifndef STLINC__SCHEDULER_HPP
#define STLINC__SCHEDULER_HPP

#include <stlinc/planner.hpp>
#include <stlinc/resolve.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stlinc {

/// Strict partial order over constraint ids: (a, b) means a is necessarily
/// satisfied before b.
struct PrecedenceOrder
{
  std::set<std::pair<int, int>> pairs;

  /// (a, b) when a is necessarily satisfied no later than b, b is not
  /// necessarily satisfied no later than a, and (a, b) is not in pairs.
  std::set<std::pair<int, int>> weak;

  bool precedes(int a, int b) const { return pairs.count({a, b}) > 0; }
  std::vector<int> predecessors(int b) const;

  /// Strict and weak predecessors of b.
  std::vector<int> blockers(int b) const;
};

/// x1 precedes x2 when some lower bound on the satisfaction span of x2
/// minus some upper bound on that of x1 is positive under interval
/// arithmetic, after symbolic cancellation. The result is transitively
/// closed. Throws InconsistentWindows if a cycle appears. The weak
/// relation uses the same test with a non-negative difference.
PrecedenceOrder computeOrder(const ResolveOutput& r);

/// Satisfaction-time bookkeeping. Only satisfaction variables are bound;
/// time variables stay implicit and are constrained by the windows of
/// bound satisfaction variables.
class Binding
{
public:
  Binding() = default;
  Binding(const ResolveOutput& r, std::size_t enumerationCap);

  const Assignment& values() const { return _values; }
  bool bound(VarId v) const { return _values.count(v) > 0; }

  /// True when some assignment of the time variables keeps every window
  /// of every bound variable, with `var` also set to `value`.
  bool consistent(VarId var, int value) const;

  /// Binds `var` when consistent. Returns false and changes nothing
  /// otherwise.
  bool bind(VarId var, int value);

  /// Values `var` may still take given the current bindings, intersected
  /// with `within`. Empty ranges have first > second.
  Range window(VarId var, Range within) const;

  /// A full assignment of time and satisfaction variables consistent with
  /// every binding. Throws InconsistentWindows if none exists.
  Assignment witness() const;

private:
  /// Calls visit on every assignment of the component's time variables
  /// satisfying the windows of every variable bound in `values`. Stops
  /// when visit returns true.
  template<typename Visit>
  void feasible(int component, const Assignment& values, Visit&& visit) const;

  const ResolveOutput* _r = nullptr;
  std::size_t _cap = 0;
  Assignment _values;
  VarRanges _ranges;
  std::map<VarId, std::vector<const SatWindow*>> _windows;
  /// Satisfaction variable to component index.
  std::map<VarId, int> _component;
  /// Time variables and windowed satisfaction variables per component.
  std::vector<std::vector<VarId>> _componentTimes;
  std::vector<std::vector<VarId>> _componentSats;
};

/// Constraints that are unsatisfied, whose strict and weak predecessors
/// are all satisfied, and whose bounds are concrete under the bindings.
std::vector<TaskConstraint> nextTasks(const ResolveOutput& r,
  const PrecedenceOrder& order, const Binding& bindings,
  const std::set<int>& satisfied);

/// A constraint with concrete bounds, as fed to slice().
struct ConcreteTask
{
  int id = 0;
  ConstraintKind kind = ConstraintKind::Reach;
  Interval interval{0, 0};
  Formula prop = Formula::region("");
  /// Sources realized by this entry. Slices carry several.
  std::vector<TaskSource> sources;
};

/// Splits the union of intervals at every step where the active set
/// changes. Within a slice, active reach props are conjoined into one
/// reach entry and active inv props into one inv entry. Slice intervals
/// partition [tmin, tmax] restricted to steps where something is active.
std::vector<ConcreteTask> slice(const std::vector<ConcreteTask>& current);

/// The earliest slice (ties: earliest end, then lowest id) packaged as
/// an atomic task. Throws Error on an empty input.
AtomicTask nextAtomic(const std::vector<ConcreteTask>& slices);

struct ExtractResult
{
  Assignment added;
  std::vector<int> satisfied;
  std::vector<int> progressed;
};

/// Tracks per-step coverage of invariance constraints.
class Coverage
{
public:
  /// Marks [from, to] of constraint `x` covered. Returns true when the
  /// whole interval is now covered.
  bool mark(const ConcreteConstraint& x, int from, int to);
  bool complete(int id) const;
  bool covers(int id, int t) const;

private:
  std::map<int, std::vector<bool>> _steps;
  std::map<int, int> _lo;
};

/// Binds reach sources at the earliest step of the segment, inside the
/// task interval, where all of the task's reach props hold, and marks
/// the covered part of inv sources. Throws Error if a required reach has
/// no witness.
ExtractResult extractTime(const Trajectory& segment, const AtomicTask& task,
  const ResolveOutput& r, Binding& bindings, Coverage& coverage,
  const Environment& env);

enum class ScheduleStatus
{
  Success,
  /// A planner failure after at least one committed segment.
  Partial,
  /// A planner failure before any segment was committed.
  Infeasible
};

std::string to_string(ScheduleStatus s);

struct TraceRecord
{
  int iteration = 0;
  int cursor = 0;
  std::optional<AtomicTask> task;
  std::string status;
  Assignment added;
  std::vector<int> satisfied;
  std::string message;
};

struct FailureReport
{
  std::optional<AtomicTask> task;
  int cursor = 0;
  std::vector<int> active;
  std::string reason;
  double bestPartialMargin = 0.0;
};

struct ScheduleOptions
{
  /// The plan is extended to cover at least this many steps.
  int minLength = 0;
  std::size_t maxIterations = 100000;
  std::size_t enumerationCap = 1000000;
};

struct ScheduleResult
{
  ScheduleStatus status = ScheduleStatus::Success;
  /// Starts at step 0. Empty when nothing was committed.
  Trajectory plan;
  Assignment bindings;
  /// Time and satisfaction variables consistent with the bindings. Only
  /// set on success.
  Assignment witness;
  std::set<int> satisfied;
  PrecedenceOrder order;
  std::vector<TraceRecord> trace;
  std::optional<FailureReport> failure;
  std::size_t atomicTasks = 0;
  std::size_t expanded = 0;

  bool ok() const { return status == ScheduleStatus::Success; }
};

ScheduleResult schedule(const ResolveOutput& r, const Environment& env,
  const State& init, const ScheduleOptions& options = {});

/// Constraints of `r` that do not hold on `plan` under `v`.
std::vector<int> violatedConstraints(const ResolveOutput& r,
  const Assignment& v, const Trajectory& plan, const RegionMap& regions);

} // namespace stlinc

#endif // STLINC__SCHEDULER_HPP
