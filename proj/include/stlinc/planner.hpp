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


#ifndef STLINC__PLANNER_HPP
#define STLINC__PLANNER_HPP

#include <stlinc/constraints.hpp>
#include <stlinc/environment.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stlinc {

struct TaskSource
{
  int id = 0;
  ConstraintKind kind = ConstraintKind::Reach;
};

/// F[a,b](reach) and G[a,b](inv) over absolute steps. Either part may be
/// absent. An optional reach is attempted but not required.
struct AtomicTask
{
  Interval interval{0, 0};
  std::optional<Formula> reachProp;
  std::optional<Formula> invProp;
  bool reachOptional = false;
  std::vector<TaskSource> sources;

  bool requiresReach() const { return reachProp && !reachOptional; }

  /// The task as a formula anchored at `t0`, with the interval end clipped
  /// to `end`. Returns nullopt when neither part is present.
  std::optional<Formula> formula(int t0, int end, bool withReach) const;
};

std::string describe(const AtomicTask& task);

struct PlanSegment
{
  /// Starts at the planning cursor with the given start state.
  Trajectory trajectory;
  std::optional<int> reachWitness;
  /// Minimum strict margin over the task's obligations along the segment.
  double robustnessMargin = 0.0;
};

struct PlanResult
{
  std::optional<PlanSegment> segment;
  std::string failure;
  /// Best inv margin achieved by any partial path before failure.
  double bestPartialMargin = 0.0;
  /// Number of distinct search nodes expanded.
  std::size_t expanded = 0;

  bool ok() const { return segment.has_value(); }
};

/// Layered search over the time-expanded graph from `start` at step
/// `cursor`. A node survives when it lies in bounds and, inside the task
/// interval, keeps the inv margin above epsilon. The segment ends at the
/// earliest reach witness (highest margin, then lowest speed) or, without
/// a required reach, at the interval end. Requires cursor <= interval.hi.
PlanResult plan(const AtomicTask& task, const State& start, int cursor,
  const Environment& env);

struct SegmentCheck
{
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Replays the dynamics and re-evaluates the task with the Boolean
/// semantics over the covered part of its interval.
SegmentCheck validateSegment(const PlanSegment& segment,
  const AtomicTask& task, const Environment& env);

} // namespace stlinc

#endif // STLINC__PLANNER_HPP
