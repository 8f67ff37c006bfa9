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


#ifndef STLINC__RESOLVE_HPP
#define STLINC__RESOLVE_HPP

#include <stlinc/flatten.hpp>

#include <functional>
#include <string>
#include <vector>

namespace stlinc {

enum class WindowRole
{
  /// var is the step at which a reachability constraint is witnessed.
  ReachTime,
  /// var is the step at which an invariance constraint completes.
  InvCompletion
};

/// Bounds on the satisfaction time of a constraint: lo <= var <= hi.
struct SatWindow
{
  SymExpr lo;
  SymExpr hi;
  VarId var;
  WindowRole role = WindowRole::ReachTime;

  /// For InvCompletion windows: the step at which the invariance segment
  /// begins (the paired reach witness) and the step it completes at.
  SymExpr begin;
  SymExpr end;

  bool isPoint() const { return lo == hi; }
};

struct ResolveOutput
{
  std::vector<TaskConstraint> reach;
  std::vector<TaskConstraint> inv;
  std::vector<SatWindow> tcPrime;

  /// Time-variable bounds carried over from flattening. Residual time
  /// variables only appear inside tcPrime.
  std::vector<TimeVarBound> tc;

  std::vector<TaskConstraint> all() const;
  const TaskConstraint* find(int id) const;
  std::vector<const SatWindow*> windowsOf(VarId var) const;
};

struct FGResult
{
  TaskConstraint reach;
  TaskConstraint inv;
  SatWindow reachWindow;
  SatWindow invWindow;
};

/// Reach-and-stay rewrite of an invariance constraint (t+l, t+h, p) under
/// t in [a, b]: reach (a+l, b+l, p) with a fresh id, then the original id
/// becomes (s, s + h - l, p) where s is the reach's satisfaction time.
FGResult applyFG(const TaskConstraint& x, const TimeVarBound& tc, int freshId);

struct FFResult
{
  TaskConstraint reach;
  SatWindow window;
};

/// Interval-sum rewrite of a reachability constraint (t+l, t+h, p) under
/// t in [a, b]: (l+a, h+b, p), keeping the id.
FFResult applyFF(const TaskConstraint& x, const TimeVarBound& tc);

/// Eliminate time variables from constraint bounds, deepest first.
ResolveOutput resolve(const FlattenOutput& in);

/// Visit every assignment of time variables (within their bounds) and of
/// windowed satisfaction variables (within all their windows).
void forEachWindowAssignment(
  const ResolveOutput& r, std::size_t cap,
  const std::function<void(const Assignment&)>& visit);

std::string report(const ResolveOutput& r);

} // namespace stlinc

#endif // STLINC__RESOLVE_HPP
