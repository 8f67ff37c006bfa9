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


#ifndef STLINC__FLATTEN_HPP
#define STLINC__FLATTEN_HPP

#include <stlinc/constraints.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace stlinc {

struct FlattenOptions
{
  /// Give every copy unrolled by G its own clones of the inner time
  /// variables. When false, copies share the inner variables.
  bool freshInnerVars = true;

  /// Upper bound on the number of emitted constraints.
  std::size_t maxConstraints = 10000;
};

struct FlattenOutput
{
  std::vector<TaskConstraint> reach;
  std::vector<TaskConstraint> inv;
  std::vector<TimeVarBound> tc;
  bool freshInnerVars = true;

  /// Reach constraints followed by invariance constraints.
  std::vector<TaskConstraint> all() const;
  const TimeVarBound* bound(VarId v) const;
};

/// Decompose a fragment formula into reachability and invariance
/// constraints plus bounds on the time variables they mention. Throws
/// FragmentViolation when validateFragment() fails.
FlattenOutput flatten(const Formula& f, const FlattenOptions& options = {});

/// Visit every assignment of the bounded variables. Throws
/// EnumerationCapExceeded when the product of the range sizes exceeds cap.
void forEachAssignment(
  const std::vector<TimeVarBound>& tc, std::size_t cap,
  const std::function<void(const Assignment&)>& visit);

std::vector<Assignment> enumerateAssignments(
  const std::vector<TimeVarBound>& tc, std::size_t cap = 10000);

/// Size of the assignment space, saturating at SIZE_MAX.
std::size_t assignmentCount(const std::vector<TimeVarBound>& tc);

/// Human-readable report, one constraint per line, followed by the bounds.
std::string report(const FlattenOutput& out);

} // namespace stlinc

#endif // STLINC__FLATTEN_HPP
