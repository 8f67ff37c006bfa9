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


#ifndef STLINC__CONSTRAINTS_HPP
#define STLINC__CONSTRAINTS_HPP

#include <stlinc/formula.hpp>
#include <stlinc/symbolic.hpp>
#include <stlinc/trajectory.hpp>

#include <string>
#include <vector>

namespace stlinc {

enum class ConstraintKind { Reach, Inv };

std::string to_string(ConstraintKind k);

/// Reachability (prop holds at some step of [lo, hi]) or invariance (prop
/// holds at every step of [lo, hi]) over symbolic bounds.
struct TaskConstraint
{
  int id = 0;
  ConstraintKind kind = ConstraintKind::Reach;
  SymExpr lo;
  SymExpr hi;
  Formula prop = Formula::region("");

  VarId satVar() const { return VarId::sat(id); }
  bool isReach() const { return kind == ConstraintKind::Reach; }
};

/// (lo, hi, var): var takes a value in [lo, hi].
struct TimeVarBound
{
  int lo = 0;
  int hi = 0;
  VarId var;

  /// Depth of the introducing F node in the AST.
  int depth = 0;
  /// Pre-order position of the introducing F node.
  int preorder = 0;
};

/// A constraint with its symbolic bounds evaluated.
struct ConcreteConstraint
{
  int id = 0;
  ConstraintKind kind = ConstraintKind::Reach;
  int lo = 0;
  int hi = 0;
  Formula prop = Formula::region("");
};

/// Evaluate the bounds of x under v. Throws UnboundVariable.
ConcreteConstraint instantiate(const TaskConstraint& x, const Assignment& v);

/// Whether a concrete constraint holds on s. Steps of [lo, hi] outside the
/// signal are treated as a signal-too-short error.
bool holds(
  const ConcreteConstraint& c, const Trajectory& s, const RegionMap& regions);

/// Like holds(instantiate(x, v), s) except that a reachability constraint
/// whose satisfaction variable is assigned must be witnessed exactly at
/// that step.
bool holdsUnder(
  const TaskConstraint& x, const Assignment& v, const Trajectory& s,
  const RegionMap& regions);

/// One line: `id kind [lo, hi] prop`
std::string describe(const TaskConstraint& x);

} // namespace stlinc

#endif // STLINC__CONSTRAINTS_HPP
