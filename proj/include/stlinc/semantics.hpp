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


#ifndef STLINC__SEMANTICS_HPP
#define STLINC__SEMANTICS_HPP

#include <stlinc/formula.hpp>
#include <stlinc/trajectory.hpp>

#include <string>
#include <vector>

namespace stlinc {

/// Outcome of validateFragment(). `path` locates the offending node as a
/// dotted walk from the root ("root.lhs.arg").
struct FragmentReport
{
  bool ok = true;
  std::string path;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Negation and disjunction may only sit below every temporal operator.
FragmentReport validateFragment(const Formula& f);

/// Steps of signal needed beyond t to decide the formula at t.
int horizon(const Formula& f);

/// Robustness of a propositional formula at a single position.
double propRobustness(
  const Formula& p, const Vector2& position, const RegionMap& regions);

/// Quantitative semantics. The trajectory must cover [t, t + horizon(f)];
/// throws SignalTooShort otherwise.
double robustness(
  const Formula& f, const Trajectory& s, int t, const RegionMap& regions = {});

/// Robustness of f at every step in [from, to], computed bottom-up.
std::vector<double> robustnessSignal(
  const Formula& f, const Trajectory& s, int from, int to,
  const RegionMap& regions = {});

/// Boolean semantics, evaluated directly rather than through robustness.
/// Predicates hold when their value is strictly positive.
bool satisfies(
  const Formula& f, const Trajectory& s, int t, const RegionMap& regions = {});

} // namespace stlinc

#endif // STLINC__SEMANTICS_HPP
