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


#ifndef STLINC__ENVIRONMENT_HPP
#define STLINC__ENVIRONMENT_HPP

#include <stlinc/formula.hpp>
#include <stlinc/geometry.hpp>
#include <stlinc/trajectory.hpp>

#include <vector>

namespace stlinc {

/// Discrete double integrator with a finite acceleration alphabet.
struct Dynamics
{
  double dt = 1.0;
  std::vector<Vector2> controls;
  /// Per-axis velocity clamp.
  double vmax = 2.0;

  /// Every pair (ax, ay) drawn from `levels`, ax varying slowest.
  static Dynamics grid(const std::vector<double>& levels, double vmax,
    double dt = 1.0);
};

/// Resolution used to deduplicate search states. States themselves are
/// never rounded.
struct Quantization
{
  double position = 0.5;
  double velocity = 0.5;
};

struct Environment
{
  Rect bounds;
  RegionMap regions;
  Dynamics dynamics = Dynamics::grid({-1.0, 0.0, 1.0}, 2.0);
  Quantization quantization;

  /// Minimum robustness treated as strict satisfaction.
  double epsilon = 1e-6;

  /// Initial state used by the pipeline.
  State start;

  /// Throws Error when regions leave the bounds, the control alphabet is
  /// empty or lacks the zero control, or the start lies outside.
  void validate() const;

  bool inBounds(const Vector2& p) const { return bounds.margin(p) >= 0.0; }
};

/// position' = position + velocity dt + control dt^2 / 2
/// velocity' = clamp(velocity + control dt, -vmax, vmax)
State step(const State& state, const Vector2& control, const Environment& env);

/// Robustness of a propositional formula at the state's position.
double propRobustness(
  const Formula& p, const State& state, const Environment& env);

} // namespace stlinc

#endif // STLINC__ENVIRONMENT_HPP
