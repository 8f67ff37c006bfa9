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


#include <stlinc/environment.hpp>
#include <stlinc/errors.hpp>
#include <stlinc/semantics.hpp>

namespace stlinc {

//==============================================================================
Dynamics Dynamics::grid(const std::vector<double>& levels, double vmax,
  double dt)
{
  Dynamics d;
  d.dt = dt;
  d.vmax = vmax;
  for (const double ax : levels)
  {
    for (const double ay : levels)
      d.controls.emplace_back(ax, ay);
  }
  return d;
}

//==============================================================================
void Environment::validate() const
{
  if (!(bounds.min.array() < bounds.max.array()).all())
    throw Error("workspace bounds are empty");

  for (const auto& [name, region] : regions)
  {
    if (!(region.box.min.array() <= region.box.max.array()).all())
      throw Error("region '" + name + "' is empty");
    if (!bounds.contains(region.box))
      throw Error("region '" + name + "' leaves the workspace");
  }

  if (dynamics.controls.empty())
    throw Error("control alphabet is empty");

  bool has_zero = false;
  for (const auto& u : dynamics.controls)
    has_zero = has_zero || u.isZero();
  if (!has_zero)
    throw Error("control alphabet lacks the zero control");

  if (dynamics.dt <= 0.0 || dynamics.vmax < 0.0)
    throw Error("dynamics parameters must be positive");

  if (quantization.position <= 0.0 || quantization.velocity <= 0.0)
    throw Error("quantization resolutions must be positive");

  if (!inBounds(start.position))
    throw Error("start position lies outside the workspace");
}

//==============================================================================
State step(const State& state, const Vector2& control, const Environment& env)
{
  const double dt = env.dynamics.dt;
  const double vmax = env.dynamics.vmax;

  State next;
  next.position = state.position + state.velocity * dt
    + 0.5 * control * dt * dt;
  next.velocity = (state.velocity + control * dt).cwiseMax(-vmax).cwiseMin(vmax);
  return next;
}

//==============================================================================
double propRobustness(
  const Formula& p, const State& state, const Environment& env)
{
  return propRobustness(p, state.position, env.regions);
}

} // namespace stlinc
