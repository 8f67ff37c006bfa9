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


#ifndef STLINC__TRAJECTORY_HPP
#define STLINC__TRAJECTORY_HPP

#include <stlinc/geometry.hpp>

#include <vector>

namespace stlinc {

/// Planar agent state.
struct State
{
  Vector2 position = Vector2::Zero();
  Vector2 velocity = Vector2::Zero();

  bool operator==(const State& other) const
  {
    return position == other.position && velocity == other.velocity;
  }
};

/// Discrete-time signal of states starting at step t0. inputs[i] drives
/// states[i] to states[i+1].
struct Trajectory
{
  int t0 = 0;
  std::vector<State> states;
  std::vector<Vector2> inputs;

  bool empty() const { return states.empty(); }
  int size() const { return static_cast<int>(states.size()); }

  /// Last absolute step covered. Only meaningful when non-empty.
  int end() const { return t0 + size() - 1; }

  bool covers(int t) const { return t >= t0 && t <= end(); }

  const State& at(int t) const { return states.at(t - t0); }

  /// A trajectory is well-formed when it has one fewer input than states.
  bool wellFormed() const
  {
    return !states.empty() && inputs.size() + 1 == states.size();
  }

  /// Append `next`, whose first state duplicates our last one.
  void append(const Trajectory& next)
  {
    if (states.empty())
    {
      *this = next;
      return;
    }
    for (std::size_t i = 1; i < next.states.size(); ++i)
    {
      states.push_back(next.states[i]);
      inputs.push_back(next.inputs[i-1]);
    }
  }
};

} // namespace stlinc

#endif // STLINC__TRAJECTORY_HPP
