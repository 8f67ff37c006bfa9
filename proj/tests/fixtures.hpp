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


#ifndef STLINC__TESTS__FIXTURES_HPP
#define STLINC__TESTS__FIXTURES_HPP

#include <stlinc/environment.hpp>

namespace stlinc::test {

/// 10 x 10 workspace with lowercase regions r1, r2, r3, a start at (1, 1)
/// and the shipped dynamics.
inline Environment runningExampleEnvironment()
{
  Environment env;
  env.bounds = Rect{Vector2(0, 0), Vector2(10, 10)};
  env.regions["r1"] = Region{Rect{Vector2(1, 5), Vector2(3, 7)}};
  env.regions["r2"] = Region{Rect{Vector2(5, 7), Vector2(7, 9)}};
  env.regions["r3"] = Region{Rect{Vector2(6, 1), Vector2(8, 3)}};
  env.regions["o1"] = Region{Rect{Vector2(4, 3), Vector2(6, 5)},
    RegionRole::Obstacle};
  env.dynamics = Dynamics::grid({-1.0, 0.0, 1.0}, 1.0);
  env.start.position = Vector2(1, 1);
  return env;
}

} // namespace stlinc::test

#endif // STLINC__TESTS__FIXTURES_HPP
