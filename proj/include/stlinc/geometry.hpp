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


#ifndef STLINC__GEOMETRY_HPP
#define STLINC__GEOMETRY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <string>

namespace stlinc {

using Vector2 = Eigen::Vector2d;

/// Axis-aligned rectangle [min.x, max.x] x [min.y, max.y].
struct Rect
{
  Vector2 min = Vector2::Zero();
  Vector2 max = Vector2::Zero();

  /// Signed depth of a point inside the box: the smallest of the four
  /// halfplane margins. Positive strictly inside, zero on the boundary.
  double margin(const Vector2& p) const
  {
    return std::min({p.x() - min.x(), max.x() - p.x(),
        p.y() - min.y(), max.y() - p.y()});
  }

  bool contains(const Rect& other) const
  {
    return (min.array() <= other.min.array()).all()
      && (other.max.array() <= max.array()).all();
  }

  bool operator==(const Rect& other) const
  {
    return min == other.min && max == other.max;
  }
};

enum class RegionRole { Region, Obstacle };

struct Region
{
  Rect box;
  RegionRole role = RegionRole::Region;
};

/// Named regions that region-membership predicates resolve against.
using RegionMap = std::map<std::string, Region>;

} // namespace stlinc

#endif // STLINC__GEOMETRY_HPP
