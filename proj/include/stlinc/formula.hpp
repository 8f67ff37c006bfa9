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


#ifndef STLINC__FORMULA_HPP
#define STLINC__FORMULA_HPP

#include <stlinc/geometry.hpp>

#include <memory>
#include <string>
#include <variant>

namespace stlinc {

/// Closed interval of integer time steps, 0 <= lo <= hi.
struct Interval
{
  int lo = 0;
  int hi = 0;

  Interval() = default;

  /// Throws Error when the invariant does not hold.
  Interval(int lo_, int hi_);

  int width() const { return hi - lo; }
  bool contains(int t) const { return lo <= t && t <= hi; }
  bool operator==(const Interval&) const = default;
};

/// a . position - b > 0
struct Halfplane
{
  Vector2 a = Vector2::Zero();
  double b = 0.0;

  bool operator==(const Halfplane& other) const
  {
    return a == other.a && b == other.b;
  }
};

/// Membership in a named axis-aligned region.
struct RegionRef
{
  std::string name;
  bool operator==(const RegionRef&) const = default;
};

using Predicate = std::variant<Halfplane, RegionRef>;

enum class Op { Pred, Not, And, Or, Eventually, Always };

/// Immutable STL formula. Copies share structure.
class Formula
{
public:
  static Formula pred(Predicate p);
  static Formula region(std::string name);
  static Formula halfplane(const Vector2& a, double b);
  static Formula negate(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula eventually(Interval i, Formula f);
  static Formula always(Interval i, Formula f);

  Op op() const { return _node->op; }
  const Predicate& predicate() const { return _node->pred; }
  const Interval& interval() const { return _node->interval; }

  /// Operand of Not/F/G, left operand of And/Or.
  const Formula& child() const { return *_node->lhs; }
  const Formula& lhs() const { return *_node->lhs; }
  const Formula& rhs() const { return *_node->rhs; }

  bool isTemporal() const
  {
    return op() == Op::Eventually || op() == Op::Always;
  }

  /// True when no temporal operator occurs anywhere in the formula.
  bool isPropositional() const;

  /// Structural equality.
  bool operator==(const Formula& other) const;

private:
  struct Node
  {
    Op op = Op::Pred;
    Predicate pred;
    Interval interval;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node)
  : _node(std::move(node))
  {}

  std::shared_ptr<const Node> _node;
};

/// Concrete syntax accepted by parse(). parse(print(f)) == f.
std::string print(const Formula& f);

/// Push negations down to predicates. Negated halfplanes are flipped
/// (-a, -b); negated regions keep a Not directly above the predicate.
Formula negationNormalForm(const Formula& f);

/// Replace region references by conjunctions of four halfplanes.
Formula desugarRegions(const Formula& f, const RegionMap& regions);

/// Maximum number of temporal operators nested strictly below another
/// temporal operator along any path.
int nestingDepth(const Formula& f);

} // namespace stlinc

#endif // STLINC__FORMULA_HPP
