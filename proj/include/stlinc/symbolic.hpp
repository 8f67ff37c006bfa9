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


#ifndef STLINC__SYMBOLIC_HPP
#define STLINC__SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stlinc {

enum class VarKind
{
  /// Introduced by flattening an F operator; bounded by a TimeVarBound.
  Time,
  /// Time at which a constraint gets satisfied; index is the constraint id.
  Sat
};

struct VarId
{
  VarKind kind = VarKind::Time;
  int index = 0;

  static VarId time(int i) { return {VarKind::Time, i}; }
  static VarId sat(int constraint) { return {VarKind::Sat, constraint}; }

  auto operator<=>(const VarId&) const = default;
  bool operator==(const VarId&) const = default;
};

std::string name(VarId v);

using Assignment = std::map<VarId, int>;

/// Closed integer range [first, second].
using Range = std::pair<int, int>;
using VarRanges = std::map<VarId, Range>;

/// Affine integer expression: constant + sum(coefficient * var).
/// Expressions produced by flattening only carry positive coefficients;
/// differences built for ordering checks may carry negative ones.
class SymExpr
{
public:
  SymExpr() = default;
  SymExpr(int constant) : _constant(constant) {}

  static SymExpr var(VarId v, int offset = 0);

  int constant() const { return _constant; }
  const std::map<VarId, int>& terms() const { return _terms; }

  bool isConstant() const { return _terms.empty(); }
  bool mentions(VarId v) const { return _terms.count(v) > 0; }
  int coefficient(VarId v) const;

  /// The expression with the term for v removed.
  SymExpr without(VarId v) const;

  /// Substitute every assigned variable; unassigned ones stay symbolic.
  SymExpr substitute(const Assignment& a) const;

  /// Throws UnboundVariable if any variable lacks a value.
  int eval(const Assignment& a) const;

  /// Interval-arithmetic bounds. Throws UnboundVariable if a variable has
  /// neither a value nor a range.
  Range bounds(const VarRanges& ranges, const Assignment& a = {}) const;

  SymExpr operator+(const SymExpr& other) const;
  SymExpr operator-(const SymExpr& other) const;
  SymExpr operator+(int k) const;

  bool operator==(const SymExpr& other) const = default;
  auto operator<=>(const SymExpr& other) const = default;

  std::string str() const;

private:
  int _constant = 0;
  std::map<VarId, int> _terms;
};

} // namespace stlinc

#endif // STLINC__SYMBOLIC_HPP
