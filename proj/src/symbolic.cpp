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


#include <stlinc/symbolic.hpp>
#include <stlinc/errors.hpp>

#include <sstream>

namespace stlinc {

//==============================================================================
std::string name(VarId v)
{
  return (v.kind == VarKind::Time ? "t" : "s") + std::to_string(v.index);
}

//==============================================================================
SymExpr SymExpr::var(VarId v, int offset)
{
  SymExpr e(offset);
  e._terms[v] = 1;
  return e;
}

//==============================================================================
int SymExpr::coefficient(VarId v) const
{
  const auto it = _terms.find(v);
  return it == _terms.end() ? 0 : it->second;
}

//==============================================================================
SymExpr SymExpr::without(VarId v) const
{
  SymExpr e = *this;
  e._terms.erase(v);
  return e;
}

//==============================================================================
SymExpr SymExpr::substitute(const Assignment& a) const
{
  SymExpr e(_constant);
  for (const auto& [v, c] : _terms)
  {
    const auto it = a.find(v);
    if (it == a.end())
      e._terms[v] = c;
    else
      e._constant += c * it->second;
  }
  return e;
}

//==============================================================================
int SymExpr::eval(const Assignment& a) const
{
  int value = _constant;
  for (const auto& [v, c] : _terms)
  {
    const auto it = a.find(v);
    if (it == a.end())
      throw UnboundVariable("no value for " + name(v) + " in " + str());
    value += c * it->second;
  }
  return value;
}

//==============================================================================
Range SymExpr::bounds(const VarRanges& ranges, const Assignment& a) const
{
  int lo = _constant;
  int hi = _constant;
  for (const auto& [v, c] : _terms)
  {
    const auto fixed = a.find(v);
    if (fixed != a.end())
    {
      lo += c * fixed->second;
      hi += c * fixed->second;
      continue;
    }

    const auto it = ranges.find(v);
    if (it == ranges.end())
      throw UnboundVariable("no range for " + name(v) + " in " + str());

    const auto [rlo, rhi] = it->second;
    if (c >= 0)
    {
      lo += c * rlo;
      hi += c * rhi;
    }
    else
    {
      lo += c * rhi;
      hi += c * rlo;
    }
  }
  return {lo, hi};
}

//==============================================================================
SymExpr SymExpr::operator+(const SymExpr& other) const
{
  SymExpr e = *this;
  e._constant += other._constant;
  for (const auto& [v, c] : other._terms)
  {
    const int sum = (e._terms[v] += c);
    if (sum == 0)
      e._terms.erase(v);
  }
  return e;
}

//==============================================================================
SymExpr SymExpr::operator-(const SymExpr& other) const
{
  SymExpr e = *this;
  e._constant -= other._constant;
  for (const auto& [v, c] : other._terms)
  {
    const int diff = (e._terms[v] -= c);
    if (diff == 0)
      e._terms.erase(v);
  }
  return e;
}

//==============================================================================
SymExpr SymExpr::operator+(int k) const
{
  SymExpr e = *this;
  e._constant += k;
  return e;
}

//==============================================================================
std::string SymExpr::str() const
{
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : _terms)
  {
    if (!first)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << "-";
    first = false;

    const int mag = c < 0 ? -c : c;
    if (mag != 1)
      out << mag << "*";
    out << name(v);
  }

  if (first)
    out << _constant;
  else if (_constant > 0)
    out << " + " << _constant;
  else if (_constant < 0)
    out << " - " << -_constant;

  return out.str();
}

} // namespace stlinc
