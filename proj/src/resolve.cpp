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


#include <stlinc/resolve.hpp>
#include <stlinc/errors.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace stlinc {

//==============================================================================
std::vector<TaskConstraint> ResolveOutput::all() const
{
  std::vector<TaskConstraint> out = reach;
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

//==============================================================================
const TaskConstraint* ResolveOutput::find(int id) const
{
  for (const auto& x : reach)
  {
    if (x.id == id)
      return &x;
  }
  for (const auto& x : inv)
  {
    if (x.id == id)
      return &x;
  }
  return nullptr;
}

//==============================================================================
std::vector<const SatWindow*> ResolveOutput::windowsOf(VarId var) const
{
  std::vector<const SatWindow*> out;
  for (const auto& w : tcPrime)
  {
    if (w.var == var)
      out.push_back(&w);
  }
  return out;
}

namespace {

//==============================================================================
void require_unit(const TaskConstraint& x, VarId t)
{
  if (x.lo.coefficient(t) != 1 || x.hi.coefficient(t) != 1)
  {
    throw MalformedBound("constraint " + std::to_string(x.id) + " ["
      + x.lo.str() + ", " + x.hi.str() + "] does not mention " + name(t)
      + " with coefficient 1 in both bounds");
  }
}

} // anonymous namespace

//==============================================================================
FGResult applyFG(const TaskConstraint& x, const TimeVarBound& tc, int freshId)
{
  if (x.kind != ConstraintKind::Inv)
    throw MalformedBound("applyFG expects an invariance constraint");
  require_unit(x, tc.var);

  const SymExpr l = x.lo.without(tc.var);
  const SymExpr h = x.hi.without(tc.var);
  const SymExpr stay = h - l;
  if (!stay.isConstant() || stay.constant() < 0)
  {
    throw MalformedBound("constraint " + std::to_string(x.id)
      + " has a non-constant or negative width " + stay.str());
  }

  FGResult r;
  r.reach.id = freshId;
  r.reach.kind = ConstraintKind::Reach;
  r.reach.lo = l + tc.lo;
  r.reach.hi = l + tc.hi;
  r.reach.prop = x.prop;

  const SymExpr start = SymExpr::var(r.reach.satVar());
  r.inv.id = x.id;
  r.inv.kind = ConstraintKind::Inv;
  r.inv.lo = start;
  r.inv.hi = start + stay.constant();
  r.inv.prop = x.prop;

  const SymExpr t = SymExpr::var(tc.var);
  r.reachWindow.lo = t + l;
  r.reachWindow.hi = t + l;
  r.reachWindow.var = r.reach.satVar();
  r.reachWindow.role = WindowRole::ReachTime;

  // A zero-width stay completes on the witness step itself.
  r.invWindow.lo = stay.constant() == 0 ? t + h : t + l + 1;
  r.invWindow.hi = t + h;
  r.invWindow.var = r.inv.satVar();
  r.invWindow.role = WindowRole::InvCompletion;
  r.invWindow.begin = t + l;
  r.invWindow.end = t + h;
  return r;
}

//==============================================================================
FFResult applyFF(const TaskConstraint& x, const TimeVarBound& tc)
{
  if (x.kind != ConstraintKind::Reach)
    throw MalformedBound("applyFF expects a reachability constraint");
  require_unit(x, tc.var);

  FFResult r;
  r.reach = x;
  r.reach.lo = x.lo.without(tc.var) + tc.lo;
  r.reach.hi = x.hi.without(tc.var) + tc.hi;

  r.window.lo = x.lo;
  r.window.hi = x.hi;
  r.window.var = x.satVar();
  r.window.role = WindowRole::ReachTime;
  return r;
}

//==============================================================================
ResolveOutput resolve(const FlattenOutput& in)
{
  ResolveOutput out;
  out.reach = in.reach;
  out.inv = in.inv;
  out.tc = in.tc;

  std::set<VarId> known;
  for (const auto& b : in.tc)
    known.insert(b.var);
  int next_id = 0;
  for (const auto& x : in.all())
  {
    next_id = std::max(next_id, x.id);
    for (const auto* e : {&x.lo, &x.hi})
    {
      for (const auto& [v, c] : e->terms())
      {
        if (!known.count(v))
        {
          throw UnboundVariable("constraint " + std::to_string(x.id)
            + " mentions " + name(v) + " which has no bound");
        }
      }
    }
  }

  std::vector<TimeVarBound> order = in.tc;
  std::stable_sort(order.begin(), order.end(),
    [](const TimeVarBound& a, const TimeVarBound& b)
    {
      if (a.depth != b.depth)
        return a.depth > b.depth;
      if (a.preorder != b.preorder)
        return a.preorder < b.preorder;
      return a.var < b.var;
    });

  auto mentions = [](const TaskConstraint& x, VarId t)
  {
    return x.lo.mentions(t) || x.hi.mentions(t);
  };

  for (const auto& tc : order)
  {
    std::vector<std::size_t> inv_t;
    std::vector<std::size_t> reach_t;
    for (std::size_t i = 0; i < out.inv.size(); ++i)
    {
      if (mentions(out.inv[i], tc.var))
        inv_t.push_back(i);
    }
    for (std::size_t i = 0; i < out.reach.size(); ++i)
    {
      if (mentions(out.reach[i], tc.var))
        reach_t.push_back(i);
    }

    for (const std::size_t i : inv_t)
    {
      auto r = applyFG(out.inv[i], tc, ++next_id);
      out.reach.push_back(std::move(r.reach));
      out.inv[i] = std::move(r.inv);
      out.tcPrime.push_back(std::move(r.reachWindow));
      out.tcPrime.push_back(std::move(r.invWindow));
    }

    for (const std::size_t i : reach_t)
    {
      auto r = applyFF(out.reach[i], tc);
      out.reach[i] = std::move(r.reach);
      out.tcPrime.push_back(std::move(r.window));
    }
  }

  return out;
}

//==============================================================================
void forEachWindowAssignment(
  const ResolveOutput& r, std::size_t cap,
  const std::function<void(const Assignment&)>& visit)
{
  std::vector<VarId> sat_vars;
  for (const auto& w : r.tcPrime)
  {
    if (std::find(sat_vars.begin(), sat_vars.end(), w.var) == sat_vars.end())
      sat_vars.push_back(w.var);
    for (const auto* e : {&w.lo, &w.hi})
    {
      for (const auto& [v, c] : e->terms())
      {
        if (v.kind != VarKind::Time)
          throw MalformedBound("window for " + name(w.var)
            + " depends on another satisfaction variable");
      }
    }
  }

  std::size_t visited = 0;
  forEachAssignment(r.tc, cap, [&](const Assignment& times)
  {
    std::vector<Range> ranges;
    for (const VarId s : sat_vars)
    {
      Range range{std::numeric_limits<int>::min(), std::numeric_limits<int>::max()};
      for (const auto* w : r.windowsOf(s))
      {
        range.first = std::max(range.first, w->lo.eval(times));
        range.second = std::min(range.second, w->hi.eval(times));
      }
      if (range.first > range.second)
        return;
      ranges.push_back(range);
    }

    Assignment a = times;
    for (std::size_t i = 0; i < sat_vars.size(); ++i)
      a[sat_vars[i]] = ranges[i].first;

    for (;;)
    {
      if (++visited > cap)
        throw EnumerationCapExceeded(visited, cap);
      visit(a);

      std::size_t i = sat_vars.size();
      bool done = true;
      while (i > 0)
      {
        --i;
        int& value = a[sat_vars[i]];
        if (value < ranges[i].second)
        {
          ++value;
          done = false;
          break;
        }
        value = ranges[i].first;
      }
      if (done)
        return;
    }
  });
}

//==============================================================================
std::string report(const ResolveOutput& r)
{
  std::ostringstream s;
  for (const auto& x : r.all())
    s << describe(x) << "\n";
  for (const auto& w : r.tcPrime)
  {
    s << "tc_prime " << name(w.var) << " in [" << w.lo.str() << ", "
      << w.hi.str() << "]\n";
  }
  return s.str();
}

} // namespace stlinc
