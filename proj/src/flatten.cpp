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


#include <stlinc/flatten.hpp>
#include <stlinc/errors.hpp>
#include <stlinc/semantics.hpp>

#include <limits>
#include <set>
#include <sstream>

namespace stlinc {

//==============================================================================
std::string to_string(ConstraintKind k)
{
  return k == ConstraintKind::Reach ? "reach" : "inv";
}

//==============================================================================
ConcreteConstraint instantiate(const TaskConstraint& x, const Assignment& v)
{
  return {x.id, x.kind, x.lo.eval(v), x.hi.eval(v), x.prop};
}

//==============================================================================
bool holds(
  const ConcreteConstraint& c, const Trajectory& s, const RegionMap& regions)
{
  if (c.lo > c.hi)
    return c.kind == ConstraintKind::Inv;

  if (!s.covers(c.lo) || !s.covers(c.hi))
  {
    throw SignalTooShort("constraint " + std::to_string(c.id) + " spans ["
      + std::to_string(c.lo) + "," + std::to_string(c.hi)
      + "] beyond the signal");
  }

  for (int t = c.lo; t <= c.hi; ++t)
  {
    const bool ok = propRobustness(c.prop, s.at(t).position, regions) > 0.0;
    if (c.kind == ConstraintKind::Reach && ok)
      return true;
    if (c.kind == ConstraintKind::Inv && !ok)
      return false;
  }
  return c.kind == ConstraintKind::Inv;
}

//==============================================================================
bool holdsUnder(
  const TaskConstraint& x, const Assignment& v, const Trajectory& s,
  const RegionMap& regions)
{
  const auto c = instantiate(x, v);
  if (x.isReach())
  {
    const auto sat = v.find(x.satVar());
    if (sat != v.end())
    {
      const int w = sat->second;
      if (w < c.lo || w > c.hi || !s.covers(w))
        return false;
      return propRobustness(c.prop, s.at(w).position, regions) > 0.0;
    }
  }
  return holds(c, s, regions);
}

//==============================================================================
std::string describe(const TaskConstraint& x)
{
  std::ostringstream out;
  out << x.id << " " << to_string(x.kind) << " [" << x.lo.str() << ", "
      << x.hi.str() << "] " << print(x.prop);
  return out.str();
}

//==============================================================================
std::vector<TaskConstraint> FlattenOutput::all() const
{
  std::vector<TaskConstraint> out = reach;
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

//==============================================================================
const TimeVarBound* FlattenOutput::bound(VarId v) const
{
  for (const auto& b : tc)
  {
    if (b.var == v)
      return &b;
  }
  return nullptr;
}

namespace {

struct Partial
{
  std::vector<TaskConstraint> reach;
  std::vector<TaskConstraint> inv;
  std::vector<TimeVarBound> tc;
};

//==============================================================================
SymExpr rename(const SymExpr& e, const std::map<VarId, VarId>& renames)
{
  SymExpr out(e.constant());
  for (const auto& [v, c] : e.terms())
  {
    const auto it = renames.find(v);
    const VarId target = it == renames.end() ? v : it->second;
    for (int i = 0; i < c; ++i)
      out = out + SymExpr::var(target);
  }
  return out;
}

//==============================================================================
class Flattener
{
public:
  explicit Flattener(const FlattenOptions& options)
  : _options(options)
  {}

  Partial run(const Formula& f, int depth)
  {
    if (f.isPropositional())
    {
      Partial p;
      TaskConstraint x;
      x.kind = ConstraintKind::Reach;
      x.lo = SymExpr(0);
      x.hi = SymExpr(0);
      x.prop = negationNormalForm(f);
      p.reach.push_back(std::move(x));
      count(1);
      return p;
    }

    switch (f.op())
    {
      case Op::And:
      {
        Partial l = run(f.lhs(), depth + 1);
        Partial r = run(f.rhs(), depth + 1);
        append(l.reach, r.reach);
        append(l.inv, r.inv);
        append(l.tc, r.tc);
        return l;
      }
      case Op::Eventually:
        return eventually(f, depth);
      case Op::Always:
        return always(f, depth);
      default:
        throw FragmentViolation(
          "unexpected operator below the propositional layer");
    }
  }

private:
  template<typename T>
  static void append(std::vector<T>& into, std::vector<T>& from)
  {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
      std::make_move_iterator(from.end()));
  }

  void count(std::size_t n)
  {
    _emitted += n;
    if (_emitted > _options.maxConstraints)
    {
      throw Error("flattening exceeds the cap of "
        + std::to_string(_options.maxConstraints) + " constraints");
    }
  }

  Partial eventually(const Formula& f, int depth)
  {
    const int preorder = _preorder++;
    Partial p = run(f.child(), depth + 1);

    const VarId t = VarId::time(++_vars);
    const SymExpr shift = SymExpr::var(t);
    for (auto& x : p.reach)
    {
      x.lo = x.lo + shift;
      x.hi = x.hi + shift;
    }
    for (auto& x : p.inv)
    {
      x.lo = x.lo + shift;
      x.hi = x.hi + shift;
    }
    p.tc.push_back({f.interval().lo, f.interval().hi, t, depth, preorder});
    return p;
  }

  Partial always(const Formula& f, int depth)
  {
    ++_preorder;
    Partial child = run(f.child(), depth + 1);
    const int a = f.interval().lo;
    const int b = f.interval().hi;

    Partial p;
    p.tc = child.tc;

    for (auto& x : child.inv)
    {
      x.lo = x.lo + a;
      x.hi = x.hi + b;
      p.inv.push_back(std::move(x));
    }

    std::vector<TaskConstraint> symbolic;
    for (auto& x : child.reach)
    {
      if (x.lo.isConstant() && x.lo == x.hi)
      {
        // Every copy (k + l, k + l, p) is concrete: one invariance over
        // [a + l, b + l] says the same thing.
        TaskConstraint y = std::move(x);
        y.kind = ConstraintKind::Inv;
        y.lo = y.lo + a;
        y.hi = y.hi + b;
        p.inv.push_back(std::move(y));
        continue;
      }
      symbolic.push_back(std::move(x));
    }

    if (!symbolic.empty())
    {
      count(symbolic.size() * static_cast<std::size_t>(b - a + 1));

      std::set<VarId> used;
      for (const auto& x : symbolic)
      {
        for (const auto& [v, c] : x.lo.terms())
          used.insert(v);
        for (const auto& [v, c] : x.hi.terms())
          used.insert(v);
      }

      for (int k = a; k <= b; ++k)
      {
        std::map<VarId, VarId> renames;
        if (_options.freshInnerVars)
        {
          for (const auto& bound : child.tc)
          {
            if (!used.count(bound.var))
              continue;
            const VarId clone = VarId::time(++_vars);
            renames[bound.var] = clone;
            TimeVarBound nb = bound;
            nb.var = clone;
            p.tc.push_back(nb);
          }
        }

        for (const auto& x : symbolic)
        {
          TaskConstraint y = x;
          y.lo = rename(x.lo, renames) + k;
          y.hi = rename(x.hi, renames) + k;
          p.reach.push_back(std::move(y));
        }
      }
    }

    prune_unused(p);
    return p;
  }

  static void prune_unused(Partial& p)
  {
    std::set<VarId> used;
    auto collect = [&](const std::vector<TaskConstraint>& xs)
    {
      for (const auto& x : xs)
      {
        for (const auto& [v, c] : x.lo.terms())
          used.insert(v);
        for (const auto& [v, c] : x.hi.terms())
          used.insert(v);
      }
    };
    collect(p.reach);
    collect(p.inv);

    std::vector<TimeVarBound> kept;
    for (const auto& b : p.tc)
    {
      if (used.count(b.var))
        kept.push_back(b);
    }
    p.tc = std::move(kept);
  }

  FlattenOptions _options;
  int _vars = 0;
  int _preorder = 0;
  std::size_t _emitted = 0;
};

} // anonymous namespace

//==============================================================================
FlattenOutput flatten(const Formula& f, const FlattenOptions& options)
{
  const auto fragment = validateFragment(f);
  if (!fragment)
  {
    throw FragmentViolation(
      fragment.message + " at " + fragment.path);
  }

  Partial p = Flattener(options).run(f, 0);

  FlattenOutput out;
  out.freshInnerVars = options.freshInnerVars;
  int id = 0;
  for (auto& x : p.reach)
  {
    x.id = ++id;
    out.reach.push_back(std::move(x));
  }
  for (auto& x : p.inv)
  {
    x.id = ++id;
    out.inv.push_back(std::move(x));
  }
  out.tc = std::move(p.tc);
  return out;
}

//==============================================================================
std::size_t assignmentCount(const std::vector<TimeVarBound>& tc)
{
  std::size_t total = 1;
  for (const auto& b : tc)
  {
    const auto width = static_cast<std::size_t>(b.hi - b.lo + 1);
    if (total > std::numeric_limits<std::size_t>::max() / width)
      return std::numeric_limits<std::size_t>::max();
    total *= width;
  }
  return total;
}

//==============================================================================
void forEachAssignment(
  const std::vector<TimeVarBound>& tc, std::size_t cap,
  const std::function<void(const Assignment&)>& visit)
{
  const std::size_t total = assignmentCount(tc);
  if (total > cap)
    throw EnumerationCapExceeded(total, cap);

  Assignment a;
  for (const auto& b : tc)
    a[b.var] = b.lo;

  for (;;)
  {
    visit(a);

    // Odometer increment; the last bound varies fastest.
    std::size_t i = tc.size();
    while (i > 0)
    {
      --i;
      int& value = a[tc[i].var];
      if (value < tc[i].hi)
      {
        ++value;
        break;
      }
      value = tc[i].lo;
      if (i == 0)
        return;
    }
    if (tc.empty())
      return;
  }
}

//==============================================================================
std::vector<Assignment> enumerateAssignments(
  const std::vector<TimeVarBound>& tc, std::size_t cap)
{
  std::vector<Assignment> out;
  forEachAssignment(tc, cap, [&](const Assignment& a) { out.push_back(a); });
  return out;
}

//==============================================================================
std::string report(const FlattenOutput& out)
{
  std::ostringstream s;
  for (const auto& x : out.all())
    s << describe(x) << "\n";
  for (const auto& b : out.tc)
    s << "tc " << name(b.var) << " in [" << b.lo << ", " << b.hi << "]\n";
  return s.str();
}

} // namespace stlinc
