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


#include <stlinc/scheduler.hpp>
#include <stlinc/errors.hpp>
#include <stlinc/semantics.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace stlinc {

//==============================================================================
std::vector<int> PrecedenceOrder::predecessors(int b) const
{
  std::vector<int> out;
  for (const auto& [x, y] : pairs)
  {
    if (y == b)
      out.push_back(x);
  }
  return out;
}

//==============================================================================
std::vector<int> PrecedenceOrder::blockers(int b) const
{
  std::vector<int> out = predecessors(b);
  for (const auto& [x, y] : weak)
  {
    if (y == b)
      out.push_back(x);
  }
  return out;
}

namespace {

//==============================================================================
VarRanges time_ranges(const std::vector<TimeVarBound>& tc)
{
  VarRanges ranges;
  for (const auto& b : tc)
    ranges[b.var] = {b.lo, b.hi};
  return ranges;
}

//==============================================================================
Range hull(const SymExpr& lo, const SymExpr& hi, const VarRanges& ranges)
{
  return {lo.bounds(ranges).first, hi.bounds(ranges).second};
}

//==============================================================================
bool concrete(const TaskConstraint& x, const Assignment& v, Range& out)
{
  const SymExpr lo = x.lo.substitute(v);
  const SymExpr hi = x.hi.substitute(v);
  if (!lo.isConstant() || !hi.isConstant())
    return false;
  out = {lo.constant(), hi.constant()};
  return true;
}

} // anonymous namespace

//==============================================================================
PrecedenceOrder computeOrder(const ResolveOutput& r)
{
  VarRanges ranges = time_ranges(r.tc);
  const auto all = r.all();

  // Satisfaction variables range over their constraint's interval. Bounds
  // may mention other satisfaction variables, so iterate to a fixpoint.
  for (std::size_t pass = 0; pass <= all.size(); ++pass)
  {
    bool changed = false;
    for (const auto& x : all)
    {
      if (ranges.count(x.satVar()))
        continue;
      try
      {
        ranges[x.satVar()] = hull(x.lo, x.hi, ranges);
        changed = true;
      }
      catch (const UnboundVariable&)
      {
      }
    }
    if (!changed)
      break;
  }

  struct Span
  {
    std::vector<SymExpr> lower;
    std::vector<SymExpr> upper;
  };

  std::map<int, Span> spans;
  for (const auto& x : all)
  {
    Span& s = spans[x.id];
    const auto windows = r.windowsOf(x.satVar());
    if (x.isReach() || windows.empty())
    {
      s.lower.push_back(x.lo);
      s.upper.push_back(x.hi);
    }
    for (const auto* w : windows)
    {
      s.lower.push_back(w->lo);
      s.upper.push_back(w->hi);
    }
  }

  auto before = [&](const Span& first, const Span& second, int gap)
  {
    for (const auto& lower : second.lower)
    {
      for (const auto& upper : first.upper)
      {
        try
        {
          if ((lower - upper).bounds(ranges).first >= gap)
            return true;
        }
        catch (const UnboundVariable&)
        {
        }
      }
    }
    return false;
  };

  PrecedenceOrder order;
  for (const auto& x1 : all)
  {
    for (const auto& x2 : all)
    {
      if (x1.id != x2.id && before(spans[x1.id], spans[x2.id], 1))
        order.pairs.insert({x1.id, x2.id});
    }
  }

  for (const auto& x1 : all)
  {
    for (const auto& x2 : all)
    {
      if (x1.id == x2.id || order.precedes(x1.id, x2.id))
        continue;
      if (before(spans[x1.id], spans[x2.id], 0)
        && !before(spans[x2.id], spans[x1.id], 0))
      {
        order.weak.insert({x1.id, x2.id});
      }
    }
  }

  // Transitive closure.
  for (bool grew = true; grew;)
  {
    grew = false;
    const auto snapshot = order.pairs;
    for (const auto& [a, b] : snapshot)
    {
      for (const auto& [c, d] : snapshot)
      {
        if (b == c && order.pairs.insert({a, d}).second)
          grew = true;
      }
    }
  }

  for (const auto& [a, b] : order.pairs)
  {
    if (a == b)
    {
      throw InconsistentWindows(
        "precedence order has a cycle through constraint " + std::to_string(a));
    }
  }
  return order;
}

//==============================================================================
Binding::Binding(const ResolveOutput& r, std::size_t enumerationCap)
: _r(&r),
  _cap(enumerationCap),
  _ranges(time_ranges(r.tc))
{
  for (const auto& w : r.tcPrime)
    _windows[w.var].push_back(&w);

  // Union-find over time variables linked by the windows of one variable.
  std::map<VarId, VarId> parent;
  auto find = [&](VarId v)
  {
    while (parent.at(v) != v)
      v = parent[v] = parent.at(parent.at(v));
    return v;
  };
  for (const auto& b : r.tc)
    parent[b.var] = b.var;

  for (const auto& [var, windows] : _windows)
  {
    std::optional<VarId> first;
    for (const auto* w : windows)
    {
      for (const auto* e : {&w->lo, &w->hi})
      {
        for (const auto& [v, c] : e->terms())
        {
          if (!parent.count(v))
          {
            throw MalformedBound("window for " + name(var)
              + " mentions " + name(v) + " which is not a time variable");
          }
          if (!first)
            first = v;
          else
            parent[find(v)] = find(*first);
        }
      }
    }
  }

  std::map<VarId, int> root_index;
  for (const auto& b : r.tc)
  {
    const VarId root = find(b.var);
    auto [it, inserted] = root_index.emplace(root, _componentTimes.size());
    if (inserted)
    {
      _componentTimes.emplace_back();
      _componentSats.emplace_back();
    }
    _componentTimes[it->second].push_back(b.var);
  }

  for (const auto& [var, windows] : _windows)
  {
    std::optional<VarId> any;
    for (const auto* w : windows)
    {
      if (!w->lo.terms().empty())
        any = w->lo.terms().begin()->first;
      else if (!w->hi.terms().empty())
        any = w->hi.terms().begin()->first;
    }
    if (!any)
    {
      // Constant windows form their own component.
      _component[var] = static_cast<int>(_componentTimes.size());
      _componentTimes.emplace_back();
      _componentSats.push_back({var});
      continue;
    }
    const int c = root_index.at(find(*any));
    _component[var] = c;
    _componentSats[c].push_back(var);
  }
}

//==============================================================================
template<typename Visit>
void Binding::feasible(
  int component, const Assignment& values, Visit&& visit) const
{
  const auto& vars = _componentTimes[component];
  const auto& sats = _componentSats[component];

  std::size_t total = 1;
  for (const VarId v : vars)
  {
    const auto& [lo, hi] = _ranges.at(v);
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    if (total > _cap / width)
      throw EnumerationCapExceeded(total * width, _cap);
    total *= width;
  }

  Assignment a;
  for (const VarId v : vars)
    a[v] = _ranges.at(v).first;

  for (;;)
  {
    bool ok = true;
    for (const VarId s : sats)
    {
      const auto it = values.find(s);
      if (it == values.end())
        continue;
      for (const auto* w : _windows.at(s))
      {
        if (it->second < w->lo.eval(a) || it->second > w->hi.eval(a))
        {
          ok = false;
          break;
        }
      }
      if (!ok)
        break;
    }
    if (ok && visit(static_cast<const Assignment&>(a)))
      return;

    std::size_t i = vars.size();
    bool done = true;
    while (i > 0)
    {
      --i;
      int& value = a[vars[i]];
      if (value < _ranges.at(vars[i]).second)
      {
        ++value;
        done = false;
        break;
      }
      value = _ranges.at(vars[i]).first;
    }
    if (done)
      return;
  }
}

//==============================================================================
bool Binding::consistent(VarId var, int value) const
{
  const auto it = _component.find(var);
  if (it == _component.end())
    return true;

  Assignment values = _values;
  values[var] = value;
  bool found = false;
  feasible(it->second, values, [&](const Assignment&)
  {
    found = true;
    return true;
  });
  return found;
}

//==============================================================================
bool Binding::bind(VarId var, int value)
{
  if (bound(var))
    return _values.at(var) == value;
  if (!consistent(var, value))
    return false;
  _values[var] = value;
  return true;
}

//==============================================================================
Range Binding::window(VarId var, Range within) const
{
  const auto bound_value = _values.find(var);
  if (bound_value != _values.end())
  {
    const int v = bound_value->second;
    if (v < within.first || v > within.second)
      return {1, 0};
    return {v, v};
  }

  const auto it = _component.find(var);
  if (it == _component.end())
    return within;

  Range out{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  const auto& windows = _windows.at(var);
  feasible(it->second, _values, [&](const Assignment& a)
  {
    int lo = within.first;
    int hi = within.second;
    for (const auto* w : windows)
    {
      lo = std::max(lo, w->lo.eval(a));
      hi = std::min(hi, w->hi.eval(a));
    }
    if (lo <= hi)
    {
      out.first = std::min(out.first, lo);
      out.second = std::max(out.second, hi);
    }
    return out.first == within.first && out.second == within.second;
  });

  if (out.first > out.second)
    return {1, 0};
  return out;
}

//==============================================================================
Assignment Binding::witness() const
{
  Assignment out = _values;
  for (std::size_t c = 0; c < _componentTimes.size(); ++c)
  {
    bool found = false;
    feasible(static_cast<int>(c), _values, [&](const Assignment& a)
    {
      for (const auto& [v, value] : a)
        out[v] = value;
      found = true;
      return true;
    });
    if (!found)
    {
      throw InconsistentWindows(
        "no time assignment agrees with the recorded satisfaction times");
    }
  }
  for (const auto& [v, range] : _ranges)
    out.emplace(v, range.first);
  return out;
}

//==============================================================================
std::vector<TaskConstraint> nextTasks(const ResolveOutput& r,
  const PrecedenceOrder& order, const Binding& bindings,
  const std::set<int>& satisfied)
{
  std::vector<TaskConstraint> out;
  for (const auto& x : r.all())
  {
    if (satisfied.count(x.id))
      continue;

    bool blocked = false;
    for (const int p : order.blockers(x.id))
      blocked = blocked || !satisfied.count(p);
    if (blocked)
      continue;

    Range range;
    if (!concrete(x, bindings.values(), range))
      continue;
    out.push_back(x);
  }
  return out;
}

//==============================================================================
std::vector<ConcreteTask> slice(const std::vector<ConcreteTask>& current)
{
  std::vector<ConcreteTask> out;
  if (current.empty())
    return out;

  int tmin = std::numeric_limits<int>::max();
  int tmax = std::numeric_limits<int>::min();
  for (const auto& x : current)
  {
    tmin = std::min(tmin, x.interval.lo);
    tmax = std::max(tmax, x.interval.hi);
  }

  auto active_at = [&](int t)
  {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < current.size(); ++i)
    {
      if (current[i].interval.contains(t))
        active.push_back(i);
    }
    return active;
  };

  auto close = [&](const std::vector<std::size_t>& active, int lo, int hi)
  {
    for (const auto kind : {ConstraintKind::Reach, ConstraintKind::Inv})
    {
      std::optional<ConcreteTask> merged;
      std::vector<Formula> seen;
      for (const std::size_t i : active)
      {
        const auto& x = current[i];
        if (x.kind != kind)
          continue;
        if (!merged)
        {
          merged = ConcreteTask{x.id, kind, Interval(lo, hi), x.prop, {}};
          seen.push_back(x.prop);
        }
        else if (std::find(seen.begin(), seen.end(), x.prop) == seen.end())
        {
          merged->prop = Formula::conj(merged->prop, x.prop);
          seen.push_back(x.prop);
        }
        merged->id = std::min(merged->id, x.id);
        merged->sources.insert(
          merged->sources.end(), x.sources.begin(), x.sources.end());
      }
      if (merged)
        out.push_back(std::move(*merged));
    }
  };

  std::vector<std::size_t> active = active_at(tmin);
  int start = tmin;
  for (int t = tmin + 1; t <= tmax + 1; ++t)
  {
    auto next = t <= tmax ? active_at(t) : std::vector<std::size_t>{};
    if (next != active)
    {
      if (!active.empty())
        close(active, start, t - 1);
      active = std::move(next);
      start = t;
    }
  }
  return out;
}

//==============================================================================
AtomicTask nextAtomic(const std::vector<ConcreteTask>& slices)
{
  if (slices.empty())
    throw Error("no slice to schedule");

  const auto first = std::min_element(slices.begin(), slices.end(),
    [](const ConcreteTask& a, const ConcreteTask& b)
    {
      if (a.interval.lo != b.interval.lo)
        return a.interval.lo < b.interval.lo;
      if (a.interval.hi != b.interval.hi)
        return a.interval.hi < b.interval.hi;
      return a.id < b.id;
    });

  AtomicTask task;
  task.interval = first->interval;
  for (const auto& s : slices)
  {
    if (!(s.interval == first->interval))
      continue;
    if (s.kind == ConstraintKind::Reach)
      task.reachProp = s.prop;
    else
      task.invProp = s.prop;
    task.sources.insert(task.sources.end(), s.sources.begin(), s.sources.end());
  }
  return task;
}

//==============================================================================
bool Coverage::mark(const ConcreteConstraint& x, int from, int to)
{
  auto [it, inserted] = _steps.try_emplace(x.id);
  if (inserted)
  {
    it->second.assign(std::max(0, x.hi - x.lo + 1), false);
    _lo[x.id] = x.lo;
  }
  for (int t = std::max(from, x.lo); t <= std::min(to, x.hi); ++t)
    it->second[t - x.lo] = true;
  return complete(x.id);
}

//==============================================================================
bool Coverage::complete(int id) const
{
  const auto it = _steps.find(id);
  if (it == _steps.end())
    return false;
  return std::all_of(it->second.begin(), it->second.end(),
    [](bool b) { return b; });
}

//==============================================================================
bool Coverage::covers(int id, int t) const
{
  const auto it = _steps.find(id);
  if (it == _steps.end())
    return false;
  const int k = t - _lo.at(id);
  return k >= 0 && k < static_cast<int>(it->second.size()) && it->second[k];
}

namespace {

//==============================================================================
ConcreteConstraint concretize(const TaskConstraint& x, const Binding& b)
{
  return instantiate(x, b.values());
}

//==============================================================================
bool holds_at(const Formula& p, const Trajectory& s, int t,
  const Environment& env)
{
  return propRobustness(p, s.at(t), env) > 0.0;
}

} // anonymous namespace

//==============================================================================
ExtractResult extractTime(const Trajectory& segment, const AtomicTask& task,
  const ResolveOutput& r, Binding& bindings, Coverage& coverage,
  const Environment& env)
{
  ExtractResult out;
  const int from = std::max(task.interval.lo, segment.t0);
  const int to = std::min(task.interval.hi, segment.end());

  std::vector<const TaskConstraint*> reach;
  std::vector<const TaskConstraint*> inv;
  for (const auto& s : task.sources)
  {
    const auto* x = r.find(s.id);
    if (!x)
      throw Error("atomic task names unknown constraint " + std::to_string(s.id));
    (x->isReach() ? reach : inv).push_back(x);
  }

  if (task.reachProp && !reach.empty())
  {
    bool witnessed = false;
    for (int t = from; t <= to && !witnessed; ++t)
    {
      if (!holds_at(*task.reachProp, segment, t, env))
        continue;
      Binding trial = bindings;
      bool ok = true;
      for (const auto* x : reach)
        ok = ok && trial.bind(x->satVar(), t);
      if (!ok)
        continue;
      bindings = std::move(trial);
      for (const auto* x : reach)
      {
        out.added[x->satVar()] = t;
        out.satisfied.push_back(x->id);
      }
      witnessed = true;
    }
    if (!witnessed && task.requiresReach())
    {
      throw Error("segment has no consistent witness for "
        + print(*task.reachProp));
    }
  }

  for (const auto* x : inv)
  {
    const auto c = concretize(*x, bindings);
    const int lo = std::max(from, c.lo);
    const int hi = std::min(to, c.hi);
    for (int t = lo; t <= hi; ++t)
    {
      if (!holds_at(c.prop, segment, t, env))
      {
        throw Error("segment violates invariant " + std::to_string(x->id)
          + " at step " + std::to_string(t));
      }
    }
    if (coverage.mark(c, lo, hi))
    {
      if (!bindings.bind(x->satVar(), c.hi))
      {
        throw InconsistentWindows("completion of invariant "
          + std::to_string(x->id) + " at step " + std::to_string(c.hi)
          + " contradicts earlier satisfaction times");
      }
      out.added[x->satVar()] = c.hi;
      out.satisfied.push_back(x->id);
    }
    else
    {
      out.progressed.push_back(x->id);
    }
  }
  return out;
}

//==============================================================================
std::string to_string(ScheduleStatus s)
{
  switch (s)
  {
    case ScheduleStatus::Success:
      return "success";
    case ScheduleStatus::Partial:
      return "partial";
    case ScheduleStatus::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

//==============================================================================
/// The point window expression that pins a reach constraint's witness to
/// a time-variable sum, if any.
std::optional<SymExpr> determining(const ResolveOutput& r, VarId sat)
{
  for (const auto* w : r.windowsOf(sat))
  {
    if (w->isPoint() && !w->lo.isConstant())
      return w->lo;
  }
  return std::nullopt;
}

//==============================================================================
class Scheduler
{
public:
  Scheduler(const ResolveOutput& r, const Environment& env,
    const State& init, const ScheduleOptions& options)
  : _r(r),
    _env(env),
    _options(options),
    _bindings(r, options.enumerationCap)
  {
    _plan.t0 = 0;
    _plan.states.push_back(init);
    _result.order = computeOrder(r);
  }

  ScheduleResult run()
  {
    for (std::size_t iteration = 0;; ++iteration)
    {
      if (iteration >= _options.maxIterations)
        return fail(std::nullopt, "iteration cap reached", 0.0, {});

      _iteration = static_cast<int>(iteration);
      const auto ready = nextTasks(_r, _result.order, _bindings,
        _result.satisfied);

      std::string problem;
      if (scan_committed(ready, problem))
        continue;
      if (!problem.empty())
        return fail(std::nullopt, problem, 0.0, ids(ready));

      if (ready.empty())
      {
        if (_result.satisfied.size() == _r.reach.size() + _r.inv.size())
          break;
        return fail(std::nullopt, "no remaining constraint can be released",
          0.0, {});
      }

      std::vector<ConcreteTask> current;
      std::map<int, int> deadline;
      if (!release(ready, current, deadline, problem))
        return fail(std::nullopt, problem, 0.0, ids(ready));

      AtomicTask task = nextAtomic(slice(current));
      for (const auto& s : task.sources)
      {
        if (s.kind == ConstraintKind::Reach
          && deadline.at(s.id) > task.interval.hi)
        {
          task.reachOptional = true;
        }
      }

      if (!execute(task, ids(ready)))
        return _result;
    }

    if (_plan.size() < _options.minLength)
    {
      AtomicTask pad;
      pad.interval = Interval(_plan.end(), _options.minLength - 1);
      if (!execute(pad, {}))
        return _result;
    }

    _result.status = ScheduleStatus::Success;
    _result.plan = _plan;
    _result.bindings = _bindings.values();
    _result.witness = _bindings.witness();
    return _result;
  }

private:
  static std::vector<int> ids(const std::vector<TaskConstraint>& xs)
  {
    std::vector<int> out;
    for (const auto& x : xs)
      out.push_back(x.id);
    return out;
  }

  int cursor() const { return _plan.end(); }

  void satisfy(const TaskConstraint& x, int at, TraceRecord& record)
  {
    _result.satisfied.insert(x.id);
    record.added[x.satVar()] = at;
    record.satisfied.push_back(x.id);
  }

  /// Settles ready constraints against the committed trajectory. Steps
  /// before the cursor are final. At the cursor, only confirmations are
  /// taken; violations there are left to the planner. Returns true when
  /// something changed.
  bool scan_committed(
    const std::vector<TaskConstraint>& ready, std::string& problem)
  {
    TraceRecord record;
    record.iteration = _iteration;
    record.cursor = cursor();
    record.status = "committed";

    for (const auto& x : ready)
    {
      const auto c = concretize(x, _bindings);
      if (x.isReach())
      {
        const Range w = _bindings.window(x.satVar(), {c.lo, c.hi});
        if (w.first > w.second)
        {
          problem = "constraint " + std::to_string(x.id)
            + " has an empty satisfaction window";
          return false;
        }
        for (int t = w.first; t <= std::min(w.second, cursor()); ++t)
        {
          if (holds_at(c.prop, _plan, t, _env)
            && _bindings.bind(x.satVar(), t))
          {
            satisfy(x, t, record);
            break;
          }
        }
        continue;
      }

      for (int t = std::max(c.lo, 0); t <= std::min(c.hi, cursor()); ++t)
      {
        if (_coverage.covers(x.id, t))
          continue;
        if (!holds_at(c.prop, _plan, t, _env))
        {
          if (t < cursor())
          {
            problem = "committed trajectory violates invariant "
              + std::to_string(x.id) + " at step " + std::to_string(t);
            return false;
          }
          break;
        }
        if (_coverage.mark(c, t, t))
        {
          if (!_bindings.bind(x.satVar(), c.hi))
          {
            problem = "completion of invariant " + std::to_string(x.id)
              + " contradicts earlier satisfaction times";
            return false;
          }
          satisfy(x, c.hi, record);
        }
      }
      if (c.lo > c.hi && _bindings.bind(x.satVar(), c.hi))
        satisfy(x, c.hi, record);
    }

    if (record.satisfied.empty())
      return false;
    _result.trace.push_back(std::move(record));
    return true;
  }

  /// Builds the slicing input: every ready invariant over its uncovered
  /// future, plus one group of reach constraints chosen earliest deadline
  /// first. Reach constraints pinned to the same time-variable sum share
  /// a witness step and are released together.
  bool release(const std::vector<TaskConstraint>& ready,
    std::vector<ConcreteTask>& current, std::map<int, int>& deadline,
    std::string& problem)
  {
    struct Candidate
    {
      const TaskConstraint* x;
      Range window;
    };
    std::vector<Candidate> reach;

    for (const auto& x : ready)
    {
      const auto c = concretize(x, _bindings);
      if (x.isReach())
      {
        // The committed scan already looked at the cursor step.
        Range w = _bindings.window(x.satVar(), {c.lo, c.hi});
        w.first = std::max(w.first, cursor() + 1);
        if (w.first > w.second)
        {
          problem = "satisfaction window of constraint " + std::to_string(x.id)
            + " closed before a witness was found";
          return false;
        }
        reach.push_back({&x, w});
        continue;
      }

      int lo = std::max(c.lo, cursor());
      while (lo <= c.hi && _coverage.covers(x.id, lo))
        ++lo;
      if (lo <= c.hi)
      {
        current.push_back({x.id, ConstraintKind::Inv, Interval(lo, c.hi),
            c.prop, {{x.id, ConstraintKind::Inv}}});
      }
    }

    if (reach.empty())
      return true;

    const auto first = std::min_element(reach.begin(), reach.end(),
      [](const Candidate& a, const Candidate& b)
      {
        if (a.window.second != b.window.second)
          return a.window.second < b.window.second;
        if (a.window.first != b.window.first)
          return a.window.first < b.window.first;
        return a.x->id < b.x->id;
      });

    std::vector<Candidate> group{*first};
    const auto pin = determining(_r, first->x->satVar());
    Range shared = first->window;
    if (pin)
    {
      for (const auto& c : reach)
      {
        if (c.x == first->x || determining(_r, c.x->satVar()) != pin)
          continue;
        const Range both{std::max(shared.first, c.window.first),
          std::min(shared.second, c.window.second)};
        if (both.first > both.second)
          continue;
        shared = both;
        group.push_back(c);
      }
    }

    for (const auto& c : group)
    {
      current.push_back({c.x->id, ConstraintKind::Reach,
          Interval(shared.first, shared.second), c.x->prop,
          {{c.x->id, ConstraintKind::Reach}}});
      deadline[c.x->id] = shared.second;
    }
    return true;
  }

  bool execute(const AtomicTask& task, const std::vector<int>& active)
  {
    TraceRecord record;
    record.iteration = _iteration;
    record.cursor = cursor();
    record.task = task;

    ++_result.atomicTasks;
    const PlanResult planned = plan(task, _plan.states.back(), cursor(), _env);
    _result.expanded += planned.expanded;

    if (!planned.ok())
    {
      record.status = "failed";
      record.message = planned.failure;
      _result.trace.push_back(record);
      fail(task, planned.failure, planned.bestPartialMargin, active);
      return false;
    }

    const auto check = validateSegment(*planned.segment, task, _env);
    if (!check)
      throw Error("planner returned an invalid segment: " + check.message);

    const Trajectory& segment = planned.segment->trajectory;
    const auto extracted = extractTime(
      segment, task, _r, _bindings, _coverage, _env);

    _plan.append(segment);
    _committed = true;

    for (const int id : extracted.satisfied)
      _result.satisfied.insert(id);
    record.status = "planned";
    record.added = extracted.added;
    record.satisfied = extracted.satisfied;
    _result.trace.push_back(std::move(record));
    return true;
  }

  ScheduleResult fail(std::optional<AtomicTask> task, std::string reason,
    double margin, std::vector<int> active)
  {
    FailureReport report;
    report.task = std::move(task);
    report.cursor = cursor();
    report.active = std::move(active);
    report.reason = std::move(reason);
    report.bestPartialMargin = margin;
    _result.failure = std::move(report);
    _result.status = _committed
      ? ScheduleStatus::Partial : ScheduleStatus::Infeasible;
    if (_committed)
      _result.plan = _plan;
    _result.bindings = _bindings.values();
    return _result;
  }

  const ResolveOutput& _r;
  const Environment& _env;
  ScheduleOptions _options;
  Binding _bindings;
  Coverage _coverage;
  Trajectory _plan;
  bool _committed = false;
  int _iteration = 0;
  ScheduleResult _result;
};

} // anonymous namespace

//==============================================================================
ScheduleResult schedule(const ResolveOutput& r, const Environment& env,
  const State& init, const ScheduleOptions& options)
{
  return Scheduler(r, env, init, options).run();
}

//==============================================================================
std::vector<int> violatedConstraints(const ResolveOutput& r,
  const Assignment& v, const Trajectory& plan, const RegionMap& regions)
{
  std::vector<int> out;
  for (const auto& x : r.all())
  {
    try
    {
      if (!holdsUnder(x, v, plan, regions))
        out.push_back(x.id);
    }
    catch (const Error&)
    {
      out.push_back(x.id);
    }
  }
  return out;
}

} // namespace stlinc
