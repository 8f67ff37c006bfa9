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


#include <stlinc/semantics.hpp>
#include <stlinc/errors.hpp>

#include <algorithm>
#include <limits>

namespace stlinc {

namespace {

//==============================================================================
bool has_temporal(const Formula& f)
{
  return !f.isPropositional();
}

//==============================================================================
FragmentReport check(const Formula& f, const std::string& path)
{
  switch (f.op())
  {
    case Op::Pred:
      return {};
    case Op::Not:
      if (has_temporal(f.child()))
        return {false, path, "negation over a temporal subformula"};
      return {};
    case Op::Or:
      if (has_temporal(f.lhs()) || has_temporal(f.rhs()))
        return {false, path, "disjunction over a temporal subformula"};
      return {};
    case Op::And:
    {
      auto l = check(f.lhs(), path + ".lhs");
      if (!l)
        return l;
      return check(f.rhs(), path + ".rhs");
    }
    case Op::Eventually:
    case Op::Always:
      return check(f.child(), path + ".arg");
  }
  return {};
}

//==============================================================================
double predicate_value(
  const Predicate& p, const Vector2& position, const RegionMap& regions)
{
  if (const auto* h = std::get_if<Halfplane>(&p))
    return h->a.dot(position) - h->b;

  const auto& name = std::get<RegionRef>(p).name;
  const auto it = regions.find(name);
  if (it == regions.end())
    throw UnknownRegion("unknown region '" + name + "'");
  return it->second.box.margin(position);
}

//==============================================================================
void require_coverage(const Formula& f, const Trajectory& s, int from, int to)
{
  const int need = to + horizon(f);
  if (s.empty() || from < s.t0 || need > s.end())
  {
    throw SignalTooShort("signal covering ["
      + (s.empty() ? std::string("empty") : std::to_string(s.t0) + ","
        + std::to_string(s.end()))
      + "] does not cover [" + std::to_string(from) + ","
      + std::to_string(need) + "]");
  }
}

//==============================================================================
std::vector<double> signal_of(
  const Formula& f, const Trajectory& s, int from, int to,
  const RegionMap& regions)
{
  const std::size_t n = static_cast<std::size_t>(to - from + 1);
  switch (f.op())
  {
    case Op::Pred:
    {
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i)
      {
        out[i] = predicate_value(
          f.predicate(), s.at(from + static_cast<int>(i)).position, regions);
      }
      return out;
    }
    case Op::Not:
    {
      auto out = signal_of(f.child(), s, from, to, regions);
      for (auto& v : out)
        v = -v;
      return out;
    }
    case Op::And:
    case Op::Or:
    {
      auto out = signal_of(f.lhs(), s, from, to, regions);
      const auto rhs = signal_of(f.rhs(), s, from, to, regions);
      for (std::size_t i = 0; i < n; ++i)
      {
        out[i] = f.op() == Op::And ? std::min(out[i], rhs[i])
          : std::max(out[i], rhs[i]);
      }
      return out;
    }
    case Op::Eventually:
    case Op::Always:
    {
      const auto& I = f.interval();
      const auto inner = signal_of(f.child(), s, from + I.lo, to + I.hi, regions);
      std::vector<double> out(n);
      const bool is_f = f.op() == Op::Eventually;
      for (std::size_t i = 0; i < n; ++i)
      {
        // inner[i + k] is the child value at from + i + I.lo + k.
        double acc = inner[i];
        for (int k = 1; k <= I.width(); ++k)
        {
          const double v = inner[i + static_cast<std::size_t>(k)];
          acc = is_f ? std::max(acc, v) : std::min(acc, v);
        }
        out[i] = acc;
      }
      return out;
    }
  }
  return {};
}

//==============================================================================
bool holds(const Formula& f, const Trajectory& s, int t, const RegionMap& regions)
{
  switch (f.op())
  {
    case Op::Pred:
      return predicate_value(f.predicate(), s.at(t).position, regions) > 0.0;
    case Op::Not:
      return !holds(f.child(), s, t, regions);
    case Op::And:
      return holds(f.lhs(), s, t, regions) && holds(f.rhs(), s, t, regions);
    case Op::Or:
      return holds(f.lhs(), s, t, regions) || holds(f.rhs(), s, t, regions);
    case Op::Eventually:
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
      {
        if (holds(f.child(), s, k, regions))
          return true;
      }
      return false;
    case Op::Always:
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
      {
        if (!holds(f.child(), s, k, regions))
          return false;
      }
      return true;
  }
  return false;
}

} // anonymous namespace

//==============================================================================
FragmentReport validateFragment(const Formula& f)
{
  return check(f, "root");
}

//==============================================================================
int horizon(const Formula& f)
{
  switch (f.op())
  {
    case Op::Pred:
      return 0;
    case Op::Not:
      return horizon(f.child());
    case Op::And:
    case Op::Or:
      return std::max(horizon(f.lhs()), horizon(f.rhs()));
    case Op::Eventually:
    case Op::Always:
      return f.interval().hi + horizon(f.child());
  }
  return 0;
}

//==============================================================================
double propRobustness(
  const Formula& p, const Vector2& position, const RegionMap& regions)
{
  switch (p.op())
  {
    case Op::Pred:
      return predicate_value(p.predicate(), position, regions);
    case Op::Not:
      return -propRobustness(p.child(), position, regions);
    case Op::And:
      return std::min(propRobustness(p.lhs(), position, regions),
          propRobustness(p.rhs(), position, regions));
    case Op::Or:
      return std::max(propRobustness(p.lhs(), position, regions),
          propRobustness(p.rhs(), position, regions));
    case Op::Eventually:
    case Op::Always:
      break;
  }
  throw FragmentViolation("temporal operator in a propositional formula");
}

//==============================================================================
std::vector<double> robustnessSignal(
  const Formula& f, const Trajectory& s, int from, int to,
  const RegionMap& regions)
{
  if (to < from)
    return {};
  require_coverage(f, s, from, to);
  return signal_of(f, s, from, to, regions);
}

//==============================================================================
double robustness(
  const Formula& f, const Trajectory& s, int t, const RegionMap& regions)
{
  return robustnessSignal(f, s, t, t, regions).front();
}

//==============================================================================
bool satisfies(
  const Formula& f, const Trajectory& s, int t, const RegionMap& regions)
{
  require_coverage(f, s, t, t);
  return holds(f, s, t, regions);
}

} // namespace stlinc
