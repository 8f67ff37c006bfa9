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


#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stlinc::test {

namespace {

double predicate_value(const Predicate& p, const Vector2& x,
  const RegionMap& regions)
{
  if (const auto* h = std::get_if<Halfplane>(&p))
    return h->a.x() * x.x() + h->a.y() * x.y() - h->b;

  const auto& name = std::get<RegionRef>(p).name;
  const auto it = regions.find(name);
  if (it == regions.end())
    throw std::runtime_error("oracle: unknown region " + name);
  const Rect& r = it->second.box;
  const double m[4] = {x.x() - r.min.x(), r.max.x() - x.x(),
    x.y() - r.min.y(), r.max.y() - x.y()};
  return *std::min_element(m, m + 4);
}

const Vector2& position(const Trajectory& s, int t)
{
  if (!s.covers(t))
    throw std::out_of_range("oracle: step outside the signal");
  return s.at(t).position;
}

} // anonymous namespace

//==============================================================================
double bruteRobustness(const Formula& f, const Trajectory& s, int t,
  const RegionMap& regions)
{
  switch (f.op())
  {
    case Op::Pred:
      return predicate_value(f.predicate(), position(s, t), regions);
    case Op::Not:
      return -bruteRobustness(f.child(), s, t, regions);
    case Op::And:
      return std::min(bruteRobustness(f.lhs(), s, t, regions),
          bruteRobustness(f.rhs(), s, t, regions));
    case Op::Or:
      return std::max(bruteRobustness(f.lhs(), s, t, regions),
          bruteRobustness(f.rhs(), s, t, regions));
    case Op::Eventually:
    {
      double best = -std::numeric_limits<double>::infinity();
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
        best = std::max(best, bruteRobustness(f.child(), s, k, regions));
      return best;
    }
    case Op::Always:
    {
      double worst = std::numeric_limits<double>::infinity();
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
        worst = std::min(worst, bruteRobustness(f.child(), s, k, regions));
      return worst;
    }
  }
  throw std::logic_error("oracle: unknown operator");
}

//==============================================================================
bool bruteSatisfies(const Formula& f, const Trajectory& s, int t,
  const RegionMap& regions)
{
  switch (f.op())
  {
    case Op::Pred:
      return predicate_value(f.predicate(), position(s, t), regions) > 0.0;
    case Op::Not:
      return !bruteSatisfies(f.child(), s, t, regions);
    case Op::And:
      return bruteSatisfies(f.lhs(), s, t, regions)
        && bruteSatisfies(f.rhs(), s, t, regions);
    case Op::Or:
      return bruteSatisfies(f.lhs(), s, t, regions)
        || bruteSatisfies(f.rhs(), s, t, regions);
    case Op::Eventually:
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
      {
        if (bruteSatisfies(f.child(), s, k, regions))
          return true;
      }
      return false;
    case Op::Always:
      for (int k = t + f.interval().lo; k <= t + f.interval().hi; ++k)
      {
        if (!bruteSatisfies(f.child(), s, k, regions))
          return false;
      }
      return true;
  }
  throw std::logic_error("oracle: unknown operator");
}

//==============================================================================
bool bruteHolds(const ConcreteConstraint& c, const Trajectory& s,
  const RegionMap& regions)
{
  for (int k = c.lo; k <= c.hi; ++k)
  {
    const bool ok = bruteSatisfies(c.prop, s, k, regions);
    if (c.kind == ConstraintKind::Reach && ok)
      return true;
    if (c.kind == ConstraintKind::Inv && !ok)
      return false;
  }
  return c.kind == ConstraintKind::Inv;
}

//==============================================================================
std::vector<int> scanConstraints(const std::vector<TaskConstraint>& xs,
  const Assignment& v, const Trajectory& s, const RegionMap& regions)
{
  std::vector<int> failed;
  for (const auto& x : xs)
  {
    const ConcreteConstraint c = instantiate(x, v);
    bool ok = bruteHolds(c, s, regions);
    const auto sat = v.find(x.satVar());
    if (ok && x.isReach() && sat != v.end())
    {
      ok = c.lo <= sat->second && sat->second <= c.hi
        && bruteSatisfies(c.prop, s, sat->second, regions);
    }
    if (!ok)
      failed.push_back(x.id);
  }
  return failed;
}

//==============================================================================
Trajectory signal(const std::vector<double>& xs, const std::vector<double>& ys)
{
  Trajectory s;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    State st;
    st.position = Vector2(xs[i], i < ys.size() ? ys[i] : 0.0);
    s.states.push_back(st);
  }
  if (!s.states.empty())
    s.inputs.assign(s.states.size() - 1, Vector2::Zero());
  return s;
}

//==============================================================================
FormulaGenerator::FormulaGenerator(unsigned seed, GenOptions options)
: _rng(seed),
  _options(options)
{}

int FormulaGenerator::uniform(int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(_rng);
}

Formula FormulaGenerator::atom()
{
  const double c = 0.5 * uniform(0, 6);
  switch (uniform(0, 3))
  {
    case 0:
      return Formula::halfplane(Vector2(1.0, 0.0), c);
    case 1:
      return Formula::halfplane(Vector2(-1.0, 0.0), -c);
    case 2:
      return Formula::halfplane(Vector2(0.0, 1.0), c);
    default:
      return Formula::halfplane(Vector2(0.0, -1.0), -c);
  }
}

Formula FormulaGenerator::propositional(int size)
{
  if (size <= 1)
    return uniform(0, 4) == 0 ? Formula::negate(atom()) : atom();
  const int left = uniform(1, size - 1);
  const Formula l = propositional(left);
  const Formula r = propositional(size - left);
  switch (uniform(0, 2))
  {
    case 0:
      return Formula::disj(l, r);
    case 1:
      return Formula::negate(Formula::conj(l, r));
    default:
      return Formula::conj(l, r);
  }
}

Formula FormulaGenerator::temporal(int depth, int budget)
{
  const int hi_max = std::min(_options.maxBound, budget);
  const int lo = uniform(0, hi_max);
  const int hi = std::min(hi_max, lo + uniform(0, _options.maxWidth));
  const Interval interval(lo, hi);

  Formula body = propositional(uniform(1, 2));
  if (depth > 0 && budget - hi > 0 && uniform(0, 2) != 0)
  {
    Formula inner = temporal(depth - 1, budget - hi);
    body = uniform(0, 1) ? Formula::conj(body, inner) : inner;
    if (depth > 1 && budget - hi > 0 && uniform(0, 3) == 0)
      body = Formula::conj(body, temporal(0, budget - hi));
  }
  return uniform(0, 1) ? Formula::eventually(interval, body)
    : Formula::always(interval, body);
}

Formula FormulaGenerator::formula()
{
  const int depth = uniform(0, _options.maxDepth);
  Formula f = temporal(depth, _options.maxHorizon);
  const int extra = uniform(0, 2);
  for (int i = 0; i < extra; ++i)
  {
    f = uniform(0, 3) == 0 ? Formula::conj(f, propositional(1))
      : Formula::conj(f, temporal(uniform(0, 1), _options.maxHorizon));
  }
  return f;
}

Trajectory FormulaGenerator::signalFor(const Formula& f)
{
  int length = 1;
  struct Walk
  {
    static int horizon(const Formula& g)
    {
      switch (g.op())
      {
        case Op::Pred:
          return 0;
        case Op::Not:
          return horizon(g.child());
        case Op::And:
        case Op::Or:
          return std::max(horizon(g.lhs()), horizon(g.rhs()));
        default:
          return g.interval().hi + horizon(g.child());
      }
    }
  };
  length += Walk::horizon(f);

  // A slowly drifting walk satisfies nested F/G windows far more often
  // than independent samples.
  std::vector<double> xs(length);
  std::vector<double> ys(length);
  double x = 0.5 * uniform(0, 6);
  double y = 0.5 * uniform(0, 6);
  for (int i = 0; i < length; ++i)
  {
    xs[i] = x;
    ys[i] = y;
    if (uniform(0, 2) == 0)
      x = std::clamp(x + 0.5 * uniform(-2, 2), -0.5, 3.5);
    if (uniform(0, 2) == 0)
      y = std::clamp(y + 0.5 * uniform(-2, 2), -0.5, 3.5);
  }
  return signal(xs, ys);
}

} // namespace stlinc::test
