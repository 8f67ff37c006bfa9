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

#include <stlinc/errors.hpp>
#include <stlinc/parser.hpp>
#include <stlinc/resolve.hpp>

#include <gtest/gtest.h>

using namespace stlinc;

namespace {

const VarId T = VarId::time(1);
const VarId U = VarId::time(2);

TaskConstraint constraint(int id, ConstraintKind kind, SymExpr lo, SymExpr hi,
  const std::string& prop)
{
  return {id, kind, lo, hi, Formula::region(prop)};
}

const TaskConstraint* by_prop(const std::vector<TaskConstraint>& xs,
  const Formula& prop)
{
  for (const auto& x : xs)
  {
    if (x.prop == prop)
      return &x;
  }
  return nullptr;
}

} // anonymous namespace

TEST(ApplyFG, ReachAndStay)
{
  const auto x = constraint(1, ConstraintKind::Inv, SymExpr::var(T, 1),
    SymExpr::var(T, 5), "r1");
  const auto r = applyFG(x, {1, 20, T}, 9);
  EXPECT_EQ(r.reach.id, 9);
  EXPECT_TRUE(r.reach.isReach());
  EXPECT_EQ(r.reach.lo, SymExpr(2));
  EXPECT_EQ(r.reach.hi, SymExpr(21));
  EXPECT_EQ(r.inv.id, 1);
  EXPECT_EQ(r.inv.lo, SymExpr::var(VarId::sat(9)));
  EXPECT_EQ(r.inv.hi, SymExpr::var(VarId::sat(9), 4));
}

TEST(ApplyFG, PointInterval)
{
  const auto x = constraint(1, ConstraintKind::Inv, SymExpr::var(T),
    SymExpr::var(T), "p");
  const auto r = applyFG(x, {4, 4, T}, 2);
  EXPECT_EQ(r.reach.lo, SymExpr(4));
  EXPECT_EQ(r.reach.hi, SymExpr(4));
  EXPECT_EQ(r.inv.lo, SymExpr::var(VarId::sat(2)));
  EXPECT_EQ(r.inv.hi, SymExpr::var(VarId::sat(2)));
}

TEST(ApplyFG, WiderStay)
{
  const auto x = constraint(1, ConstraintKind::Inv, SymExpr::var(T, 2),
    SymExpr::var(T, 7), "q");
  const auto r = applyFG(x, {0, 3, T}, 2);
  EXPECT_EQ(r.reach.lo, SymExpr(2));
  EXPECT_EQ(r.reach.hi, SymExpr(5));
  EXPECT_EQ(r.inv.hi, SymExpr::var(VarId::sat(2), 5));
}

TEST(ApplyFF, Examples)
{
  const auto a = applyFF(constraint(1, ConstraintKind::Reach,
    SymExpr::var(T, 5), SymExpr::var(T, 15), "r2"), {1, 20, T});
  EXPECT_EQ(a.reach.lo, SymExpr(6));
  EXPECT_EQ(a.reach.hi, SymExpr(35));
  EXPECT_EQ(a.reach.id, 1);
  EXPECT_EQ(a.window.var, VarId::sat(1));

  const auto b = applyFF(constraint(1, ConstraintKind::Reach,
    SymExpr::var(T), SymExpr::var(T), "p"), {2, 5, T});
  EXPECT_EQ(b.reach.lo, SymExpr(2));
  EXPECT_EQ(b.reach.hi, SymExpr(5));

  const auto c = applyFF(constraint(1, ConstraintKind::Reach,
    SymExpr::var(T, 1), SymExpr::var(T, 2), "p"), {0, 0, T});
  EXPECT_EQ(c.reach.lo, SymExpr(1));
  EXPECT_EQ(c.reach.hi, SymExpr(2));
}

TEST(Resolve, ChainedIntervalSums)
{
  // (t + t', t + t', r2) with t' in [5, 15] and t in [1, 20].
  FlattenOutput in;
  in.reach.push_back(constraint(1, ConstraintKind::Reach,
    SymExpr::var(T) + SymExpr::var(U), SymExpr::var(T) + SymExpr::var(U),
    "r2"));
  in.tc.push_back({5, 15, U, 2, 1});
  in.tc.push_back({1, 20, T, 1, 0});
  const auto out = resolve(in);
  ASSERT_EQ(out.reach.size(), 1u);
  EXPECT_EQ(out.reach[0].lo, SymExpr(6));
  EXPECT_EQ(out.reach[0].hi, SymExpr(35));
}

TEST(Resolve, RunningExampleFromFlattenedInput)
{
  FlattenOutput in;
  in.reach.push_back(constraint(1, ConstraintKind::Reach,
    SymExpr::var(T) + SymExpr::var(U), SymExpr::var(T) + SymExpr::var(U),
    "r2"));
  in.inv.push_back(constraint(2, ConstraintKind::Inv, SymExpr::var(T, 1),
    SymExpr::var(T, 5), "r1"));
  in.inv.push_back({3, ConstraintKind::Inv, SymExpr(1), SymExpr(35),
    Formula::negate(Formula::region("r3"))});
  in.tc.push_back({5, 15, U, 2, 1});
  in.tc.push_back({1, 20, T, 1, 0});

  const auto out = resolve(in);
  ASSERT_EQ(out.reach.size(), 2u);
  ASSERT_EQ(out.inv.size(), 2u);

  const auto* r1 = by_prop(out.reach, Formula::region("r1"));
  const auto* r2 = by_prop(out.reach, Formula::region("r2"));
  const auto* stay = by_prop(out.inv, Formula::region("r1"));
  const auto* avoid = by_prop(out.inv, Formula::negate(Formula::region("r3")));
  ASSERT_TRUE(r1 && r2 && stay && avoid);
  EXPECT_EQ(r1->lo, SymExpr(2));
  EXPECT_EQ(r1->hi, SymExpr(21));
  EXPECT_EQ(r2->lo, SymExpr(6));
  EXPECT_EQ(r2->hi, SymExpr(35));
  EXPECT_EQ(stay->lo, SymExpr::var(r1->satVar()));
  EXPECT_EQ(stay->hi, SymExpr::var(r1->satVar(), 4));
  EXPECT_EQ(avoid->lo, SymExpr(1));
  EXPECT_EQ(avoid->hi, SymExpr(35));
}

TEST(Resolve, NoVariablesIsIdentity)
{
  const auto f = flatten(parse("G[1,35](!r3) & G[0,4](r1)"));
  const auto out = resolve(f);
  EXPECT_TRUE(out.tcPrime.empty());
  ASSERT_EQ(out.all().size(), f.all().size());
  for (std::size_t i = 0; i < f.all().size(); ++i)
  {
    EXPECT_EQ(out.all()[i].lo, f.all()[i].lo);
    EXPECT_EQ(out.all()[i].hi, f.all()[i].hi);
    EXPECT_EQ(out.all()[i].prop, f.all()[i].prop);
  }
}

TEST(Resolve, BoundsBecomeConcreteOrSatRelative)
{
  test::FormulaGenerator gen(23);
  for (int i = 0; i < 300; ++i)
  {
    const auto out = resolve(flatten(gen.formula()));
    for (const auto& x : out.all())
    {
      for (const auto& [v, k] : x.lo.terms())
        EXPECT_EQ(v.kind, VarKind::Sat) << describe(x);
      for (const auto& [v, k] : x.hi.terms())
        EXPECT_EQ(v.kind, VarKind::Sat) << describe(x);
    }
  }
}

// Resolved constraints holding under an assignment of the windows imply
// the flattened constraints under the induced time assignment.
TEST(Resolve, SoundOnRandomPipelines)
{
  test::FormulaGenerator gen(29);
  int pipelines = 0;
  int witnessed = 0;
  while (pipelines < 300)
  {
    const Formula f = gen.formula();
    const auto flat = flatten(f);
    const auto out = resolve(flat);
    const Trajectory s = gen.signalFor(f);
    bool capped = false;
    int local = 0;
    try
    {
      forEachWindowAssignment(out, 20000, [&](const Assignment& v)
      {
        for (const auto& x : out.all())
        {
          if (!holdsUnder(x, v, s, {}))
            return;
        }
        ++local;
        Assignment times;
        for (const auto& [var, value] : v)
        {
          if (var.kind == VarKind::Time)
            times[var] = value;
        }
        for (const auto& x : flat.all())
        {
          EXPECT_TRUE(test::bruteHolds(instantiate(x, times), s))
            << print(f) << " / " << describe(x);
        }
      });
    }
    catch (const EnumerationCapExceeded&)
    {
      capped = true;
    }
    if (capped)
      continue;
    ++pipelines;
    witnessed += local;
  }
  EXPECT_GT(witnessed, 0);
}
