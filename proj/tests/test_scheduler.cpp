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


#include "fixtures.hpp"
#include "oracles.hpp"

#include <stlinc/errors.hpp>
#include <stlinc/parser.hpp>
#include <stlinc/scheduler.hpp>
#include <stlinc/semantics.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace stlinc;

namespace {

const char* kRunningExample =
  "F[1,20](G[1,5](r1) & F[6,15](r2)) & G[1,35](!r3)";

Formula r(const std::string& name) { return Formula::region(name); }

struct RunningExample
{
  ResolveOutput out = resolve(flatten(parse(kRunningExample)));
  const TaskConstraint* reachR1 = nullptr;
  const TaskConstraint* reachR2 = nullptr;
  const TaskConstraint* stay = nullptr;
  const TaskConstraint* avoid = nullptr;

  RunningExample()
  {
    for (const auto& x : out.reach)
      (x.prop == r("r1") ? reachR1 : reachR2) = out.find(x.id);
    for (const auto& x : out.inv)
      (x.prop == r("r1") ? stay : avoid) = out.find(x.id);
  }
};

ResolveOutput concrete(const std::vector<std::tuple<ConstraintKind, int, int,
  std::string>>& xs)
{
  ResolveOutput out;
  int id = 1;
  for (const auto& [kind, lo, hi, prop] : xs)
  {
    TaskConstraint x{id++, kind, SymExpr(lo), SymExpr(hi), r(prop)};
    (x.isReach() ? out.reach : out.inv).push_back(x);
  }
  return out;
}

ConcreteTask entry(int id, ConstraintKind kind, int lo, int hi, Formula prop)
{
  return {id, kind, Interval(lo, hi), prop, {{id, kind}}};
}

std::set<int> ids(const std::vector<TaskConstraint>& xs)
{
  std::set<int> out;
  for (const auto& x : xs)
    out.insert(x.id);
  return out;
}

} // anonymous namespace

TEST(Order, RunningExample)
{
  const RunningExample ex;
  ASSERT_TRUE(ex.reachR1 && ex.reachR2 && ex.stay && ex.avoid);
  const auto order = computeOrder(ex.out);
  EXPECT_TRUE(order.precedes(ex.reachR1->id, ex.stay->id));
  EXPECT_TRUE(order.precedes(ex.stay->id, ex.reachR2->id));
  EXPECT_TRUE(order.precedes(ex.reachR1->id, ex.reachR2->id));
  for (const auto& [a, b] : order.pairs)
  {
    EXPECT_NE(a, ex.avoid->id);
    EXPECT_NE(b, ex.avoid->id);
  }
  EXPECT_EQ(order.pairs.size(), 3u);
}

TEST(Order, ConcreteIntervals)
{
  const auto disjoint = concrete({{ConstraintKind::Reach, 0, 5, "p"},
    {ConstraintKind::Reach, 10, 12, "q"}});
  EXPECT_TRUE(computeOrder(disjoint).precedes(1, 2));

  const auto overlapping = concrete({{ConstraintKind::Reach, 0, 10, "p"},
    {ConstraintKind::Reach, 5, 15, "q"}});
  EXPECT_TRUE(computeOrder(overlapping).pairs.empty());
}

TEST(NextTasks, RunningExample)
{
  const RunningExample ex;
  const auto order = computeOrder(ex.out);
  Binding bindings(ex.out, 1000000);

  const auto first = nextTasks(ex.out, order, bindings, {});
  EXPECT_EQ(ids(first), (std::set<int>{ex.reachR1->id, ex.avoid->id}));

  ASSERT_TRUE(bindings.bind(ex.reachR1->satVar(), 7));
  const auto second = nextTasks(ex.out, order, bindings, {ex.reachR1->id});
  EXPECT_EQ(ids(second), (std::set<int>{ex.stay->id, ex.avoid->id}));
  for (const auto& x : second)
  {
    if (x.id != ex.stay->id)
      continue;
    EXPECT_EQ(x.lo.substitute(bindings.values()), SymExpr(7));
    EXPECT_EQ(x.hi.substitute(bindings.values()), SymExpr(11));
  }

  const std::set<int> all = {ex.reachR1->id, ex.reachR2->id, ex.stay->id,
    ex.avoid->id};
  EXPECT_TRUE(nextTasks(ex.out, order, bindings, all).empty());
}

TEST(Binding, WindowsNarrowUnderBindings)
{
  const RunningExample ex;
  Binding bindings(ex.out, 1000000);
  EXPECT_EQ(bindings.window(ex.reachR2->satVar(), {0, 100}), Range(7, 35));
  ASSERT_TRUE(bindings.bind(ex.reachR1->satVar(), 7));
  // r1 at 7 pins the outer time to 6, so r2 lands in [12, 21].
  EXPECT_EQ(bindings.window(ex.reachR2->satVar(), {0, 100}), Range(12, 21));
  EXPECT_FALSE(bindings.consistent(ex.reachR2->satVar(), 30));
  EXPECT_FALSE(bindings.bind(ex.reachR1->satVar(), 8));
}

TEST(Slice, Example)
{
  const auto slices = slice({
    entry(2, ConstraintKind::Reach, 2, 21, r("r1")),
    entry(4, ConstraintKind::Inv, 1, 35, Formula::negate(r("r3")))});
  std::vector<Interval> intervals;
  for (const auto& s : slices)
  {
    if (intervals.empty() || !(intervals.back() == s.interval))
      intervals.push_back(s.interval);
  }
  EXPECT_EQ(intervals,
    (std::vector<Interval>{Interval(1, 1), Interval(2, 21), Interval(22, 35)}));

  int reach_in_middle = 0;
  for (const auto& s : slices)
  {
    if (s.kind == ConstraintKind::Reach)
    {
      EXPECT_EQ(s.interval, Interval(2, 21));
      ++reach_in_middle;
    }
  }
  EXPECT_EQ(reach_in_middle, 1);
  EXPECT_EQ(slices.size(), 4u);
}

TEST(Slice, SingleAndConjoined)
{
  const auto one = slice({entry(1, ConstraintKind::Inv, 3, 9, r("p"))});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].interval, Interval(3, 9));

  const auto both = slice({entry(1, ConstraintKind::Reach, 0, 4, r("p")),
    entry(2, ConstraintKind::Reach, 0, 4, r("q"))});
  ASSERT_EQ(both.size(), 1u);
  EXPECT_EQ(both[0].interval, Interval(0, 4));
  EXPECT_EQ(both[0].prop, Formula::conj(r("p"), r("q")));
  EXPECT_EQ(both[0].sources.size(), 2u);
}

TEST(Slice, PartitionsRandomSets)
{
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> point(0, 30);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 500; ++trial)
  {
    std::vector<ConcreteTask> input;
    const int n = count(rng);
    for (int i = 1; i <= n; ++i)
    {
      int a = point(rng);
      int b = point(rng);
      if (a > b)
        std::swap(a, b);
      input.push_back(entry(i, coin(rng) ? ConstraintKind::Reach
        : ConstraintKind::Inv, a, b, r("p" + std::to_string(i))));
    }

    const auto slices = slice(input);
    std::map<int, std::set<int>> active_at;
    for (const auto& x : input)
    {
      for (int t = x.interval.lo; t <= x.interval.hi; ++t)
        active_at[t].insert(x.id);
    }

    // Every active step lies in exactly one slice interval, and the set of
    // sources is the active set at every step of the slice.
    std::map<int, int> covered;
    std::set<std::pair<int, int>> seen;
    for (const auto& s : slices)
    {
      if (seen.insert({s.interval.lo, s.interval.hi}).second)
      {
        for (int t = s.interval.lo; t <= s.interval.hi; ++t)
          ++covered[t];
      }
    }
    for (const auto& [t, set] : active_at)
      ASSERT_EQ(covered[t], 1) << "step " << t;
    for (const auto& [t, k] : covered)
      ASSERT_TRUE(active_at.count(t)) << "inactive step " << t;

    std::map<std::pair<int, int>, std::set<int>> sources;
    for (const auto& s : slices)
    {
      for (const auto& src : s.sources)
        sources[{s.interval.lo, s.interval.hi}].insert(src.id);
    }
    for (const auto& [iv, set] : sources)
    {
      for (int t = iv.first; t <= iv.second; ++t)
        ASSERT_EQ(active_at[t], set);
    }
  }
}

TEST(NextAtomic, EarliestSliceAndTies)
{
  const auto slices = slice({
    entry(2, ConstraintKind::Reach, 2, 21, r("r1")),
    entry(4, ConstraintKind::Inv, 1, 35, Formula::negate(r("r3")))});
  const auto first = nextAtomic(slices);
  EXPECT_EQ(first.interval, Interval(1, 1));
  EXPECT_FALSE(first.reachProp);
  ASSERT_TRUE(first.invProp);
  EXPECT_EQ(*first.invProp, Formula::negate(r("r3")));

  const auto single = nextAtomic({entry(3, ConstraintKind::Inv, 4, 8, r("p"))});
  EXPECT_EQ(single.interval, Interval(4, 8));

  const auto tie = nextAtomic({entry(5, ConstraintKind::Reach, 2, 6, r("q")),
    entry(3, ConstraintKind::Reach, 2, 9, r("p")),
    entry(1, ConstraintKind::Reach, 2, 6, r("s"))});
  EXPECT_EQ(tie.interval, Interval(2, 6));

  const auto same = nextAtomic({entry(7, ConstraintKind::Reach, 2, 6, r("q")),
    entry(3, ConstraintKind::Inv, 2, 6, r("p"))});
  ASSERT_TRUE(same.reachProp && same.invProp);

  EXPECT_THROW(nextAtomic({}), Error);
}

TEST(ExtractTime, EarliestWitnessBindsSatisfactionTime)
{
  const RunningExample ex;
  const Environment env = test::runningExampleEnvironment();
  Binding bindings(ex.out, 1000000);
  Coverage coverage;

  // Outside r1 until step 7, then inside.
  std::vector<double> xs;
  std::vector<double> ys;
  for (int t = 2; t <= 9; ++t)
  {
    xs.push_back(2.0);
    ys.push_back(t < 7 ? 3.0 : 6.0);
  }
  Trajectory seg = test::signal(xs, ys);
  seg.t0 = 2;

  AtomicTask task;
  task.interval = Interval(2, 21);
  task.reachProp = r("r1");
  task.invProp = Formula::negate(r("r3"));
  task.sources = {{ex.reachR1->id, ConstraintKind::Reach},
    {ex.avoid->id, ConstraintKind::Inv}};

  const auto result = extractTime(seg, task, ex.out, bindings, coverage, env);
  EXPECT_EQ(result.added.at(ex.reachR1->satVar()), 7);
  EXPECT_EQ(bindings.values().at(ex.reachR1->satVar()), 7);
  EXPECT_EQ(result.satisfied, std::vector<int>{ex.reachR1->id});
  EXPECT_EQ(result.progressed, std::vector<int>{ex.avoid->id});
  EXPECT_TRUE(coverage.covers(ex.avoid->id, 2));
  EXPECT_TRUE(coverage.covers(ex.avoid->id, 9));
  EXPECT_FALSE(coverage.covers(ex.avoid->id, 10));
  EXPECT_FALSE(coverage.complete(ex.avoid->id));
}

TEST(ExtractTime, InvariantPortionAndBoundaryWitness)
{
  const RunningExample ex;
  const Environment env = test::runningExampleEnvironment();

  {
    Binding bindings(ex.out, 1000000);
    Coverage coverage;
    Trajectory seg = test::signal({1.0, 1.0}, {1.0, 1.0});
    AtomicTask task;
    task.interval = Interval(1, 1);
    task.invProp = Formula::negate(r("r3"));
    task.sources = {{ex.avoid->id, ConstraintKind::Inv}};
    const auto result = extractTime(seg, task, ex.out, bindings, coverage, env);
    EXPECT_EQ(result.progressed, std::vector<int>{ex.avoid->id});
    EXPECT_TRUE(coverage.covers(ex.avoid->id, 1));
  }

  {
    Binding bindings(ex.out, 1000000);
    Coverage coverage;
    Trajectory seg = test::signal({2.0, 2.0, 2.0}, {6.0, 6.0, 6.0});
    seg.t0 = 2;
    AtomicTask task;
    task.interval = Interval(2, 21);
    task.reachProp = r("r1");
    task.sources = {{ex.reachR1->id, ConstraintKind::Reach}};
    const auto result = extractTime(seg, task, ex.out, bindings, coverage, env);
    EXPECT_EQ(result.added.at(ex.reachR1->satVar()), 2);
  }
}

TEST(Schedule, InitialViolationIsInfeasible)
{
  const Environment env = test::runningExampleEnvironment();
  const auto out = resolve(flatten(parse("G[0,5](r1)")));
  const auto result = schedule(out, env, env.start);
  EXPECT_EQ(result.status, ScheduleStatus::Infeasible);
  EXPECT_TRUE(result.plan.empty());
  ASSERT_TRUE(result.failure);
  ASSERT_TRUE(result.failure->task);
  EXPECT_EQ(result.failure->task->interval.lo, 0);
}

TEST(Schedule, BareProposition)
{
  Environment env = test::runningExampleEnvironment();
  env.start.position = Vector2(2, 6);
  const auto out = resolve(flatten(parse("r1")));
  const auto result = schedule(out, env, env.start);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.plan.size(), 1);

  std::vector<AtomicTask> planned;
  for (const auto& t : result.trace)
  {
    if (t.task)
      planned.push_back(*t.task);
  }
  // Either confirmed on the committed start state or planned as F[0,0].
  for (const auto& t : planned)
    EXPECT_EQ(t.interval, Interval(0, 0));
}

TEST(Schedule, RunningExampleEndToEnd)
{
  const Environment env = test::runningExampleEnvironment();
  const Formula f = parse(kRunningExample);
  const auto out = resolve(flatten(f));
  ScheduleOptions options;
  options.minLength = horizon(f) + 1;
  const auto result = schedule(out, env, env.start, options);
  ASSERT_TRUE(result.ok()) << (result.failure ? result.failure->reason : "");
  EXPECT_GE(robustness(f, result.plan, 0, env.regions), 0.0);
  EXPECT_TRUE(satisfies(f, result.plan, 0, env.regions));
  EXPECT_TRUE(violatedConstraints(out, result.witness, result.plan,
    env.regions).empty());
}
