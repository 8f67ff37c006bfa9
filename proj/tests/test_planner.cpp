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

#include <stlinc/parser.hpp>
#include <stlinc/planner.hpp>
#include <stlinc/semantics.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace stlinc;

namespace {

Formula r(const std::string& name) { return Formula::region(name); }

AtomicTask task(int lo, int hi, std::optional<Formula> reach,
  std::optional<Formula> inv)
{
  AtomicTask t;
  t.interval = Interval(lo, hi);
  t.reachProp = std::move(reach);
  t.invProp = std::move(inv);
  return t;
}

} // anonymous namespace

TEST(Dynamics, FixedPointAndDrift)
{
  const Environment env = test::runningExampleEnvironment();
  const State rest;
  EXPECT_EQ(step(rest, Vector2::Zero(), env), rest);

  State moving;
  moving.velocity = Vector2(1, 0);
  const State next = step(moving, Vector2::Zero(), env);
  EXPECT_EQ(next.position, Vector2(1, 0));
  EXPECT_EQ(next.velocity, Vector2(1, 0));
}

TEST(Dynamics, MatchesClosedForm)
{
  Environment env = test::runningExampleEnvironment();
  env.dynamics.vmax = 2.0;
  env.dynamics.dt = 0.5;
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 10; ++i)
  {
    State s;
    s.position = Vector2(u(rng), u(rng));
    s.velocity = Vector2(u(rng), u(rng));
    const Vector2 c(u(rng), u(rng));
    const State n = step(s, c, env);
    const double dt = 0.5;
    for (int k = 0; k < 2; ++k)
    {
      EXPECT_DOUBLE_EQ(n.position[k],
        s.position[k] + s.velocity[k] * dt + 0.5 * c[k] * dt * dt);
      EXPECT_DOUBLE_EQ(n.velocity[k],
        std::clamp(s.velocity[k] + c[k] * dt, -2.0, 2.0));
    }
  }
}

TEST(PropRobustness, Examples)
{
  Environment env;
  env.bounds = Rect{Vector2(-5, -5), Vector2(5, 5)};
  env.regions["R1"] = Region{Rect{Vector2(0, 0), Vector2(1, 1)}};
  env.regions["O1"] = Region{Rect{Vector2(2, 2), Vector2(3, 3)},
    RegionRole::Obstacle};

  State s;
  s.position = Vector2(0.5, 0.5);
  EXPECT_DOUBLE_EQ(propRobustness(r("R1"), s, env), 0.5);

  s.position = Vector2(2.5, 2.25);
  EXPECT_LT(propRobustness(Formula::negate(r("O1")), s, env), 0.0);

  s.position = Vector2(1.0, 0.5);
  EXPECT_EQ(propRobustness(r("R1"), s, env), 0.0);
}

TEST(Planner, SingleStepInvariant)
{
  const Environment env = test::runningExampleEnvironment();
  const auto t = task(1, 1, std::nullopt, Formula::negate(r("r3")));
  const auto result = plan(t, env.start, 0, env);
  ASSERT_TRUE(result.ok()) << result.failure;
  const auto& traj = result.segment->trajectory;
  EXPECT_EQ(traj.t0, 0);
  EXPECT_EQ(traj.end(), 1);
  EXPECT_GT(propRobustness(Formula::negate(r("r3")), traj.at(1), env), 0.0);
  EXPECT_TRUE(validateSegment(*result.segment, t, env));
}

TEST(Planner, ReachWhileAvoiding)
{
  const Environment env = test::runningExampleEnvironment();
  const auto t = task(2, 21, r("r1"), Formula::negate(r("r3")));
  const auto result = plan(t, env.start, 0, env);
  ASSERT_TRUE(result.ok()) << result.failure;
  const auto& seg = *result.segment;
  ASSERT_TRUE(seg.reachWitness);
  EXPECT_GE(*seg.reachWitness, 2);
  EXPECT_LE(*seg.reachWitness, 21);
  EXPECT_GT(propRobustness(r("r1"), seg.trajectory.at(*seg.reachWitness), env),
    env.epsilon);
  for (int k = 2; k <= seg.trajectory.end(); ++k)
  {
    EXPECT_GT(propRobustness(Formula::negate(r("r3")), seg.trajectory.at(k),
      env), 0.0);
  }
  EXPECT_TRUE(validateSegment(seg, t, env));
}

TEST(Planner, UnreachableFails)
{
  const Environment env = test::runningExampleEnvironment();
  const auto result = plan(task(0, 1, r("r2"), std::nullopt), env.start, 0, env);
  EXPECT_FALSE(result.ok());
  EXPECT_FALSE(result.failure.empty());
}

TEST(Planner, ValidationDetectsTampering)
{
  const Environment env = test::runningExampleEnvironment();
  const auto t = task(2, 21, r("r1"), Formula::negate(r("r3")));
  const auto result = plan(t, env.start, 0, env);
  ASSERT_TRUE(result.ok());

  PlanSegment perturbed = *result.segment;
  perturbed.trajectory.states[1].position.x() += 0.25;
  const auto a = validateSegment(perturbed, t, env);
  EXPECT_FALSE(a);
  EXPECT_NE(a.message.find("dynamics"), std::string::npos) << a.message;

  // Stopping before the witness leaves the reach unmet.
  PlanSegment truncated = *result.segment;
  truncated.reachWitness.reset();
  truncated.trajectory.states.resize(2);
  truncated.trajectory.inputs.resize(1);
  EXPECT_FALSE(validateSegment(truncated, t, env));
}

TEST(Planner, WiderWindowNeverWitnessesLater)
{
  // A wider window contains every path of a narrower one.
  const Environment env = test::runningExampleEnvironment();
  const auto narrow = plan(task(0, 6, r("r1"), std::nullopt), env.start, 0, env);
  const auto wide = plan(task(0, 12, r("r1"), std::nullopt), env.start, 0, env);
  ASSERT_TRUE(narrow.ok());
  ASSERT_TRUE(wide.ok());
  EXPECT_LE(*wide.segment->reachWitness, *narrow.segment->reachWitness);
}

TEST(Planner, Deterministic)
{
  const Environment env = test::runningExampleEnvironment();
  const auto t = task(3, 30, r("r2"), Formula::negate(r("o1")));
  const auto a = plan(t, env.start, 0, env);
  const auto b = plan(t, env.start, 0, env);
  ASSERT_TRUE(a.ok());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(a.segment->trajectory.states, b.segment->trajectory.states);
  EXPECT_EQ(a.segment->trajectory.inputs, b.segment->trajectory.inputs);
  EXPECT_EQ(a.expanded, b.expanded);
}

TEST(AtomicTask, FormulaIsAnchoredAtCursor)
{
  const auto t = task(2, 21, r("r1"), Formula::negate(r("r3")));
  const auto f = t.formula(2, 30, true);
  ASSERT_TRUE(f);
  EXPECT_EQ(print(*f), print(parse("F[0,19](r1) & G[0,19](!r3)")));
}
