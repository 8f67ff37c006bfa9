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


#include <stlinc/planner.hpp>
#include <stlinc/errors.hpp>
#include <stlinc/semantics.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace stlinc {

//==============================================================================
std::optional<Formula> AtomicTask::formula(
  int t0, int end, bool withReach) const
{
  const int lo = std::max(interval.lo, t0) - t0;
  const int hi = std::min(interval.hi, end) - t0;
  if (hi < lo)
    return std::nullopt;

  std::optional<Formula> out;
  auto add = [&](Formula f)
  {
    out = out ? Formula::conj(*out, f) : f;
  };
  if (withReach && reachProp)
    add(Formula::eventually({lo, hi}, *reachProp));
  if (invProp)
    add(Formula::always({lo, hi}, *invProp));
  return out;
}

//==============================================================================
std::string describe(const AtomicTask& task)
{
  std::ostringstream s;
  s << "[" << task.interval.lo << ", " << task.interval.hi << "]";
  if (task.reachProp)
  {
    s << " reach" << (task.reachOptional ? "?" : "") << " "
      << print(*task.reachProp);
  }
  if (task.invProp)
    s << " inv " << print(*task.invProp);
  s << " from {";
  for (std::size_t i = 0; i < task.sources.size(); ++i)
  {
    s << (i ? ", " : "") << to_string(task.sources[i].kind) << " "
      << task.sources[i].id;
  }
  s << "}";
  return s.str();
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Key = std::array<long long, 4>;

struct KeyHash
{
  std::size_t operator()(const Key& k) const
  {
    std::size_t h = 1469598103934665603ull;
    for (const long long v : k)
    {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Node
{
  State state;
  int parent = -1;
  int control = -1;
  double pathMin = kInf;
};

Key quantize(const State& s, const Quantization& q)
{
  return {
    std::llround(s.position.x() / q.position),
    std::llround(s.position.y() / q.position),
    std::llround(s.velocity.x() / q.velocity),
    std::llround(s.velocity.y() / q.velocity)};
}

/// Index of the best candidate by score, then speed. Earlier index wins
/// exact ties. Returns -1 when no candidate is given.
int best_of(const std::vector<Node>& layer,
  const std::vector<std::pair<int, double>>& candidates)
{
  int best = -1;
  double best_score = -kInf;
  double best_speed = kInf;
  for (const auto& [i, score] : candidates)
  {
    const double speed = layer[i].state.velocity.norm();
    if (best < 0 || score > best_score
      || (score == best_score && speed < best_speed))
    {
      best = i;
      best_score = score;
      best_speed = speed;
    }
  }
  return best;
}

} // anonymous namespace

//==============================================================================
PlanResult plan(const AtomicTask& task, const State& start, int cursor,
  const Environment& env)
{
  const int a = task.interval.lo;
  const int b = task.interval.hi;
  if (cursor > b)
  {
    throw Error("planning cursor " + std::to_string(cursor)
      + " lies beyond the task interval end " + std::to_string(b));
  }

  PlanResult result;
  const double eps = env.epsilon;

  auto inv_margin = [&](const State& s, int t)
  {
    if (!task.invProp || t < a || t > b)
      return kInf;
    return propRobustness(*task.invProp, s, env);
  };

  std::vector<std::vector<Node>> layers;

  {
    Node root;
    root.state = start;
    root.pathMin = inv_margin(start, cursor);
    if (!env.inBounds(start.position))
    {
      result.failure = "start state lies outside the workspace";
      return result;
    }
    if (root.pathMin <= eps)
    {
      result.failure = "start state violates the invariant at step "
        + std::to_string(cursor);
      result.bestPartialMargin = root.pathMin;
      return result;
    }
    layers.push_back({root});
  }

  auto finish = [&](int t, int index, double score, bool witnessed)
  {
    PlanSegment seg;
    seg.trajectory.t0 = cursor;
    const int n = t - cursor + 1;
    seg.trajectory.states.resize(n);
    seg.trajectory.inputs.resize(n - 1);
    for (int k = n - 1; k >= 0; --k)
    {
      const Node& node = layers[k][index];
      seg.trajectory.states[k] = node.state;
      if (k > 0)
        seg.trajectory.inputs[k-1] = env.dynamics.controls[node.control];
      index = node.parent;
    }
    if (witnessed)
      seg.reachWitness = t;
    seg.robustnessMargin = score;
    result.segment = std::move(seg);
  };

  for (int t = cursor;; ++t)
  {
    const auto& layer = layers.back();
    result.expanded += layer.size();

    if (task.reachProp && t >= a)
    {
      std::vector<std::pair<int, double>> witnesses;
      for (std::size_t i = 0; i < layer.size(); ++i)
      {
        const double m = propRobustness(*task.reachProp, layer[i].state, env);
        if (m > eps)
          witnesses.emplace_back(i, std::min(m, layer[i].pathMin));
      }
      const int w = best_of(layer, witnesses);
      if (w >= 0)
      {
        const double m = propRobustness(*task.reachProp, layer[w].state, env);
        finish(t, w, std::min(m, layer[w].pathMin), true);
        return result;
      }
    }

    if (t == b)
    {
      if (task.requiresReach())
      {
        result.failure = "no reach witness within ["
          + std::to_string(std::max(a, cursor)) + ", " + std::to_string(b)
          + "]";
        double best = -kInf;
        for (const auto& n : layer)
          best = std::max(best, n.pathMin);
        result.bestPartialMargin = best;
        return result;
      }
      std::vector<std::pair<int, double>> all;
      for (std::size_t i = 0; i < layer.size(); ++i)
        all.emplace_back(i, layer[i].pathMin);
      const int w = best_of(layer, all);
      finish(t, w, layer[w].pathMin, false);
      return result;
    }

    std::vector<Node> next;
    std::unordered_map<Key, int, KeyHash> index;
    index.reserve(layer.size() * 2);
    for (std::size_t i = 0; i < layer.size(); ++i)
    {
      const Node& from = layer[i];
      for (std::size_t u = 0; u < env.dynamics.controls.size(); ++u)
      {
        const State s = step(from.state, env.dynamics.controls[u], env);
        if (!env.inBounds(s.position))
          continue;
        const double m = inv_margin(s, t + 1);
        if (m <= eps)
          continue;

        Node n;
        n.state = s;
        n.parent = static_cast<int>(i);
        n.control = static_cast<int>(u);
        n.pathMin = std::min(from.pathMin, m);

        const auto [it, inserted] =
          index.emplace(quantize(s, env.quantization), next.size());
        if (inserted)
          next.push_back(n);
        else if (n.pathMin > next[it->second].pathMin)
          next[it->second] = n;
      }
    }

    if (next.empty())
    {
      result.failure = "every successor violates the invariant or leaves "
        "the workspace at step " + std::to_string(t + 1);
      double best = -kInf;
      for (const auto& n : layer)
        best = std::max(best, n.pathMin);
      result.bestPartialMargin = best;
      return result;
    }
    layers.push_back(std::move(next));
  }
}

//==============================================================================
SegmentCheck validateSegment(const PlanSegment& segment,
  const AtomicTask& task, const Environment& env)
{
  SegmentCheck check;
  auto fail = [&](std::string message)
  {
    check.ok = false;
    check.message = std::move(message);
    return check;
  };

  const Trajectory& traj = segment.trajectory;
  if (!traj.wellFormed())
    return fail("segment is empty or has mismatched inputs");

  for (std::size_t k = 0; k < traj.inputs.size(); ++k)
  {
    const Vector2& u = traj.inputs[k];
    bool known = false;
    for (const auto& c : env.dynamics.controls)
      known = known || (c - u).cwiseAbs().maxCoeff() <= 1e-12;
    if (!known)
      return fail("input " + std::to_string(k) + " is not in the alphabet");

    const State expected = step(traj.states[k], u, env);
    const State& actual = traj.states[k+1];
    if ((expected.position - actual.position).cwiseAbs().maxCoeff() > 1e-9
      || (expected.velocity - actual.velocity).cwiseAbs().maxCoeff() > 1e-9)
    {
      return fail("state " + std::to_string(traj.t0 + k + 1)
        + " does not follow from the dynamics");
    }
  }

  for (int t = traj.t0; t <= traj.end(); ++t)
  {
    if (!env.inBounds(traj.at(t).position))
      return fail("state " + std::to_string(t) + " leaves the workspace");
  }

  if (task.requiresReach())
  {
    if (!segment.reachWitness)
      return fail("segment has no reach witness");
  }
  if (segment.reachWitness)
  {
    const int w = *segment.reachWitness;
    if (!traj.covers(w) || !task.interval.contains(w))
      return fail("reach witness lies outside the task interval");
  }

  const bool with_reach = task.requiresReach()
    || segment.reachWitness.has_value();
  const auto f = task.formula(traj.t0, traj.end(), with_reach);
  if (f && !satisfies(*f, traj, traj.t0, env.regions))
    return fail("segment violates " + print(*f));

  return check;
}

} // namespace stlinc
