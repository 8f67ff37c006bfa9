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


#include <stlinc/formula.hpp>
#include <stlinc/errors.hpp>

#include <cstdio>
#include <sstream>

namespace stlinc {

Interval::Interval(int lo_, int hi_)
: lo(lo_), hi(hi_)
{
  if (lo < 0)
    throw Error("interval lower bound " + std::to_string(lo) + " < 0");
  if (lo > hi)
  {
    throw Error("interval lo > hi: [" + std::to_string(lo) + ","
      + std::to_string(hi) + "]");
  }
}

//==============================================================================
Formula Formula::pred(Predicate p)
{
  Node n;
  n.op = Op::Pred;
  n.pred = std::move(p);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
Formula Formula::region(std::string name)
{
  return pred(RegionRef{std::move(name)});
}

//==============================================================================
Formula Formula::halfplane(const Vector2& a, double b)
{
  return pred(Halfplane{a, b});
}

//==============================================================================
Formula Formula::negate(Formula f)
{
  Node n;
  n.op = Op::Not;
  n.lhs = std::make_shared<const Formula>(std::move(f));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
Formula Formula::conj(Formula lhs, Formula rhs)
{
  Node n;
  n.op = Op::And;
  n.lhs = std::make_shared<const Formula>(std::move(lhs));
  n.rhs = std::make_shared<const Formula>(std::move(rhs));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
Formula Formula::disj(Formula lhs, Formula rhs)
{
  Node n;
  n.op = Op::Or;
  n.lhs = std::make_shared<const Formula>(std::move(lhs));
  n.rhs = std::make_shared<const Formula>(std::move(rhs));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
Formula Formula::eventually(Interval i, Formula f)
{
  Node n;
  n.op = Op::Eventually;
  n.interval = i;
  n.lhs = std::make_shared<const Formula>(std::move(f));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
Formula Formula::always(Interval i, Formula f)
{
  Node n;
  n.op = Op::Always;
  n.interval = i;
  n.lhs = std::make_shared<const Formula>(std::move(f));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

//==============================================================================
bool Formula::isPropositional() const
{
  switch (op())
  {
    case Op::Pred:
      return true;
    case Op::Not:
      return child().isPropositional();
    case Op::And:
    case Op::Or:
      return lhs().isPropositional() && rhs().isPropositional();
    case Op::Eventually:
    case Op::Always:
      return false;
  }
  return false;
}

//==============================================================================
bool Formula::operator==(const Formula& other) const
{
  if (_node == other._node)
    return true;

  if (op() != other.op())
    return false;

  switch (op())
  {
    case Op::Pred:
      return predicate() == other.predicate();
    case Op::Not:
      return child() == other.child();
    case Op::And:
    case Op::Or:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case Op::Eventually:
    case Op::Always:
      return interval() == other.interval() && child() == other.child();
  }
  return false;
}

namespace {

//==============================================================================
std::string number(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

//==============================================================================
std::string print_halfplane(const Halfplane& h)
{
  const double ax = h.a.x();
  const double ay = h.a.y();
  if (ax == 1.0 && ay == 0.0)
    return "x >= " + number(h.b);
  if (ax == -1.0 && ay == 0.0)
    return "x <= " + number(-h.b);
  if (ax == 0.0 && ay == 1.0)
    return "y >= " + number(h.b);
  if (ax == 0.0 && ay == -1.0)
    return "y <= " + number(-h.b);

  return number(ax) + "*x + " + number(ay) + "*y >= " + number(h.b);
}

//==============================================================================
void print_into(std::ostringstream& out, const Formula& f)
{
  switch (f.op())
  {
    case Op::Pred:
    {
      if (const auto* r = std::get_if<RegionRef>(&f.predicate()))
        out << r->name;
      else
        out << print_halfplane(std::get<Halfplane>(f.predicate()));
      return;
    }
    case Op::Not:
    {
      out << "!";
      const bool wrap = f.child().op() == Op::Pred
        && std::holds_alternative<Halfplane>(f.child().predicate());
      if (wrap)
        out << "(";
      print_into(out, f.child());
      if (wrap)
        out << ")";
      return;
    }
    case Op::And:
    case Op::Or:
      out << "(";
      print_into(out, f.lhs());
      out << (f.op() == Op::And ? " & " : " | ");
      print_into(out, f.rhs());
      out << ")";
      return;
    case Op::Eventually:
    case Op::Always:
      out << (f.op() == Op::Eventually ? "F[" : "G[")
          << f.interval().lo << "," << f.interval().hi << "](";
      print_into(out, f.child());
      out << ")";
      return;
  }
}

//==============================================================================
Formula nnf(const Formula& f, bool negated)
{
  switch (f.op())
  {
    case Op::Pred:
    {
      if (!negated)
        return f;
      if (const auto* h = std::get_if<Halfplane>(&f.predicate()))
        return Formula::halfplane(-h->a, -h->b);
      return Formula::negate(f);
    }
    case Op::Not:
      return nnf(f.child(), !negated);
    case Op::And:
    case Op::Or:
    {
      const bool is_and = (f.op() == Op::And) != negated;
      auto l = nnf(f.lhs(), negated);
      auto r = nnf(f.rhs(), negated);
      return is_and ? Formula::conj(std::move(l), std::move(r))
        : Formula::disj(std::move(l), std::move(r));
    }
    case Op::Eventually:
    case Op::Always:
    {
      const bool is_f = (f.op() == Op::Eventually) != negated;
      auto c = nnf(f.child(), negated);
      return is_f ? Formula::eventually(f.interval(), std::move(c))
        : Formula::always(f.interval(), std::move(c));
    }
  }
  return f;
}

//==============================================================================
int temporal_path_max(const Formula& f)
{
  switch (f.op())
  {
    case Op::Pred:
      return 0;
    case Op::Not:
      return temporal_path_max(f.child());
    case Op::And:
    case Op::Or:
      return std::max(temporal_path_max(f.lhs()), temporal_path_max(f.rhs()));
    case Op::Eventually:
    case Op::Always:
      return 1 + temporal_path_max(f.child());
  }
  return 0;
}

} // anonymous namespace

//==============================================================================
std::string print(const Formula& f)
{
  std::ostringstream out;
  print_into(out, f);
  return out.str();
}

//==============================================================================
Formula negationNormalForm(const Formula& f)
{
  return nnf(f, false);
}

//==============================================================================
Formula desugarRegions(const Formula& f, const RegionMap& regions)
{
  switch (f.op())
  {
    case Op::Pred:
    {
      const auto* r = std::get_if<RegionRef>(&f.predicate());
      if (!r)
        return f;

      const auto it = regions.find(r->name);
      if (it == regions.end())
        throw UnknownRegion("unknown region '" + r->name + "'");

      const Rect& box = it->second.box;
      auto x_lo = Formula::halfplane(Vector2(1, 0), box.min.x());
      auto x_hi = Formula::halfplane(Vector2(-1, 0), -box.max.x());
      auto y_lo = Formula::halfplane(Vector2(0, 1), box.min.y());
      auto y_hi = Formula::halfplane(Vector2(0, -1), -box.max.y());
      return Formula::conj(
        Formula::conj(std::move(x_lo), std::move(x_hi)),
        Formula::conj(std::move(y_lo), std::move(y_hi)));
    }
    case Op::Not:
      return Formula::negate(desugarRegions(f.child(), regions));
    case Op::And:
      return Formula::conj(desugarRegions(f.lhs(), regions),
          desugarRegions(f.rhs(), regions));
    case Op::Or:
      return Formula::disj(desugarRegions(f.lhs(), regions),
          desugarRegions(f.rhs(), regions));
    case Op::Eventually:
      return Formula::eventually(f.interval(),
          desugarRegions(f.child(), regions));
    case Op::Always:
      return Formula::always(f.interval(),
          desugarRegions(f.child(), regions));
  }
  return f;
}

//==============================================================================
int nestingDepth(const Formula& f)
{
  return std::max(0, temporal_path_max(f) - 1);
}

} // namespace stlinc
