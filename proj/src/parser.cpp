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


#include <stlinc/parser.hpp>
#include <stlinc/errors.hpp>

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

namespace stlinc {

namespace {

enum class Tok
{
  Ident, Number, LParen, RParen, LBracket, RBracket, Comma,
  And, Or, Bang, Star, Plus, Minus, Cmp, End
};

struct Token
{
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

//==============================================================================
std::vector<Token> lex(std::string_view text)
{
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;

  auto push = [&](Tok k, std::size_t len)
  {
    out.push_back({k, std::string(text.substr(i, len)), line, col});
    i += len;
    col += len;
  };

  while (i < text.size())
  {
    const char c = text[i];
    if (c == '\n')
    {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)))
    {
      ++i;
      ++col;
      continue;
    }
    if (c == '#')
    {
      while (i < text.size() && text[i] != '\n')
        ++i;
      continue;
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
    {
      std::size_t n = 1;
      while (i + n < text.size()
        && (std::isalnum(static_cast<unsigned char>(text[i+n]))
        || text[i+n] == '_'))
      {
        ++n;
      }
      push(Tok::Ident, n);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
    {
      std::size_t n = 0;
      while (i + n < text.size()
        && (std::isdigit(static_cast<unsigned char>(text[i+n]))
        || text[i+n] == '.'))
      {
        ++n;
      }
      if (i + n < text.size() && (text[i+n] == 'e' || text[i+n] == 'E'))
      {
        std::size_t m = n + 1;
        if (i + m < text.size() && (text[i+m] == '+' || text[i+m] == '-'))
          ++m;
        if (i + m < text.size()
          && std::isdigit(static_cast<unsigned char>(text[i+m])))
        {
          while (i + m < text.size()
            && std::isdigit(static_cast<unsigned char>(text[i+m])))
          {
            ++m;
          }
          n = m;
        }
      }
      push(Tok::Number, n);
      continue;
    }

    if ((c == '>' || c == '<'))
    {
      const bool eq = i + 1 < text.size() && text[i+1] == '=';
      push(Tok::Cmp, eq ? 2 : 1);
      continue;
    }

    switch (c)
    {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '[': push(Tok::LBracket, 1); continue;
      case ']': push(Tok::RBracket, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      case '!': push(Tok::Bang, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
            line, col);
    }
  }

  out.push_back({Tok::End, "", line, col});
  return out;
}

//==============================================================================
class Parser
{
public:
  explicit Parser(std::vector<Token> tokens)
  : _tokens(std::move(tokens))
  {}

  Formula parse_all()
  {
    Formula f = parse_or();
    if (peek().kind != Tok::End)
      fail("unexpected '" + peek().text + "'");
    return f;
  }

private:
  const Token& peek(std::size_t ahead = 0) const
  {
    return _tokens[std::min(_pos + ahead, _tokens.size() - 1)];
  }

  const Token& next()
  {
    const Token& t = _tokens[_pos];
    if (_pos + 1 < _tokens.size())
      ++_pos;
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError(what, peek().line, peek().column);
  }

  const Token& expect(Tok kind, const char* what)
  {
    if (peek().kind != kind)
    {
      fail(std::string("expected ") + what + ", found '"
        + (peek().kind == Tok::End ? std::string("end of input") : peek().text)
        + "'");
    }
    return next();
  }

  Formula parse_or()
  {
    Formula f = parse_and();
    while (peek().kind == Tok::Or)
    {
      next();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and()
  {
    Formula f = parse_unary();
    while (peek().kind == Tok::And)
    {
      next();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary()
  {
    if (peek().kind == Tok::Bang)
    {
      next();
      return Formula::negate(parse_unary());
    }
    return parse_primary();
  }

  int parse_int()
  {
    const Token& t = expect(Tok::Number, "integer");
    int value = 0;
    const auto* begin = t.text.data();
    const auto* end = begin + t.text.size();
    const auto r = std::from_chars(begin, end, value);
    if (r.ec != std::errc() || r.ptr != end)
      throw ParseError("expected integer, found '" + t.text + "'",
          t.line, t.column);
    return value;
  }

  double parse_number()
  {
    bool negative = false;
    while (peek().kind == Tok::Minus || peek().kind == Tok::Plus)
    {
      if (next().kind == Tok::Minus)
        negative = !negative;
    }
    const Token& t = expect(Tok::Number, "number");
    std::size_t used = 0;
    double value = 0.0;
    try
    {
      value = std::stod(t.text, &used);
    }
    catch (const std::exception&)
    {
      used = 0;
    }
    if (used != t.text.size())
      throw ParseError("malformed number '" + t.text + "'", t.line, t.column);
    return negative ? -value : value;
  }

  bool is_axis(const Token& t) const
  {
    return t.kind == Tok::Ident && (t.text == "x" || t.text == "y");
  }

  bool starts_linpred() const
  {
    const Token& t = peek();
    if (t.kind == Tok::Number || t.kind == Tok::Minus)
      return true;
    return is_axis(t);
  }

  Formula parse_temporal(bool eventually)
  {
    next();
    expect(Tok::LBracket, "'['");
    const Token& lo_tok = peek();
    const int lo = parse_int();
    expect(Tok::Comma, "','");
    const int hi = parse_int();
    expect(Tok::RBracket, "']'");

    Interval interval;
    try
    {
      interval = Interval(lo, hi);
    }
    catch (const Error& e)
    {
      throw ParseError(e.what(), lo_tok.line, lo_tok.column);
    }

    expect(Tok::LParen, "'('");
    Formula body = parse_or();
    expect(Tok::RParen, "')'");
    return eventually ? Formula::eventually(interval, std::move(body))
      : Formula::always(interval, std::move(body));
  }

  Formula parse_linpred()
  {
    Vector2 a = Vector2::Zero();
    bool first = true;
    for (;;)
    {
      double sign = 1.0;
      if (!first)
      {
        if (peek().kind == Tok::Plus)
          next();
        else if (peek().kind == Tok::Minus)
        {
          next();
          sign = -1.0;
        }
        else
          break;
      }
      first = false;

      while (peek().kind == Tok::Minus)
      {
        next();
        sign = -sign;
      }

      double coeff = 1.0;
      if (peek().kind == Tok::Number)
      {
        coeff = parse_number();
        expect(Tok::Star, "'*'");
      }

      if (!is_axis(peek()))
        fail("expected 'x' or 'y' in linear predicate");
      const bool is_x = next().text == "x";
      (is_x ? a.x() : a.y()) += sign * coeff;
    }

    const Token& cmp = expect(Tok::Cmp, "comparison");
    const double rhs = parse_number();
    if (cmp.text[0] == '>')
      return Formula::halfplane(a, rhs);
    return Formula::halfplane(-a, -rhs);
  }

  Formula parse_primary()
  {
    const Token& t = peek();
    if (t.kind == Tok::Ident
      && (t.text == "F" || t.text == "G")
      && peek(1).kind == Tok::LBracket)
    {
      return parse_temporal(t.text == "F");
    }

    if (t.kind == Tok::LParen)
    {
      next();
      Formula f = parse_or();
      expect(Tok::RParen, "')'");
      return f;
    }

    if (starts_linpred())
      return parse_linpred();

    if (t.kind == Tok::Ident)
      return Formula::region(next().text);

    if (t.kind == Tok::End)
      fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> _tokens;
  std::size_t _pos = 0;
};

} // anonymous namespace

//==============================================================================
Formula parse(std::string_view text)
{
  return Parser(lex(text)).parse_all();
}

} // namespace stlinc
