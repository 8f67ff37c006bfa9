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


#ifndef STLINC__ERRORS_HPP
#define STLINC__ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stlinc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
  : Error(what + " at line " + std::to_string(line) + ", column "
      + std::to_string(column)),
    _line(line),
    _column(column)
  {}

  std::size_t line() const { return _line; }
  std::size_t column() const { return _column; }

private:
  std::size_t _line;
  std::size_t _column;
};

class FragmentViolation : public Error
{
public:
  using Error::Error;
};

class SignalTooShort : public Error
{
public:
  using Error::Error;
};

class UnknownRegion : public Error
{
public:
  using Error::Error;
};

class UnboundVariable : public Error
{
public:
  using Error::Error;
};

class MalformedBound : public Error
{
public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error
{
public:
  EnumerationCapExceeded(std::size_t size, std::size_t cap)
  : Error("assignment space of size " + std::to_string(size)
      + " exceeds cap " + std::to_string(cap)),
    _size(size)
  {}

  std::size_t size() const { return _size; }

private:
  std::size_t _size;
};

class InconsistentWindows : public Error
{
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error
{
public:
  using Error::Error;
};

} // namespace stlinc

#endif // STLINC__ERRORS_HPP
