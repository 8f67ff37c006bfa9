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


#ifndef STLINC__PARSER_HPP
#define STLINC__PARSER_HPP

#include <stlinc/formula.hpp>

#include <string_view>

namespace stlinc {

/// Parse a specification. Accepts
///
///   expr      := and ('|' and)*
///   and       := unary ('&' unary)*
///   unary     := '!' unary | primary
///   primary   := ('F'|'G') '[' int ',' int ']' '(' expr ')'
///              | '(' expr ')' | linpred | ident
///   linpred   := linexpr cmp number      cmp in {>=, <=, >, <}
///   linexpr   := term (('+'|'-') term)*
///   term      := ['-'] [number '*'] ('x'|'y')
///
/// Identifiers other than x and y name regions. Strictness of the
/// comparison is dropped. Throws ParseError with line and column.
/// Fragment restrictions are not enforced here; see validateFragment().
Formula parse(std::string_view text);

} // namespace stlinc

#endif // STLINC__PARSER_HPP
