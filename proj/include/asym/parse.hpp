#pragma once

#include <asym/expr.hpp>

#include <string_view>

namespace asym
{

/*! \brief Parses the concrete expression syntax.

  Precedence, tightest first:

      !x        negation (prefix)
      x & y     AND
      x @ y     IAND chain, pairs left to right
      x | y     OR
      x -> y    IMPLY chain, pairs right to left

  Atoms are `0`, `1`, identifiers and parenthesized expressions. Mixing `@`
  and `->` at one nesting level without parentheses is rejected, so the
  pairing order of every asymmetric operator is always explicit.

  Throws parse_error (with a 0-based character offset) on bad input.
*/
Expression parse( std::string_view text );

} // namespace asym
