#pragma once

#include <string_view>

#include "germinv/mpoly.hpp"

namespace germinv {

/// Parses a polynomial expression over `vars` (at most four names).
///
/// Grammar: sums and differences of products of factors; `^` or `**` for
/// non-negative integer powers; `*` may be omitted between factors; `/` only
/// by a nonzero constant, so `5/2` is a rational literal. An identifier that
/// is not a declared variable is split into declared names when possible
/// (`xy` means `x*y`). Whitespace is ignored.
///
/// Throws ParseError with a character position on malformed input.
MPoly parse_poly(std::string_view src, const VarList& vars);

}  // namespace germinv
