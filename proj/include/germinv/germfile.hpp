#pragma once

// Line-oriented germ files:
//
//   # comment
//   label: C5
//   vars: x y
//   param: t            (optional, for one-parameter families)
//   map: (x, y^2, x*y^3 - x^5*y)

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "germinv/germ.hpp"
#include "germinv/slice.hpp"

namespace germinv {

struct GermFile {
    std::string path;
    std::string label;
    VarList source_vars;
    std::optional<std::string> parameter;
    std::array<MPoly, 3> coords;  // over source_vars plus the parameter, if any

    /// Throws DomainError when the file declares a parameter.
    MapGerm germ() const;
    /// Throws DomainError when the file declares no parameter.
    GermFamily family() const;
};

/// Throws ParseError (kind Format for structural problems) with the offset of
/// the offending character in `text`.
GermFile parse_germ_file(std::string_view text, std::string path = "<input>");

/// Reads and parses a file; unreadable files raise ParseError at position 0.
GermFile load_germ_file(const std::filesystem::path& path);

}  // namespace germinv
