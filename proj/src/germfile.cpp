#include "germinv/germfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "germinv/errors.hpp"
#include "germinv/parse.hpp"

namespace germinv {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view strip(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void format_error(const std::string& path, const std::string& msg, std::size_t pos) {
    throw ParseError(ParseError::Kind::Format, path + ": " + msg, pos);
}

std::vector<std::string> split_names(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Splits "(e1, e2, e3)" at top-level commas, returning offsets relative to `s`.
std::vector<std::pair<std::size_t, std::string_view>> split_map(std::string_view s, const std::string& path,
                                                                 std::size_t base) {
    std::size_t lo = 0, hi = s.size();
    if (hi >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0) outer = false;
        }
        if (outer) {
            lo = 1;
            hi = s.size() - 1;
        }
    }
    std::vector<std::pair<std::size_t, std::string_view>> parts;
    int depth = 0;
    std::size_t start = lo;
    for (std::size_t i = lo; i < hi; ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth < 0) format_error(path, "unbalanced ')'", base + i);
        if (s[i] == ',' && depth == 0) {
            parts.emplace_back(start, s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) format_error(path, "unbalanced '('", base + hi);
    parts.emplace_back(start, s.substr(start, hi - start));
    if (parts.size() != 3) format_error(path, "map needs three components, got " + std::to_string(parts.size()), base);
    return parts;
}

}  // namespace

MapGerm GermFile::germ() const {
    if (parameter) throw DomainError(path + ": declares parameter " + *parameter + "; use it as a family");
    return MapGerm(coords[0], coords[1], coords[2]);
}

GermFamily GermFile::family() const {
    if (!parameter) throw DomainError(path + ": no parameter declared");
    return GermFamily(coords, coords[0].vars());
}

GermFile parse_germ_file(std::string_view text, std::string path) {
    GermFile gf;
    gf.path = std::move(path);
    std::optional<std::pair<std::size_t, std::string_view>> map_line;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::size_t offset = line_start;
        line_start = line_end + 1;
        if (strip(line).empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) format_error(gf.path, "expected 'key: value'", offset);
        const std::string key(strip(line.substr(0, colon)));
        const std::string_view raw = line.substr(colon + 1);
        const std::size_t lead = raw.find_first_not_of(" \t\r");
        const std::size_t value_offset = offset + colon + 1 + (lead == std::string_view::npos ? 0 : lead);
        const std::string_view value = strip(raw);

        if (key == "label") {
            gf.label = std::string(value);
        } else if (key == "vars") {
            if (!(gf.source_vars.size() == 0)) format_error(gf.path, "duplicate 'vars'", offset);
            const auto names = split_names(value);
            if (names.size() != 2) format_error(gf.path, "'vars' needs exactly two names", value_offset);
            for (const auto& n : names)
                if (!valid_name(n)) format_error(gf.path, "invalid variable name '" + n + "'", value_offset);
            if (names[0] == names[1]) format_error(gf.path, "repeated variable name", value_offset);
            gf.source_vars = VarList(names);
        } else if (key == "param") {
            if (gf.parameter) format_error(gf.path, "duplicate 'param'", offset);
            const auto names = split_names(value);
            if (names.size() != 1 || !valid_name(names[0]))
                format_error(gf.path, "'param' needs one name", value_offset);
            gf.parameter = names[0];
        } else if (key == "map") {
            if (map_line) format_error(gf.path, "duplicate 'map'", offset);
            map_line = std::make_pair(value_offset, value);
        } else {
            format_error(gf.path, "unknown key '" + key + "'", offset);
        }
    }
    if ((gf.source_vars.size() == 0)) format_error(gf.path, "missing 'vars'", text.size());
    if (!map_line) format_error(gf.path, "missing 'map'", text.size());
    std::vector<std::string> all = gf.source_vars.names();
    if (gf.parameter) {
        for (const auto& v : all)
            if (v == *gf.parameter) format_error(gf.path, "parameter repeats a source variable", 0);
        all.push_back(*gf.parameter);
    }
    const VarList vars(all);
    const auto parts = split_map(map_line->second, gf.path, map_line->first);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t at = map_line->first + parts[i].first;
        try {
            gf.coords[i] = parse_poly(parts[i].second, vars);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            msg = msg.substr(0, msg.rfind(" (at position"));
            throw ParseError(e.kind(), gf.path + ": component " + std::to_string(i + 1) + ": " + msg, at + e.position());
        }
    }
    return gf;
}

GermFile load_germ_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseError::Kind::Format, path.string() + ": cannot read file", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_germ_file(ss.str(), path.string());
}

}  // namespace germinv
