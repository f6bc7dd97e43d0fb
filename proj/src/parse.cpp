#include "germinv/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "germinv/errors.hpp"

namespace germinv {
namespace {

using Kind = ParseError::Kind;

class Parser {
public:
    Parser(std::string_view src, const VarList& vars) : src_(src), vars_(vars) {}

    MPoly run() {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError(Kind::Syntax, "empty expression", pos_);
        MPoly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError(Kind::Syntax, std::string("unexpected '") + src_[pos_] + "'", pos_);
        return p;
    }

private:
    std::string_view src_;
    const VarList& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    std::optional<char> peek() {
        skip_ws();
        if (pos_ < src_.size()) return src_[pos_];
        return std::nullopt;
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (src_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    bool at_power() {
        skip_ws();
        return src_.substr(pos_, 1) == "^" || src_.substr(pos_, 2) == "**";
    }
    bool starts_primary() {
        auto c = peek();
        if (!c) return false;
        return std::isdigit(static_cast<unsigned char>(*c)) || std::isalpha(static_cast<unsigned char>(*c)) ||
               *c == '_' || *c == '(';
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (accept("+")) {
                acc += term();
            } else if (accept("-")) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = unary();
        for (;;) {
            if (accept("*")) {
                acc *= unary();
            } else if (peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                MPoly d = unary();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError(Kind::Syntax, "division only by a nonzero constant", at);
                acc *= Rat(1) / d.constant_term();
            } else if (starts_primary()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    MPoly unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    // In a split identifier such as xy^3 the exponent binds to the last name only.
    MPoly power() {
        MPoly prefix = MPoly::constant(vars_, 1);
        MPoly base = primary(prefix);
        while (at_power()) {
            if (!accept("**")) accept("^");
            skip_ws();
            const std::size_t at = pos_;
            if (accept("-")) throw ParseError(Kind::NegativeExponent, "negative exponent", at);
            accept("+");
            skip_ws();
            bool paren = accept("(");
            skip_ws();
            if (paren && accept("-")) throw ParseError(Kind::NegativeExponent, "negative exponent", at);
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError(Kind::Syntax, "expected integer exponent", pos_);
            const auto digits = src_.substr(start, pos_ - start);
            if (digits.size() > 6) throw ParseError(Kind::Syntax, "exponent too large", start);
            const unsigned k = static_cast<unsigned>(std::stoul(std::string(digits)));
            if (paren && !accept(")")) throw ParseError(Kind::Syntax, "expected ')'", pos_);
            base = base.pow(k);
        }
        return prefix * base;
    }

    MPoly primary(MPoly& prefix) {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError(Kind::Syntax, "unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (!accept(")")) throw ParseError(Kind::Syntax, "expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return MPoly::constant(vars_, Rat(Int(std::string(src_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\''))
                ++pos_;
            return identifier(src_.substr(start, pos_ - start), start, prefix);
        }
        throw ParseError(Kind::Syntax, std::string("unexpected '") + c + "'", pos_);
    }

    // A declared name, or a concatenation of declared names.
    MPoly identifier(std::string_view name, std::size_t at, MPoly& prefix) {
        const std::size_t n = name.size();
        // split[i]: length of a declared name that starts a valid split of name[i..]
        std::vector<std::size_t> split(n + 1, 0);
        std::vector<bool> ok(n + 1, false);
        ok[n] = true;
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                const auto& vn = vars_[v];
                if (name.substr(i, vn.size()) == vn && ok[i + vn.size()] && vn.size() > split[i]) {
                    split[i] = vn.size();
                    ok[i] = true;
                }
            }
        }
        if (!ok[0]) throw ParseError(Kind::UnknownVariable, "unknown variable '" + std::string(name) + "'", at);
        std::size_t i = 0;
        for (; i + split[i] < n; i += split[i]) prefix *= MPoly::variable(vars_, std::string(name.substr(i, split[i])));
        return MPoly::variable(vars_, std::string(name.substr(i, split[i])));
    }
};

}  // namespace

MPoly parse_poly(std::string_view src, const VarList& vars) {
    if (vars.size() == 0) throw DomainError("parse_poly: no variables declared");
    return Parser(src, vars).run();
}

}  // namespace germinv
