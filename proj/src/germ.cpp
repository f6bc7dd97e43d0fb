#include "germinv/germ.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "germinv/errors.hpp"
#include "germinv/parse.hpp"

namespace germinv {

MapGerm::MapGerm(MPoly f1, MPoly f2, MPoly f3) : f_{std::move(f1), std::move(f2), std::move(f3)} {
    for (const auto& c : f_) {
        if (c.arity() != 2) throw DomainError("map germ coordinates must be polynomials in two variables");
        if (!(c.vars() == f_[0].vars())) throw DomainError("map germ coordinates use different variables");
        if (c.constant_term() != 0) throw DomainError("map germ does not preserve the origin: " + c.to_string());
    }
}

MPoly MapGerm::pullback(const MPoly& target_poly) const {
    if (target_poly.arity() != 3) throw DomainError("pullback: target polynomial must have three variables");
    return target_poly.compose({f_[0], f_[1], f_[2]});
}

MPoly MapGerm::linear_pullback(const std::array<Rat, 3>& coefs) const {
    MPoly r(vars());
    for (std::size_t i = 0; i < 3; ++i) r += f_[i] * coefs[i];
    return r;
}

std::string MapGerm::to_string() const {
    return "(" + f_[0].to_string() + ", " + f_[1].to_string() + ", " + f_[2].to_string() + ")";
}

MapGerm parse_germ(const std::string& text, const VarList& vars) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    std::size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos) throw ParseError(ParseError::Kind::Format, "empty map", 0);
    ++end;
    if (text[begin] == '(' && text[end - 1] == ')') {
        // Strip the outer parentheses only when they enclose the whole text.
        int depth = 0;
        bool encloses = true;
        for (std::size_t i = begin; i < end; ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (depth == 0 && i + 1 < end) {
                encloses = false;
                break;
            }
        }
        if (encloses) {
            ++begin;
            --end;
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    int depth = 0;
    std::size_t start = begin;
    for (std::size_t i = begin; i < end; ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') {
            if (--depth < 0) throw ParseError(ParseError::Kind::Syntax, "unbalanced ')'", i);
        }
        if (text[i] == ',' && depth == 0) {
            pieces.emplace_back(start, i);
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError(ParseError::Kind::Syntax, "unbalanced '('", end);
    pieces.emplace_back(start, end);
    if (pieces.size() != 3)
        throw ParseError(ParseError::Kind::Format,
                         "a map needs exactly three coordinates, got " + std::to_string(pieces.size()), begin);
    std::vector<MPoly> coords;
    for (const auto& [s, e] : pieces) {
        try {
            coords.push_back(parse_poly(std::string_view(text).substr(s, e - s), vars));
        } catch (const ParseError& err) {
            std::string msg = err.what();
            msg = msg.substr(0, msg.rfind(" (at position"));
            throw ParseError(err.kind(), msg, err.position() + s);
        }
    }
    return MapGerm(coords[0], coords[1], coords[2]);
}

QhType::QhType(long d1_, long d2_, long d3_, long a_, long b_) : d1(d1_), d2(d2_), d3(d3_), a(a_), b(b_) {
    if (a < 1 || b < 1) throw DomainError("weights must be positive");
    if (std::gcd(a, b) != 1) throw DomainError("weights must be coprime");
    const long w = std::min(a, b);
    if (d1 < w || d2 < w || d3 < w) throw DomainError("weighted degrees must be at least min(a, b)");
}

std::string QhType::to_string() const {
    return "(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) + ";" + std::to_string(a) +
           "," + std::to_string(b) + ")";
}

long corank(const MapGerm& f) {
    Rat j[3][2];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t v = 0; v < 2; ++v) {
            Monomial m;
            m.e[v] = 1;
            j[i][v] = f[i].coefficient(m);
        }
    for (int r = 0; r < 3; ++r)
        for (int s = r + 1; s < 3; ++s)
            if (j[r][0] * j[s][1] - j[r][1] * j[s][0] != 0) return 0;
    for (auto& row : j)
        for (auto& e : row)
            if (e != 0) return 1;
    return 2;
}

std::optional<QhType> infer_qh_type(const MapGerm& f) {
    std::optional<std::pair<long, long>> weights;
    for (const auto& c : f.coords()) {
        if (c.is_zero()) return std::nullopt;
        const Monomial& m0 = c.terms().front().mono;
        for (const auto& t : c.terms()) {
            const long di = static_cast<long>(t.mono.e[0]) - static_cast<long>(m0.e[0]);
            const long dj = static_cast<long>(t.mono.e[1]) - static_cast<long>(m0.e[1]);
            if (di == 0 && dj == 0) continue;
            // a*di + b*dj = 0 with a, b > 0 needs opposite nonzero signs.
            if (di == 0 || dj == 0 || (di > 0) == (dj > 0)) return std::nullopt;
            const long g = std::gcd(di, dj);
            const std::pair<long, long> w{std::abs(dj) / g, std::abs(di) / g};
            if (weights && *weights != w) return std::nullopt;
            weights = w;
        }
    }
    const auto [a, b] = weights.value_or(std::pair<long, long>{1, 1});
    long d[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const Monomial& m = f[i].terms().front().mono;
        d[i] = a * static_cast<long>(m.e[0]) + b * static_cast<long>(m.e[1]);
    }
    return QhType(d[0], d[1], d[2], a, b);
}

MapGerm NormalFormInfo::reconstruct() const {
    const VarList& vars = p.vars();
    const MPoly x = MPoly::variable(vars, 0);
    const MPoly y = MPoly::variable(vars, 1);
    MPoly third = x * q;
    if (m) third += y.pow(static_cast<unsigned>(*m)) * beta;
    return MapGerm(x, y.pow(static_cast<unsigned>(n)) + x * p, third);
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

// Splits c = (pure power of y) + x * rest, with rest(x, 0) = 0.
bool split_coordinate(const MPoly& c, const char* name, std::optional<int>& power, Rat& coef, MPoly& rest,
                      std::string* why) {
    const MPoly pure_y = c.filter([](const Monomial& m) { return m.e[0] == 0; });
    const MPoly pure_x = c.filter([](const Monomial& m) { return m.e[1] == 0; });
    if (!pure_x.is_zero()) return fail(why, std::string(name) + " has terms in x alone");
    if (pure_y.size() > 1) return fail(why, std::string(name) + " restricted to x = 0 is not a single power of y");
    if (pure_y.is_zero()) {
        power.reset();
        coef = 0;
    } else {
        power = static_cast<int>(pure_y.leading_monomial().e[1]);
        coef = pure_y.leading_coef();
        if (*power < 2) return fail(why, std::string(name) + " has a linear term in y");
    }
    Monomial xm;
    xm.e[0] = 1;
    rest = divexact(c - pure_y, MPoly::monomial(c.vars(), xm));
    return true;
}

}  // namespace

std::optional<NormalFormInfo> check_normal_form(const MapGerm& f, std::string* why) {
    const VarList& vars = f.vars();
    if (!(f.f1() == MPoly::variable(vars, 0))) {
        fail(why, "first coordinate is not " + vars[0]);
        return std::nullopt;
    }
    NormalFormInfo info;
    std::optional<int> n, m;
    Rat c2, c3;
    MPoly p(vars), q(vars);
    if (!split_coordinate(f.f2(), "second coordinate", n, c2, p, why)) return std::nullopt;
    if (!split_coordinate(f.f3(), "third coordinate", m, c3, q, why)) return std::nullopt;
    if (!n || c2 != 1) {
        fail(why, "second coordinate restricted to x = 0 is not y^n");
        return std::nullopt;
    }
    info.n = *n;
    info.m = m;
    info.beta = c3;
    info.p = p;
    info.q = q;
    return info;
}

MapGerm strip_first_coordinate_terms(const MapGerm& f) {
    if (!(f.f1() == MPoly::variable(f.vars(), 0)))
        throw DomainError("strip_first_coordinate_terms: first coordinate must be " + f.vars()[0]);
    auto strip = [](const MPoly& c) { return c.filter([](const Monomial& m) { return m.e[1] != 0; }); };
    return MapGerm(f.f1(), strip(f.f2()), strip(f.f3()));
}

bool is_finite(const MapGerm& f, int max_order) {
    return colength_local({f.f1(), f.f2(), f.f3()}, max_order).is_finite();
}

Rat image_multiplicity_formula(const QhType& t) {
    long d[3] = {t.d1, t.d2, t.d3};
    std::sort(d, d + 3);
    return ratio(d[0] * d[1], t.a * t.b);
}

ColengthResult image_multiplicity_direct(const MapGerm& f, const Projection& proj, int max_order) {
    for (const auto& row : proj)
        if (row[0] == 0 && row[1] == 0 && row[2] == 0) throw DomainError("degenerate projection: zero linear form");
    return colength_local({f.linear_pullback(proj[0]), f.linear_pullback(proj[1])}, max_order);
}

GenericMultiplicity image_multiplicity_generic(const MapGerm& f, std::uint64_t seed, int max_order) {
    SmallIntStream stream(seed);
    std::optional<GenericMultiplicity> best;
    for (int k = 0; k < kGenericCandidates; ++k) {
        Projection proj;
        for (auto& row : proj)
            for (auto& c : row) c = stream.next();
        bool degenerate = false;
        for (const auto& row : proj) degenerate = degenerate || (row[0] == 0 && row[1] == 0 && row[2] == 0);
        if (degenerate) continue;
        const ColengthResult r = image_multiplicity_direct(f, proj, max_order);
        if (!r.is_finite()) continue;
        if (!best || *r.value < *best->value.value) best = GenericMultiplicity{r, proj};
    }
    if (!best) return {ColengthResult::infinite(max_order), Projection{}};
    return *best;
}

}  // namespace germinv
