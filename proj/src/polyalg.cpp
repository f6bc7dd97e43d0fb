#include "germinv/polyalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "germinv/errors.hpp"

namespace germinv {
namespace {

MPoly lc_in(const MPoly& p, std::size_t var) {
    return p.coeff_in(var, static_cast<unsigned>(p.degree_in(var)));
}

MPoly var_power(const VarList& vars, std::size_t var, unsigned k) {
    Monomial m;
    m.e[var] = k;
    return MPoly::monomial(vars, m);
}

// Highest-index variable occurring in p or q, or -1.
int main_variable(const MPoly& p, const MPoly& q) {
    for (std::size_t v = p.arity(); v-- > 0;)
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return static_cast<int>(v);
    return -1;
}

MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly c(p.vars());
    const int d = p.degree_in(var);
    for (int k = d; k >= 0; --k) {
        MPoly coeff = p.coeff_in(var, static_cast<unsigned>(k));
        if (coeff.is_zero()) continue;
        c = gcd_poly(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

MPoly primitive_in(const MPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return divexact(p, content_in(p, var)).primitive();
}

// Univariate arithmetic modulo a word-sized prime, used to certify coprimality.
constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) { return powmod(a, m - 2, m); }

using ModPoly = std::vector<std::uint64_t>;  // coefficient k of v^k

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t gcd_degree_mod(ModPoly a, ModPoly b, std::uint64_t m) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        if (a.size() >= b.size()) {
            const std::uint64_t f = mulmod(a.back(), invmod(b.back(), m), m);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k)
                a[k + shift] = (a[k + shift] + m - mulmod(f, b[k], m)) % m;
            trim(a);
        } else {
            std::swap(a, b);
        }
    }
    return a.empty() ? 0 : a.size() - 1;
}

// p with every variable except `var` replaced by the given residues, as a
// polynomial in `var` modulo m. Empty when a denominator vanishes mod m.
std::optional<ModPoly> specialize_mod(const MPoly& p, std::size_t var, const std::vector<std::uint64_t>& point,
                                      std::uint64_t m) {
    ModPoly out(static_cast<std::size_t>(p.degree_in(var)) + 1, 0);
    for (const auto& t : p.terms()) {
        const std::uint64_t den = mpz_fdiv_ui(t.coef.get_den().get_mpz_t(), m);
        if (den == 0) return std::nullopt;
        std::uint64_t c = mulmod(mpz_fdiv_ui(t.coef.get_num().get_mpz_t(), m), invmod(den, m), m);
        for (std::size_t v = 0; v < p.arity(); ++v)
            if (v != var) c = mulmod(c, powmod(point[v], t.mono.e[v], m), m);
        auto& slot = out[t.mono.e[var]];
        slot = (slot + c) % m;
    }
    return out;
}

// True only when p and q provably share no nonconstant factor: for each
// variable occurring in both, a specialization of the others that keeps both
// leading coefficients nonzero mod a prime yields coprime univariate images.
bool certainly_coprime(const MPoly& p, const MPoly& q) {
    for (std::size_t v = 0; v < p.arity(); ++v) {
        const int dp = p.degree_in(v), dq = q.degree_in(v);
        if (dp == 0 || dq == 0) continue;
        bool certified = false;
        for (std::uint64_t m : kPrimes) {
            std::vector<std::uint64_t> point(p.arity());
            for (std::size_t w = 0; w < point.size(); ++w) point[w] = (2654435761ULL * (w + 3) + 97 * m) % m;
            const auto a = specialize_mod(p, v, point, m);
            const auto b = specialize_mod(q, v, point, m);
            if (!a || !b || a->back() == 0 || b->back() == 0) continue;
            certified = gcd_degree_mod(*a, *b, m) == 0;
            break;
        }
        if (!certified) return false;
    }
    return true;
}

MPoly pow_poly(const MPoly& p, long k) { return p.pow(static_cast<unsigned>(k)); }

}  // namespace

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
    if (b.is_zero()) throw DomainError("pseudo_remainder by zero");
    const int db = b.degree_in(var);
    int dr = a.degree_in(var);
    if (dr < db) return a;
    const MPoly lb = lc_in(b, var);
    const int steps = dr - db + 1;
    int done = 0;
    MPoly r = a;
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        const MPoly lr = lc_in(r, var);
        r = lb * r - lr * var_power(a.vars(), var, static_cast<unsigned>(dr - db)) * b;
        ++done;
    }
    if (done < steps) r *= lb.pow(static_cast<unsigned>(steps - done));
    return r;
}

MPoly gcd_poly(const MPoly& p, const MPoly& q) {
    if (!(p.vars() == q.vars())) throw DomainError("gcd_poly: different variable lists");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    const int mv = main_variable(p, q);
    if (mv < 0) return MPoly::constant(p.vars(), 1);
    if (certainly_coprime(p, q)) return MPoly::constant(p.vars(), 1);
    const auto v = static_cast<std::size_t>(mv);
    if (p.degree_in(v) == 0) return gcd_poly(p, content_in(q, v));
    if (q.degree_in(v) == 0) return gcd_poly(content_in(p, v), q);

    const MPoly cp = content_in(p, v), cq = content_in(q, v);
    const MPoly c = gcd_poly(cp, cq);
    MPoly a = divexact(p, cp).primitive();
    MPoly b = divexact(q, cq).primitive();
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(v) > 0) {
        MPoly r = pseudo_remainder(a, b, v);
        a = std::move(b);
        b = primitive_in(r, v);
    }
    // b == 0: a is the primitive gcd; b a nonzero constant in v: coprime parts.
    MPoly g = b.is_zero() ? a : MPoly::constant(p.vars(), 1);
    return (c * g).monic();
}

MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
    MPoly g = p;
    for (std::size_t v = 0; v < p.arity(); ++v) {
        if (g.is_constant()) break;
        g = gcd_poly(g, p.derivative(v));
    }
    return divexact(p, g).primitive();
}

bool is_squarefree(const MPoly& p) { return squarefree_part(p).total_degree() == p.total_degree(); }

MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var) {
    if (!(p.vars() == q.vars())) throw DomainError("resultant: different variable lists");
    if (var >= p.arity()) throw DomainError("resultant: variable index out of range");
    const VarList& vars = p.vars();
    auto finish = [&](const MPoly& r) { return r.drop_variable(var); };
    if (p.is_zero() || q.is_zero()) return finish(MPoly(vars));

    MPoly a = p, b = q;
    long da = a.degree_in(var), db = b.degree_in(var);
    Rat sign = 1;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da % 2) && (db % 2)) sign = -sign;
    }
    if (db == 0) return finish(b.pow(static_cast<unsigned>(da)) * sign);

    MPoly g = MPoly::constant(vars, 1), h = MPoly::constant(vars, 1);
    for (;;) {
        const long delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        MPoly r = pseudo_remainder(a, b, var);
        a = std::move(b);
        b = divexact(r, g * pow_poly(h, delta));
        g = lc_in(a, var);
        if (delta == 0) {
            // h unchanged
        } else {
            h = divexact(pow_poly(g, delta), pow_poly(h, delta - 1));
        }
        da = a.degree_in(var);
        if (b.is_zero()) return finish(MPoly(vars));
        db = b.degree_in(var);
        if (db == 0) break;
    }
    // b is a nonzero constant in var.
    const MPoly lb = b;
    MPoly res = divexact(pow_poly(lb, da), pow_poly(h, da - 1));
    return finish(res * sign);
}

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
    if (!p.vars().contains(var)) throw DomainError("resultant: unknown variable '" + var + "'");
    return resultant(p, q, p.vars().index_of(var));
}

MPoly divided_difference(const MPoly& p, const std::string& yname, const std::string& yprime) {
    const std::size_t y = p.vars().index_of(yname);
    const VarList out_vars = p.vars().with_appended(yprime);
    const std::size_t yp = out_vars.size() - 1;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        const std::uint32_t k = t.mono.e[y];
        for (std::uint32_t j = 0; j < k; ++j) {
            Monomial m = t.mono;
            m.e[y] = j;
            m.e[yp] = k - 1 - j;
            out.push_back({m, t.coef});
        }
    }
    return MPoly(out_vars, std::move(out));
}

QhCheck qh_check(const MPoly& p, const std::vector<long>& weights) {
    if (weights.size() != p.arity()) throw DomainError("qh_check: one weight per variable required");
    for (long w : weights)
        if (w < 1) throw DomainError("qh_check: weights must be positive");
    if (p.is_zero()) return {QhCheck::Status::Zero, 0};
    long d = -1;
    for (const auto& t : p.terms()) {
        long wd = 0;
        for (std::size_t i = 0; i < p.arity(); ++i) wd += weights[i] * static_cast<long>(t.mono.e[i]);
        if (d < 0) {
            d = wd;
        } else if (wd != d) {
            return {QhCheck::Status::NotQuasihomogeneous, 0};
        }
    }
    return {QhCheck::Status::Quasihomogeneous, d};
}

int order_at_origin(const MPoly& p) {
    if (p.is_zero()) throw DomainError("order_at_origin of the zero polynomial");
    return static_cast<int>(p.terms().back().mono.degree());
}

MPoly initial_form(const MPoly& p) {
    if (p.is_zero()) return p;
    const auto m = static_cast<std::uint32_t>(order_at_origin(p));
    return p.filter([m](const Monomial& mono) { return mono.degree() == m; });
}

}  // namespace germinv
