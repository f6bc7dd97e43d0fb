#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

using germinv::Monomial;
using germinv::Term;

namespace {

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    // Schoolbook division; the Bareiss step guarantees exactness.
    MPoly q(a.vars()), r = a;
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!b.leading_monomial().divides(lt.mono)) throw std::logic_error("oracle: inexact division");
        const Monomial m = lt.mono / b.leading_monomial();
        const Rat c = lt.coef / b.leading_coef();
        q += MPoly::monomial(a.vars(), m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

}  // namespace

MPoly sylvester_resultant(const MPoly& p, const MPoly& q, std::size_t var) {
    const int dp = p.degree_in(var), dq = q.degree_in(var);
    const auto& vars = p.vars();
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(vars)));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[r][r + dp - k] = p.coeff_in(var, static_cast<unsigned>(k));
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + dq - k] = q.coeff_in(var, static_cast<unsigned>(k));

    MPoly det = MPoly::constant(vars, 1);
    if (n == 0) return det.drop_variable(var);
    int sign = 1;
    MPoly prev = MPoly::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MPoly(vars).drop_variable(var);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    det = m[n - 1][n - 1] * Rat(sign);
    return det.drop_variable(var);
}

long staircase_count(const std::vector<std::vector<unsigned>>& gens, std::size_t nvars) {
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : gens) {
            bool pure = g[v] > 0;
            for (std::size_t w = 0; w < nvars; ++w)
                if (w != v && g[w] != 0) pure = false;
            if (pure && (!found || g[v] < bound[v])) {
                bound[v] = g[v];
                found = true;
            }
        }
        if (!found) return -1;
    }
    long count = 0;
    std::vector<unsigned> e(nvars, 0);
    for (;;) {
        bool inside = false;
        for (const auto& g : gens) {
            bool div = true;
            for (std::size_t v = 0; v < nvars; ++v) div = div && g[v] <= e[v];
            if (div) {
                inside = true;
                break;
            }
        }
        if (!inside) ++count;
        std::size_t v = 0;
        while (v < nvars && ++e[v] == bound[v]) e[v++] = 0;
        if (v == nvars) break;
    }
    return count;
}

long truncated_dimension(const std::vector<MPoly>& gens, int order) {
    const auto& vars = gens.front().vars();
    const std::size_t nv = vars.size();
    // Index all monomials of degree < order.
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<unsigned> e(nv, 0);
    std::vector<std::vector<unsigned>> monos;
    for (;;) {
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (deg < static_cast<unsigned>(order)) {
            index[e] = monos.size();
            monos.push_back(e);
        }
        std::size_t v = 0;
        while (v < nv && ++e[v] == static_cast<unsigned>(order)) e[v++] = 0;
        if (v == nv) break;
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens)
        for (const auto& mult : monos) {
            std::vector<Rat> row(monos.size());
            bool any = false;
            for (const auto& t : g.terms()) {
                std::vector<unsigned> key(nv);
                unsigned deg = 0;
                for (std::size_t v = 0; v < nv; ++v) {
                    key[v] = t.mono.e[v] + mult[v];
                    deg += key[v];
                }
                if (deg >= static_cast<unsigned>(order)) continue;
                row[index.at(key)] += t.coef;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    // Rank by Gaussian elimination.
    std::size_t rank = 0;
    const std::size_t cols = monos.size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rat f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return static_cast<long>(cols - rank);
}

long order_along(const MPoly& p, const Rat& c1, unsigned e1, const Rat& c2, unsigned e2) {
    std::map<unsigned, Rat> coeffs;
    for (const auto& t : p.terms()) {
        Rat c = t.coef;
        for (unsigned k = 0; k < t.mono.e[0]; ++k) c *= c1;
        for (unsigned k = 0; k < t.mono.e[1]; ++k) c *= c2;
        coeffs[t.mono.e[0] * e1 + t.mono.e[1] * e2] += c;
    }
    for (const auto& [ord, c] : coeffs)
        if (c != 0) return ord;
    return -1;
}

std::uint64_t PolyGen::next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
}

MPoly PolyGen::poly(const germinv::VarList& vars, int max_terms, int max_deg, long coef_bound) {
    std::vector<Term> terms;
    const int nterms = static_cast<int>(range(1, max_terms));
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        int left = static_cast<int>(range(0, max_deg));
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const int k = v + 1 == vars.size() ? left : static_cast<int>(range(0, left));
            m.e[v] = static_cast<unsigned>(k);
            left -= k;
        }
        long c = range(-coef_bound, coef_bound);
        if (c == 0) c = 1;
        terms.push_back({m, Rat(c)});
    }
    return MPoly(vars, std::move(terms));
}

}  // namespace oracle
