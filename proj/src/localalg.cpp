#include "germinv/localalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "germinv/errors.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {

long ColengthResult::get() const {
    if (!value) throw DomainError("colength is infinite (no stabilization up to order " + std::to_string(bound) + ")");
    return *value;
}

std::string ColengthResult::to_string() const {
    if (value) return std::to_string(*value);
    return "infinite@" + std::to_string(bound);
}

namespace {

MPoly truncate(const MPoly& p, int order) {
    if (order <= 0) return p;
    const auto n = static_cast<std::uint32_t>(order);
    return p.filter([n](const Monomial& m) { return m.degree() < n; });
}

// Calls fn for every monomial in `nvars` variables of total degree exactly d.
void for_each_monomial_of_degree(std::size_t nvars, std::uint32_t d, const std::function<void(const Monomial&)>& fn) {
    Monomial m;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == nvars) {
            m.e[i] = left;
            fn(m);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            m.e[i] = k;
            rec(i + 1, left - k);
        }
        m.e[i] = 0;
    };
    if (nvars == 0) {
        if (d == 0) fn(m);
        return;
    }
    rec(0, d);
}

MPoly reduce(const MPoly& p, const std::vector<MPoly>& basis, int order) {
    MPoly work = truncate(p, order);
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        const MPoly* divisor = nullptr;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(lt.mono)) {
                divisor = &g;
                break;
            }
        if (divisor) {
            work -= divisor->mul_term(lt.mono / divisor->leading_monomial(), lt.coef / divisor->leading_coef());
        } else {
            rem.push_back(lt);
            work -= MPoly::monomial(p.vars(), lt.mono, lt.coef);
        }
    }
    return MPoly(p.vars(), std::move(rem));
}

struct Pair {
    std::size_t i;
    std::size_t j;  // == i for a truncation pair
    Monomial lcm;
    Monomial u;     // truncation pairs only: multiplier of tail(g_i)
};

// Buchberger with the product and chain criteria, normal selection strategy.
// With order > 0 computes a basis of I + m^order; monomials of degree >= order
// are implicit and never stored.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, int order) {
    if (gens.empty()) return {};
    const VarList vars = gens.front().vars();
    const std::size_t nv = vars.size();
    std::vector<MPoly> basis;
    auto later = [](const Pair& a, const Pair& b) { return grlex_greater(a.lcm, b.lcm); };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);
    std::vector<std::vector<bool>> pending;  // pending[max][min]

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a < b) std::swap(a, b);
        return static_cast<bool>(pending[a][b]);
    };

    auto add = [&](MPoly h) {
        h = h.monic();
        const std::size_t k = basis.size();
        pending.emplace_back(k + 1, false);
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lk = h.leading_monomial();
            const Monomial l = Monomial::lcm(li, lk);
            if (li.coprime_with(lk)) continue;
            if (order > 0 && l.degree() >= static_cast<std::uint32_t>(order)) continue;
            pairs.push({i, k, l, {}});
            pending[k][i] = true;
        }
        if (order > 0) {
            const auto dl = h.leading_monomial().degree();
            const auto n = static_cast<std::uint32_t>(order);
            if (dl < n && h.size() > 1) {
                const MPoly tail = h - MPoly::monomial(vars, h.leading_monomial(), h.leading_coef());
                // Only tails with a term of degree < dl survive truncation after multiplication.
                bool useful = false;
                for (const auto& t : tail.terms()) useful = useful || t.mono.degree() < dl;
                if (useful)
                    for_each_monomial_of_degree(nv, n - dl, [&](const Monomial& u) {
                        pairs.push({k, k, h.leading_monomial() * u, u});
                    });
            }
        }
        basis.push_back(std::move(h));
    };

    for (const auto& g : gens) {
        MPoly r = reduce(g, basis, order);
        if (!r.is_zero()) add(std::move(r));
    }

    while (!pairs.empty()) {
        const Pair pr = pairs.top();
        pairs.pop();

        MPoly s(vars);
        if (pr.i == pr.j) {
            const MPoly& g = basis[pr.i];
            const MPoly tail = g - MPoly::monomial(vars, g.leading_monomial(), g.leading_coef());
            s = tail.mul_term(pr.u, 1);
        } else {
            pending[pr.j][pr.i] = false;
            bool chain = false;
            for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
                if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
            }
            if (chain) continue;
            const MPoly& gi = basis[pr.i];
            const MPoly& gj = basis[pr.j];
            s = gi.mul_term(pr.lcm / gi.leading_monomial(), 1) - gj.mul_term(pr.lcm / gj.leading_monomial(), 1);
        }
        MPoly r = reduce(s, basis, order);
        if (!r.is_zero()) add(std::move(r));
    }

    // Minimalize and interreduce.
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = basis[i].leading_monomial();
            const auto& lj = basis[j].leading_monomial();
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const MPoly& g = minimal[i];
        const MPoly lead = MPoly::monomial(vars, g.leading_monomial(), 1);
        MPoly tail = reduce(g.monic() - lead, others, order);
        reduced.push_back(lead + tail);
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
        return grlex_greater(b.leading_monomial(), a.leading_monomial());
    });
    return reduced;
}

std::vector<MPoly> nonzero(const std::vector<MPoly>& gens) {
    std::vector<MPoly> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g);
    if (!out.empty())
        for (const auto& g : out)
            if (!(g.vars() == out.front().vars())) throw DomainError("generators over different variable lists");
    return out;
}

}  // namespace

std::vector<MPoly> groebner(const std::vector<MPoly>& gens) { return buchberger(nonzero(gens), 0); }

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis) { return reduce(p, basis, 0); }

namespace {

// Local ordering on monomials of degree < order: lower degree first, ties by
// grlex. Multiplication is monotone and the truncated ring is finite
// dimensional, so plain Buchberger on I + m^order terminates with this
// ordering and no extra pairs for the truncation are needed.
bool local_greater(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return grlex_greater(a, b);
}

using LocalPoly = std::vector<Term>;  // sorted by local_greater, no zeros, all degrees < order

LocalPoly to_local(const MPoly& p, std::uint32_t order) {
    LocalPoly out;
    for (const auto& t : p.terms())
        if (t.mono.degree() < order) out.push_back(t);
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return local_greater(a.mono, b.mono); });
    return out;
}

void make_monic(LocalPoly& p) {
    if (p.empty() || p.front().coef == 1) return;
    const Rat inv = 1 / p.front().coef;
    for (auto& t : p) t.coef *= inv;
}

// a - c * u * b, truncated.
LocalPoly sub_scaled(const LocalPoly& a, const Rat& c, const Monomial& u, const LocalPoly& b, std::uint32_t order) {
    LocalPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    auto next_b = [&]() -> bool {
        while (j < b.size()) {
            bm = b[j].mono * u;
            if (bm.degree() < order) return true;
            ++j;
        }
        return false;
    };
    bool has_b = next_b();
    while (i < a.size() || has_b) {
        if (!has_b || (i < a.size() && local_greater(a[i].mono, bm))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || local_greater(bm, a[i].mono)) {
            out.push_back({bm, -c * b[j].coef});
            ++j;
            has_b = next_b();
        } else {
            Rat v = a[i].coef - c * b[j].coef;
            if (v != 0) out.push_back({bm, std::move(v)});
            ++i;
            ++j;
            has_b = next_b();
        }
    }
    return out;
}

// Top reduction: only leading terms matter for the count of standard monomials.
LocalPoly top_reduce(LocalPoly p, const std::vector<LocalPoly>& basis, std::uint32_t order) {
    while (!p.empty()) {
        const LocalPoly* div = nullptr;
        for (const auto& g : basis)
            if (g.front().mono.divides(p.front().mono)) {
                div = &g;
                break;
            }
        if (!div) break;
        const Rat c = p.front().coef;  // basis elements are monic
        p = sub_scaled(p, c, p.front().mono / div->front().mono, *div, order);
    }
    make_monic(p);
    return p;
}

}  // namespace

long truncated_colength(const std::vector<MPoly>& gens, int order) {
    if (order < 1) throw DomainError("truncation order must be positive");
    const auto g = nonzero(gens);
    if (g.empty()) throw DomainError("empty generator list");
    const auto n = static_cast<std::uint32_t>(order);
    const std::size_t nv = g.front().arity();

    struct LocalPair {
        std::uint32_t degree;
        std::size_t i, j;
    };
    auto later = [](const LocalPair& a, const LocalPair& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return std::make_pair(a.j, a.i) > std::make_pair(b.j, b.i);
    };
    std::priority_queue<LocalPair, std::vector<LocalPair>, decltype(later)> pairs(later);
    std::vector<LocalPoly> basis;
    std::vector<std::vector<bool>> pending;
    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a < b) std::swap(a, b);
        return static_cast<bool>(pending[a][b]);
    };
    auto add = [&](LocalPoly h) {
        const std::size_t k = basis.size();
        pending.emplace_back(k + 1, false);
        const Monomial& lk = h.front().mono;
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& li = basis[i].front().mono;
            if (li.coprime_with(lk)) continue;
            const Monomial l = Monomial::lcm(li, lk);
            if (l.degree() >= n) continue;
            pairs.push({l.degree(), i, k});
            pending[k][i] = true;
        }
        basis.push_back(std::move(h));
    };

    for (const auto& p : g) {
        LocalPoly r = top_reduce(to_local(p, n), basis, n);
        if (!r.empty()) add(std::move(r));
    }
    while (!pairs.empty()) {
        const LocalPair pr = pairs.top();
        pairs.pop();
        pending[pr.j][pr.i] = false;
        const Monomial l = Monomial::lcm(basis[pr.i].front().mono, basis[pr.j].front().mono);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].front().mono.divides(l)) continue;
            if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
        }
        if (chain) continue;
        const LocalPoly& gi = basis[pr.i];
        const LocalPoly& gj = basis[pr.j];
        LocalPoly s = sub_scaled({}, Rat(-1), l / gi.front().mono, gi, n);
        s = sub_scaled(s, Rat(1), l / gj.front().mono, gj, n);
        LocalPoly r = top_reduce(std::move(s), basis, n);
        if (!r.empty()) add(std::move(r));
    }

    long count = 0;
    for (std::uint32_t d = 0; d < n; ++d)
        for_each_monomial_of_degree(nv, d, [&](const Monomial& m) {
            for (const auto& b : basis)
                if (b.front().mono.divides(m)) return;
            ++count;
        });
    return count;
}

ColengthResult colength_local(const std::vector<MPoly>& gens, int max_order) {
    if (max_order < 2) throw DomainError("max_order must be at least 2");
    const auto g = nonzero(gens);
    if (g.empty()) {
        if (gens.empty()) throw DomainError("empty generator list");
        return ColengthResult::infinite(max_order);
    }
    for (const auto& p : g)
        if (p.constant_term() != 0) return ColengthResult::finite(0);
    if (g.front().arity() == 0) return ColengthResult::finite(1);
    if (g.front().arity() == 2) {
        // In the plane the local quotient is infinite exactly when the
        // generators share a factor through the origin.
        MPoly common = g.front();
        for (const auto& p : g) common = gcd_poly(common, p);
        if (!common.is_constant() && common.constant_term() == 0) return ColengthResult::infinite(max_order);
    }
    // d_N is nondecreasing and d_N = d_{N+1} forces m^N into I, so any such N
    // gives the exact value. Probe N = 2, 4, 8, ... and finally max_order - 1.
    std::vector<int> probes;
    for (int n = 2; n + 1 <= max_order; n *= 2) probes.push_back(n);
    if (probes.empty() || probes.back() != max_order - 1) probes.push_back(max_order - 1);
    for (int n : probes) {
        const long dn = truncated_colength(g, n);
        const long dn1 = truncated_colength(g, n + 1);
        if (dn == dn1) return ColengthResult::finite(dn);
    }
    return ColengthResult::infinite(max_order);
}

ColengthResult intersection_multiplicity(const MPoly& p, const MPoly& q, int max_order) {
    if (p.arity() != 2 || q.arity() != 2) throw DomainError("intersection_multiplicity: plane curves required");
    if (p.is_zero() || q.is_zero()) throw DomainError("intersection_multiplicity: zero curve");
    return colength_local({p, q}, max_order);
}

ColengthResult milnor_number(const MPoly& p, int max_order) {
    if (p.is_zero()) throw DomainError("milnor_number of the zero polynomial");
    if (p.constant_term() != 0) throw DomainError("milnor_number: curve does not pass through the origin");
    std::vector<MPoly> partials;
    for (std::size_t v = 0; v < p.arity(); ++v) partials.push_back(p.derivative(v));
    bool all_zero = true;
    for (const auto& d : partials) all_zero = all_zero && d.is_zero();
    if (all_zero) return ColengthResult::infinite(max_order);
    return colength_local(partials, max_order);
}

long milnor_from_branches(const std::vector<long>& branch_mus, const std::vector<std::vector<long>>& pairwise) {
    const std::size_t n = branch_mus.size();
    if (!(pairwise.empty() && n <= 1)) {
        if (pairwise.size() != n) throw DomainError("milnor_from_branches: intersection matrix has wrong size");
        for (const auto& row : pairwise)
            if (row.size() != n) throw DomainError("milnor_from_branches: intersection matrix is not square");
    }
    long total = 1;
    for (long mu : branch_mus) total += mu - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pairwise[i][j] != pairwise[j][i])
                throw DomainError("milnor_from_branches: intersection matrix is not symmetric");
            total += 2 * pairwise[i][j];
        }
    return total;
}

}  // namespace germinv
