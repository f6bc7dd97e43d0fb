#include "germinv/imagefit.hpp"

#include <algorithm>
#include <functional>

#include "germinv/errors.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {

const VarList& target_vars() {
    static const VarList v{"X", "Y", "Z"};
    return v;
}

namespace {

// Coordinate index equal to a source variable, with that variable's index.
std::optional<std::pair<std::size_t, std::size_t>> coordinate_chart(const MapGerm& f) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (f[i] == MPoly::variable(f.vars(), j)) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

ImageEquation image_equation(const MapGerm& f) {
    const auto chart = coordinate_chart(f);
    if (!chart) throw DomainError("image_equation: no coordinate equals a source variable");
    const auto [i, j] = *chart;
    const std::size_t w = 1 - j;
    const VarList ring{"X", "Y", "Z", "w"};
    std::vector<std::size_t> mapping(2);
    mapping[j] = i;
    mapping[w] = 3;

    std::vector<MPoly> eqs;
    bool finite_along = false;
    for (std::size_t k = 0; k < 3; ++k) {
        if (k == i) continue;
        finite_along = finite_along || !f[k].filter([&](const Monomial& m) { return m.e[j] == 0; }).is_zero();
        eqs.push_back(f[k].remap(ring, mapping) - MPoly::variable(ring, k));
    }
    if (!finite_along) throw DomainError("image_equation: f is not finite along the kernel direction");
    MPoly raw = resultant(eqs[0], eqs[1], 3);
    if (raw.is_zero()) throw DomainError("image_equation: resultant vanishes identically");
    raw = raw.remap(target_vars(), {0, 1, 2}).primitive();
    ImageEquation out;
    out.squarefree = is_squarefree(raw);
    out.F = out.squarefree ? raw : squarefree_part(raw);
    return out;
}

PresentationMatrix presentation_matrix(const MapGerm& f) {
    const VarList& src = f.vars();
    const MPoly x = MPoly::variable(src, 0), y = MPoly::variable(src, 1);
    if (f.f1() != x) throw DomainError("presentation_matrix: first coordinate must be x");
    auto pure_y_power = [&](const MPoly& p) -> long {
        if (p.size() != 1 || p.leading_coef() != 1 || p.leading_monomial().e[0] != 0) return 0;
        return p.leading_monomial().e[1];
    };
    PresentationMatrix pm;
    std::size_t power_slot = 1, mult_slot = 2;
    long n = pure_y_power(f.f2());
    if (n < 1) {
        n = pure_y_power(f.f3());
        if (n < 1) throw DomainError("presentation_matrix: unsupported, neither f2 nor f3 is a pure power of y");
        pm.swapped = true;
        std::swap(power_slot, mult_slot);
    }
    pm.n = static_cast<std::size_t>(n);
    const VarList& tv = target_vars();
    const MPoly X = MPoly::variable(tv, 0), Pw = MPoly::variable(tv, power_slot), W = MPoly::variable(tv, mult_slot);
    const MPoly& h = f[mult_slot];

    pm.entries.assign(pm.n, std::vector<MPoly>(pm.n, MPoly::constant(tv, 0)));
    for (std::size_t j = 0; j < pm.n; ++j) {
        pm.entries[j][j] += W;
        const MPoly prod = h * y.pow(static_cast<unsigned>(j));
        for (const auto& t : prod.terms()) {
            const std::uint32_t q = t.mono.e[1];
            const MPoly coef = MPoly::constant(tv, t.coef) * X.pow(t.mono.e[0]) * Pw.pow(q / pm.n);
            pm.entries[j][q % pm.n] -= coef;
        }
    }
    return pm;
}

namespace {

MPoly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                const VarList& vars) {
    const std::size_t k = rows.size();
    if (k == 0) return MPoly::constant(vars, 1);
    if (k == 1) return m[rows[0]][cols[0]];
    MPoly acc = MPoly::constant(vars, 0);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
        const MPoly& e = m[rows[0]][cols[c]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t d = 0; d < k; ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        const MPoly term = e * minor_det(m, sub_rows, sub_cols, vars);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

const VarList& matrix_vars(const PolyMatrix& m) {
    if (m.empty() || m[0].empty()) throw DomainError("empty matrix");
    return m[0][0].vars();
}

}  // namespace

MPoly determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant: matrix is not square");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return minor_det(m, idx, idx, matrix_vars(m));
}

std::vector<MPoly> minors(const PolyMatrix& m, std::size_t k) {
    const VarList& vars = matrix_vars(m);
    const std::size_t rows = m.size(), cols = m[0].size();
    if (k > rows || k > cols) return {};
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::vector<MPoly> out;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            MPoly d = minor_det(m, r, c, vars);
            if (d.is_zero()) continue;
            d = d.primitive();
            if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
        }
    return out;
}

FittingLoci fitting_loci(const PresentationMatrix& pm) {
    if (pm.n < 1 || pm.entries.size() != pm.n) throw DomainError("fitting_loci: invalid presentation matrix");
    FittingLoci out;
    out.F = determinant(pm.entries);
    out.fD_ideal = minors(pm.entries, pm.n - 1);
    out.fitt2 = pm.n >= 2 ? minors(pm.entries, pm.n - 2) : std::vector<MPoly>{MPoly::constant(target_vars(), 1)};
    return out;
}

ColengthResult triple_point_oracle(const MapGerm& f, int max_order) {
    const FittingLoci fl = fitting_loci(presentation_matrix(f));
    if (fl.fitt2.empty()) return ColengthResult::infinite(max_order);
    return colength_local(fl.fitt2, max_order);
}

}  // namespace germinv
