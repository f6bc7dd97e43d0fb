#include "germinv/invariants.hpp"

#include "germinv/errors.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {

Rat mond_C_value(const QhType& t) {
    const long a = t.a, b = t.b;
    Rat c((t.d2 - a) * (t.d3 - b) + (t.d1 - b) * (t.d3 - b) + (t.d1 - a) * (t.d2 - a), a * b);
    c.canonicalize();
    return c;
}

Rat lambda_degree_formula(const QhType& t) { return t.delta() - t.epsilon(); }

Rat mond_T_value(const QhType& t) {
    const Rat delta = t.delta();
    const Rat eps = t.epsilon();
    Rat v = (delta - eps) * (delta - 2 * eps) / Rat(6 * t.a * t.b) + mond_C_value(t) / 3;
    v.canonicalize();
    return v;
}

Rat ae_codim_value(const QhType& t, long mu_D) {
    Rat v = (Rat(mu_D) - 4 * mond_T_value(t) + mond_C_value(t) - 1) / 2;
    v.canonicalize();
    return v;
}

namespace {

long require_natural(const Rat& v, const std::string& what) {
    if (!is_integer(v) || v < 0) throw InconsistencyError(what + " = " + v.get_str() + " is not a nonnegative integer");
    return v.get_num().get_si();
}

}  // namespace

long mond_C(const QhType& t) { return require_natural(mond_C_value(t), "C" + t.to_string()); }
long mond_T(const QhType& t) { return require_natural(mond_T_value(t), "T" + t.to_string()); }
long ae_codim(const QhType& t, long mu) { return require_natural(ae_codim_value(t, mu), "Ae-codim" + t.to_string()); }

ColengthResult crosscap_oracle(const MapGerm& f, int max_order) {
    std::vector<MPoly> minors;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            minors.push_back(f[i].derivative(0) * f[j].derivative(1) - f[i].derivative(1) * f[j].derivative(0));
    bool all_zero = true;
    for (const auto& m : minors) all_zero = all_zero && m.is_zero();
    if (all_zero) return ColengthResult::infinite(max_order);
    return colength_local(minors, max_order);
}

long branch_intersection(const Branch& p, const Branch& q) {
    const bool pc = p.kind == BranchKind::ConicClass, qc = q.kind == BranchKind::ConicClass;
    if (pc && qc) return p.a * p.b;
    if (pc || qc) {
        const Branch& axis = pc ? q : p;
        const Branch& conic = pc ? p : q;
        return axis.kind == BranchKind::XAxis ? conic.a : conic.b;
    }
    if (p.kind == q.kind) throw DomainError("branch_intersection: an axis meets itself");
    return 1;
}

long mu_from_branch_set(const BranchSet& bs) {
    std::vector<const Branch*> all;
    for (const auto& br : bs.classes)
        for (long k = 0; k < br.count(); ++k) all.push_back(&br);
    std::vector<long> mus;
    for (const Branch* br : all)
        mus.push_back(br->kind == BranchKind::ConicClass ? (br->a - 1) * (br->b - 1) : 0);
    std::vector<std::vector<long>> pairwise(all.size(), std::vector<long>(all.size(), 0));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            pairwise[i][j] = pairwise[j][i] = branch_intersection(*all[i], *all[j]);
    if (all.empty()) return 0;
    return milnor_from_branches(mus, pairwise);
}

MuD mu_D(const MapGerm& f, int max_order) {
    const FdResult fd = is_finitely_determined(f, max_order);
    if (!fd.fd()) throw DomainError("mu_D: germ is not finitely determined (" + to_string(fd.verdict) + ")");
    MuD out;
    if (fd.corank == 0 || fd.lambda->poly.constant_term() != 0) {
        out.oracle = ColengthResult::finite(0);
        out.branches = 0;
        return out;
    }
    out.oracle = milnor_number(fd.lambda->poly, max_order);
    const MapGerm& g = fd.prepared->germ;
    if (auto t = infer_qh_type(g)) {
        out.branches = mu_from_branch_set(branch_decompose(*fd.lambda, g, *t));
        if (!out.oracle.is_finite() || *out.oracle.value != *out.branches)
            throw InconsistencyError("mu(D): colength " + out.oracle.to_string() + " vs branch formula " +
                                     std::to_string(*out.branches));
    }
    return out;
}

namespace {

std::optional<long> as_long(const Rat& v) {
    if (!is_integer(v)) return std::nullopt;
    return v.get_num().get_si();
}

}  // namespace

InvariantReport full_report(const MapGerm& f, const ReportOptions& opts) {
    InvariantReport r(f);
    r.corank = corank(f);
    r.qh_type = infer_qh_type(f);
    r.fd = is_finitely_determined(f, opts.max_order);
    const bool fd = r.fd.fd();
    auto flag = [&](const std::string& msg) {
        if (fd)
            r.inconsistencies.push_back(msg);
        else
            r.notes.push_back(msg + " (germ is not finitely determined)");
    };
    if (!r.fd.note.empty()) r.notes.push_back(r.fd.note);
    if (r.qh_type && !fd) r.notes.push_back("closed formulas are evaluated outside their finite determinacy hypothesis");

    if (r.qh_type) {
        r.C_formula = mond_C_value(*r.qh_type);
        r.T_formula = mond_T_value(*r.qh_type);
        r.mult_formula = image_multiplicity_formula(*r.qh_type);
        r.C = as_long(*r.C_formula);
        r.T = as_long(*r.T_formula);
        if (!r.C || *r.C < 0) flag("C formula gives " + r.C_formula->get_str());
        if (!r.T || *r.T < 0) flag("T formula gives " + r.T_formula->get_str());
        if (!is_integer(*r.mult_formula)) flag("multiplicity formula gives " + r.mult_formula->get_str());
    }

    r.C_oracle = crosscap_oracle(f, opts.max_order);
    if (r.C && r.C_oracle.is_finite() && *r.C_oracle.value != *r.C)
        flag("C formula " + std::to_string(*r.C) + " differs from ramification colength " + r.C_oracle.to_string());
    if (r.C && !r.C_oracle.is_finite()) flag("ramification ideal has infinite colength");

    if (r.fd.verdict != FdVerdict::NotFinite) {
        const GenericMultiplicity gm = image_multiplicity_generic(f, opts.seed, opts.max_order);
        if (gm.value.is_finite()) {
            r.mult_image = *gm.value.value;
            r.projection = gm.projection;
        }
        if (r.mult_formula && r.mult_image && *r.mult_formula != *r.mult_image)
            flag("image multiplicity: direct " + std::to_string(*r.mult_image) + " vs formula " +
                 r.mult_formula->get_str());
    }

    if (!fd) return r;

    if (r.fd.corank == 0) {
        r.mu_D = 0;
        r.r_i = 0;
        r.r_f = 0;
    } else {
        const PreparedGerm& pg = *r.fd.prepared;
        const Lambda& lam = *r.fd.lambda;
        const auto t = infer_qh_type(pg.germ);
        if (lam.poly.constant_term() != 0) {
            r.mu_D = 0;
        } else {
            const ColengthResult mu = milnor_number(lam.poly, opts.max_order);
            if (mu.is_finite()) r.mu_D = *mu.value;
        }
        if (t && lam.poly.constant_term() == 0) {
            if (lam.qh && lambda_degree_formula(*t) != lam.qh->d)
                flag("lambda has weighted degree " + std::to_string(lam.qh->d) + ", expected delta - epsilon = " +
                     lambda_degree_formula(*t).get_str());
            try {
                r.branches = branch_decompose(lam, pg.germ, *t);
            } catch (const Error& e) {
                flag(std::string("branch decomposition failed: ") + e.what());
            }
        }
        if (r.branches) {
            const BranchSet& bs = *r.branches;
            r.r_i = bs.r_i;
            r.r_f = bs.r_f;
            r.mu_D_branches = mu_from_branch_set(bs);
            if (r.mu_D != r.mu_D_branches)
                flag("mu(D): colength " + (r.mu_D ? std::to_string(*r.mu_D) : std::string("infinite")) +
                     " vs branch formula " + std::to_string(*r.mu_D_branches));
            for (const auto& br : bs.classes)
                if (br.classification == BranchClass::Invalid)
                    flag("branch " + br.describe() + " has restriction degree " + std::to_string(br.degree));
            if (bs.r_i % 2 != 0) flag("odd number of identification components: " + std::to_string(bs.r_i));
            if (r.qh_type && !lam.qh) flag("lambda is not quasihomogeneous for the germ weights");
        }
        if (t) {
            if (const auto nf = check_normal_form(pg.germ)) {
                r.table = table_r(*nf, *t);
                const TableResult& tr = *r.table;
                if (tr.applicable && r.branches) {
                    if (tr.r_i != r.branches->r_i || tr.r_f != r.branches->r_f)
                        flag("component table (" + tr.rule + ") gives (r_i, r_f) = (" + std::to_string(tr.r_i) + ", " +
                             std::to_string(tr.r_f) + "), branches give (" + std::to_string(r.branches->r_i) + ", " +
                             std::to_string(r.branches->r_f) + ")");
                    if (tr.r_total && *tr.r_total != r.branches->total())
                        flag("total component count formula gives " + tr.r_total->get_str());
                } else if (!tr.applicable) {
                    r.notes.push_back("component table not applicable: " + tr.reason);
                }
                if (tr.multiplicity >= 3 && tr.s && r.branches) {
                    if (r.branches->r_i < 2) flag("multiplicity >= 3 but fewer than two identification components");
                    try {
                        r.fold_plane = fold_image_plane(f, opts.max_order);
                    } catch (const Error& e) {
                        flag(e.what());
                    }
                }
            } else {
                r.notes.push_back("not in normal form after preparation; component table skipped");
            }
        }
    }

    if (r.qh_type && r.mu_D) {
        const Rat ae = ae_codim_value(*r.qh_type, *r.mu_D);
        r.ae_codim = as_long(ae);
        if (!r.ae_codim || *r.ae_codim < 0) flag("Ae-codimension formula gives " + ae.get_str());
    }
    return r;
}

}  // namespace germinv
