#include "germinv/slice.hpp"

#include <algorithm>

#include "germinv/errors.hpp"
#include "germinv/invariants.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {

std::string SlicePlane::to_string() const {
    static const char* const names[3] = {"X", "Y", "Z"};
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (l[i] == 0) continue;
        Rat c = l[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (c != 1) out += germinv::to_string(c) + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

SlicePlane make_plane(const std::array<Rat, 3>& l) {
    if (l[0] == 0 && l[1] == 0 && l[2] == 0) throw DomainError("slice plane: the zero linear form defines no plane");
    SlicePlane p;
    p.l = l;
    return p;
}

namespace {

// D(f) data in the source coordinates of the prepared germ.
struct DoubleCurve {
    PreparedGerm prepared;
    QhType type;
    MPoly lambda;
    BranchSet branches;
};

DoubleCurve double_curve(const MapGerm& f, int max_order, const char* who) {
    const FdResult fd = is_finitely_determined(f, max_order);
    if (!fd.fd()) throw DomainError(std::string(who) + ": germ is not finitely determined (" + to_string(fd.verdict) + ")");
    if (fd.corank != 1) throw DomainError(std::string(who) + ": needs a corank-1 germ");
    const auto t = infer_qh_type(fd.prepared->germ);
    if (!t) throw DomainError(std::string(who) + ": germ is not quasihomogeneous");
    DoubleCurve dc{*fd.prepared, *t, fd.lambda->poly, {}};
    dc.branches = branch_decompose(*fd.lambda, fd.prepared->germ, *t);
    return dc;
}

// Lowest order among the nonzero coordinates of f o phi for one branch.
long lowest_image_order(const Branch& br, const QhType& t, const MapGerm& g) {
    switch (br.kind) {
        case BranchKind::ConicClass: {
            long m = t.a;
            if (!br.f2_vanishes) m = std::min(m, t.d2);
            if (!br.f3_vanishes) m = std::min(m, t.d3);
            return m;
        }
        case BranchKind::XAxis: {
            long m = -1;
            for (std::size_t i = 1; i < 3; ++i) {
                const MPoly on_axis = g[i].filter([](const Monomial& mono) { return mono.e[0] == 0; });
                if (on_axis.is_zero()) continue;
                const long o = on_axis.min_degree_in(1);
                m = m < 0 ? o : std::min(m, o);
            }
            if (m < 0) throw InconsistencyError("branch V(x) is contracted by f");
            return m;
        }
        case BranchKind::YAxis: return 1;
    }
    return 0;
}

// Equation of a branch class in the source variables of lambda.
MPoly component_equation(const Branch& br, const VarList& vars) {
    if (br.kind != BranchKind::ConicClass) return br.class_poly;
    const long deg = br.class_poly.total_degree();
    std::vector<Term> terms;
    for (const auto& t : br.class_poly.terms()) {
        const long k = t.mono.e[0];
        Monomial m;
        m.e[0] = static_cast<std::uint32_t>(br.b * (deg - k));
        m.e[1] = static_cast<std::uint32_t>(br.a * k);
        terms.push_back({m, t.coef});
    }
    return MPoly(vars, std::move(terms));
}

long m_image_from(const DoubleCurve& dc) {
    long folds = 0, idents = 0;
    for (const auto& br : dc.branches.classes) {
        const long o = lowest_image_order(br, dc.type, dc.prepared.germ);
        if (br.classification == BranchClass::Fold) {
            if (o % 2 != 0)
                throw InconsistencyError("fold branch " + br.describe() + " has odd image order " + std::to_string(o));
            folds += br.count() * (o / 2);
        } else if (br.classification == BranchClass::Identification) {
            idents += br.count() * o;
        } else {
            throw InconsistencyError("branch " + br.describe() + " is neither a fold nor an identification");
        }
    }
    if (idents % 2 != 0)
        throw InconsistencyError("identification branches have odd total image order " + std::to_string(idents));
    return folds + idents / 2;
}

// l o f written in the source variables of the prepared germ.
MPoly slice_preimage(const MapGerm& f, const std::array<Rat, 3>& l, const PreparedGerm& pg) {
    const MPoly g = f.linear_pullback(l);
    return pg.source_swapped ? g.remap(g.vars(), {1, 0}) : g;
}

struct Candidate {
    SlicePlane plane;
    long mu = 0;
    long i = 0;
};

}  // namespace

long m_image_double_curve(const MapGerm& f, int max_order) {
    return m_image_from(double_curve(f, max_order, "m_image_double_curve"));
}

SlicePlane choose_generic_plane(const MapGerm& f, std::uint64_t seed, int max_order) {
    const FdResult fd = is_finitely_determined(f, max_order);
    std::optional<MPoly> lambda;
    bool swapped = false;
    if (fd.lambda && fd.corank == 1) {
        lambda = fd.lambda->poly;
        swapped = fd.prepared->source_swapped;
    }
    SmallIntStream rng(seed);
    std::optional<Candidate> best;
    for (int c = 0; c < kGenericCandidates; ++c) {
        std::array<Rat, 3> l;
        for (auto& v : l) v = rng.next();
        if (l[0] == 0 && l[1] == 0 && l[2] == 0) continue;
        MPoly g = f.linear_pullback(l);
        if (swapped) g = g.remap(g.vars(), {1, 0});
        if (g.is_zero() || !is_squarefree(g)) continue;
        const ColengthResult mu = milnor_number(g, max_order);
        if (!mu.is_finite()) continue;
        Candidate cand{make_plane(l), *mu.value, 0};
        cand.plane.candidate = c;
        if (lambda && lambda->constant_term() == 0) {
            if (gcd_poly(*lambda, g).total_degree() > 0) continue;
            const ColengthResult i = intersection_multiplicity(*lambda, g, max_order);
            if (!i.is_finite()) continue;
            cand.i = *i.value;
        }
        if (!best || std::make_pair(cand.mu, cand.i) < std::make_pair(best->mu, best->i)) best = cand;
    }
    if (!best) throw DomainError("choose_generic_plane: no admissible plane among the seeded candidates");
    SlicePlane p = best->plane;
    p.certificate.push_back("l o f squarefree with mu = " + std::to_string(best->mu));
    if (lambda) p.certificate.push_back("coprime to lambda, i(D, l o f) = " + std::to_string(best->i));

    // Tangent-cone check: each branch meets l o f with multiplicity equal to its lowest image order.
    if (fd.fd() && fd.corank == 1) {
        if (const auto t = infer_qh_type(fd.prepared->germ)) {
            const BranchSet bs = branch_decompose(*fd.lambda, fd.prepared->germ, *t);
            const MPoly g = slice_preimage(f, p.l, *fd.prepared);
            for (const auto& br : bs.classes) {
                const long expect = br.count() * lowest_image_order(br, *t, fd.prepared->germ);
                const ColengthResult i = intersection_multiplicity(component_equation(br, g.vars()), g, max_order);
                const bool ok = i.is_finite() && *i.value == expect;
                p.certificate.push_back("tangent cone " + br.describe() + ": i = " + i.to_string() + ", branch orders " +
                                        std::to_string(expect) + (ok ? " (ok)" : " (fails)"));
            }
        }
    }
    return p;
}

SliceData check_slice_identities(const MapGerm& f, const SlicePlane& sp, int max_order) {
    const DoubleCurve dc = double_curve(f, max_order, "check_slice_identities");
    SliceData sd;
    sd.plane = sp;
    sd.gamma_tilde = f.linear_pullback(sp.l);
    const MPoly g = slice_preimage(f, sp.l, dc.prepared);
    auto fail = [&](const std::string& msg) { sd.inconsistencies.push_back(msg); };

    const ColengthResult mu_g = milnor_number(g, max_order);
    if (!mu_g.is_finite()) throw DomainError("check_slice_identities: l o f has a non-isolated singularity");
    sd.mu_gamma = *mu_g.value;
    const ColengthResult mu_d = milnor_number(dc.lambda, max_order);
    if (!mu_d.is_finite()) throw InconsistencyError("check_slice_identities: D(f) has a non-isolated singularity");
    sd.mu_D = *mu_d.value;
    const ColengthResult i = intersection_multiplicity(dc.lambda, g, max_order);
    if (!i.is_finite()) throw DomainError("check_slice_identities: plane contains a branch of f(D(f))");
    sd.i_D_gamma = *i.value;
    sd.m_fD = m_image_from(dc);

    if (sd.i_D_gamma != 2 * sd.m_fD)
        fail("i(D, gamma) = " + std::to_string(sd.i_D_gamma) + " but 2 m(f(D)) = " + std::to_string(2 * sd.m_fD));

    sd.mult_D = order_at_origin(dc.lambda);
    sd.mult_gamma = order_at_origin(g);
    sd.tangent_cones_disjoint = gcd_poly(initial_form(dc.lambda), initial_form(g)).total_degree() == 0;
    if (sd.mult_D * sd.mult_gamma > 2 * sd.m_fD)
        fail("m(D) m(gamma) = " + std::to_string(sd.mult_D * sd.mult_gamma) + " exceeds 2 m(f(D)) = " +
             std::to_string(2 * sd.m_fD));
    if ((sd.mult_D * sd.mult_gamma == sd.i_D_gamma) != sd.tangent_cones_disjoint)
        fail("m(D) m(gamma) = i(D, gamma) does not match tangent cone disjointness");

    sd.mu_W = sd.mu_D + sd.mu_gamma + 4 * sd.m_fD - 1;

    // Components of W: each branch class of D(f) and the slice curve.
    std::vector<const Branch*> comps;
    for (const auto& br : dc.branches.classes) comps.push_back(&br);
    const std::size_t k = comps.size();
    std::vector<long> mus(k + 1, 0);
    std::vector<std::vector<long>> pair(k + 1, std::vector<long>(k + 1, 0));
    for (std::size_t p = 0; p < k; ++p) {
        const Branch& bp = *comps[p];
        const long c = bp.count();
        if (bp.kind == BranchKind::ConicClass)
            mus[p] = c * (bp.a - 1) * (bp.b - 1) + c * (c - 1) * bp.a * bp.b - c + 1;
        for (std::size_t q = p + 1; q < k; ++q) {
            pair[p][q] = pair[q][p] = c * comps[q]->count() * branch_intersection(bp, *comps[q]);
        }
        const ColengthResult ig = intersection_multiplicity(component_equation(bp, g.vars()), g, max_order);
        if (!ig.is_finite()) throw DomainError("check_slice_identities: slice shares a component with D(f)");
        pair[p][k] = pair[k][p] = *ig.value;
    }
    mus[k] = sd.mu_gamma;
    sd.mu_W_branches = milnor_from_branches(mus, pair);
    // m^N lies in the Jacobian ideal once N reaches the Milnor number.
    const int oracle_order = std::max(max_order, static_cast<int>(std::min<long>(sd.mu_W + 2, 4096)));
    const ColengthResult mu_w = milnor_number(dc.lambda * g, oracle_order);
    if (!mu_w.is_finite()) {
        fail("mu(W): no finite colength below order " + std::to_string(oracle_order));
        return sd;
    }
    sd.mu_W_oracle = *mu_w.value;
    if (sd.mu_W_branches != sd.mu_W || sd.mu_W_oracle != sd.mu_W)
        fail("mu(W): identity gives " + std::to_string(sd.mu_W) + ", branch data " + std::to_string(sd.mu_W_branches) +
             ", colength " + std::to_string(sd.mu_W_oracle));
    return sd;
}

SliceData slice_report(const MapGerm& f, std::uint64_t seed, int max_order) {
    SliceData sd = check_slice_identities(f, choose_generic_plane(f, seed, max_order), max_order);
    if (sd.consistent()) return sd;
    SliceData retry = check_slice_identities(f, choose_generic_plane(f, seed + 1, max_order), max_order);
    return retry.consistent() ? retry : sd;
}

GermFamily::GermFamily(std::array<MPoly, 3> coords, VarList vars) : f_(std::move(coords)), vars_(std::move(vars)) {
    if (vars_.size() != 3) throw DomainError("GermFamily: expected two source variables and one parameter");
    for (const auto& p : f_)
        if (!(p.vars() == vars_)) throw DomainError("GermFamily: coordinates must share the variable list");
}

MapGerm GermFamily::at(const Rat& t) const {
    std::array<MPoly, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = f_[i].substitute(2, t).drop_variable(2);
    return MapGerm(c[0], c[1], c[2]);
}

FamilyResult whitney_family_check(const GermFamily& family, const std::vector<Rat>& samples, std::uint64_t seed,
                                  int max_order) {
    FamilyResult out;
    out.all_fd = !samples.empty();
    for (const Rat& t : samples) {
        FamilySample s;
        s.t = t;
        try {
            const MapGerm f = family.at(t);
            const FdResult fd = is_finitely_determined(f, max_order);
            s.verdict = fd.verdict;
            if (fd.fd()) {
                const SliceData sd = slice_report(f, seed, max_order);
                s.mu_W = sd.mu_W_oracle;
                if (!sd.consistent()) s.note = sd.inconsistencies.front();
                const GenericMultiplicity gm = image_multiplicity_generic(f, seed, max_order);
                if (gm.value.is_finite()) s.mult_image = *gm.value.value;
            } else {
                s.note = "not finitely determined: " + to_string(fd.verdict);
            }
        } catch (const Error& e) {
            s.note = e.what();
        }
        out.all_fd = out.all_fd && s.verdict == FdVerdict::FD && s.mu_W.has_value();
        out.samples.push_back(std::move(s));
    }
    if (out.all_fd) {
        out.mu_W_constant = out.mult_constant = true;
        for (const auto& s : out.samples) {
            out.mu_W_constant = out.mu_W_constant && s.mu_W == out.samples.front().mu_W;
            out.mult_constant = out.mult_constant && s.mult_image && s.mult_image == out.samples.front().mult_image;
        }
    }
    return out;
}

ZariskiProfile zariski_profile(const MapGerm& f, int max_order) {
    const DoubleCurve dc = double_curve(f, max_order, "zariski_profile");
    ZariskiProfile z;
    z.type = dc.type;
    z.sorted_degrees = {dc.type.d1, dc.type.d2, dc.type.d3};
    std::sort(z.sorted_degrees.begin(), z.sorted_degrees.end());
    const auto& d = z.sorted_degrees;
    z.degree_symmetric = {Rat(d[0] + d[1] + d[2]), Rat(d[0] * d[1] + d[0] * d[2] + d[1] * d[2]), Rat(d[0] * d[1] * d[2])};
    const auto q = qh_check(dc.lambda, dc.type.a, dc.type.b);
    z.lambda_degree = q.ok() ? q.degree : -1;
    std::vector<const Branch*> all;
    for (const auto& br : dc.branches.classes)
        for (long c = 0; c < br.count(); ++c) all.push_back(&br);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) z.intersections.push_back(branch_intersection(*all[i], *all[j]));
    std::sort(z.intersections.begin(), z.intersections.end());
    z.r_i = dc.branches.r_i;
    z.r_f = dc.branches.r_f;
    z.C = mond_C(dc.type);
    z.T = mond_T(dc.type);
    const Rat m = image_multiplicity_formula(dc.type);
    if (!is_integer(m)) throw InconsistencyError("zariski_profile: multiplicity formula gives " + m.get_str());
    z.mult_image = m.get_num().get_si();
    return z;
}

ZariskiComparison zariski_compare(const MapGerm& f, const MapGerm& g, int max_order) {
    ZariskiComparison c{zariski_profile(f, max_order), zariski_profile(g, max_order)};
    const ZariskiProfile &p = c.first, &q = c.second;
    c.weights_match = p.type.a == q.type.a && p.type.b == q.type.b;
    c.intersection_tables_match = p.intersections == q.intersections && p.lambda_degree == q.lambda_degree;
    c.C_T_match = p.C == q.C && p.T == q.T;
    c.degrees_equal = p.degree_symmetric == q.degree_symmetric;
    c.multiplicities_equal = p.mult_image == q.mult_image;
    return c;
}

}  // namespace germinv
