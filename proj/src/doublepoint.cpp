#include "germinv/doublepoint.hpp"

#include <numeric>

#include "germinv/errors.hpp"
#include "germinv/localalg.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {

std::string to_string(FdVerdict v) {
    switch (v) {
        case FdVerdict::FD: return "FD";
        case FdVerdict::NotFinite: return "NotFinite";
        case FdVerdict::NotGenerically1to1: return "NotGenerically1to1";
        case FdVerdict::NonReducedD: return "NonReducedD";
        case FdVerdict::Unsupported: return "Unsupported";
    }
    return "?";
}

std::string to_string(BranchKind k) {
    switch (k) {
        case BranchKind::XAxis: return "XAxis";
        case BranchKind::YAxis: return "YAxis";
        case BranchKind::ConicClass: return "ConicClass";
    }
    return "?";
}

std::string to_string(BranchClass c) {
    switch (c) {
        case BranchClass::Identification: return "Identification";
        case BranchClass::Fold: return "Fold";
        case BranchClass::Invalid: return "Invalid";
    }
    return "?";
}

std::string to_string(FoldPlane p) {
    switch (p) {
        case FoldPlane::X0: return "X=0";
        case FoldPlane::Y0: return "Y=0";
        case FoldPlane::Z0: return "Z=0";
        case FoldPlane::NoFolds: return "NoFolds";
    }
    return "?";
}

std::optional<PreparedGerm> prepare_corank1(const MapGerm& f) {
    const VarList& vars = f.vars();
    const MPoly x = MPoly::variable(vars, 0);
    const MPoly y = MPoly::variable(vars, 1);
    for (int swap = 0; swap < 2; ++swap) {
        const MPoly& target = swap ? y : x;
        for (int i = 0; i < 3; ++i) {
            if (!(f[static_cast<std::size_t>(i)] == target)) continue;
            PreparedGerm pg{f, {0, 1, 2}, swap == 1};
            std::array<int, 3> order{i, i == 0 ? 1 : 0, i == 2 ? 1 : 2};
            std::array<MPoly, 3> c;
            for (std::size_t k = 0; k < 3; ++k) {
                c[k] = f[static_cast<std::size_t>(order[k])];
                if (swap) c[k] = c[k].remap(vars, {1, 0});
            }
            pg.target_order = order;
            pg.germ = strip_first_coordinate_terms(MapGerm(c[0], c[1], c[2]));
            return pg;
        }
    }
    return std::nullopt;
}

DoubleLift double_point_lift(const MapGerm& f) {
    const VarList& vars = f.vars();
    if (!(f.f1() == MPoly::variable(vars, 0)))
        throw DomainError("double_point_lift: first coordinate must be " + vars[0]);
    const std::string yp = vars[1] + "'";
    return {divided_difference(f.f2(), vars[1], yp), divided_difference(f.f3(), vars[1], yp)};
}

Lambda double_point_curve(const MapGerm& f) {
    const DoubleLift lift = double_point_lift(f);
    MPoly lam;
    if (lift.P.is_zero() || lift.Q.is_zero()) {
        lam = MPoly(f.vars());
    } else {
        lam = resultant(lift.P, lift.Q, 2);
    }
    if (lam.is_zero()) throw DomainError("double point curve vanishes identically: f is not generically one-to-one");
    Lambda out{lam.primitive(), std::nullopt};
    if (auto t = infer_qh_type(f)) {
        const QhCheck c = qh_check(out.poly, t->a, t->b);
        if (c.ok()) out.qh = LambdaQh{c.degree, t->a, t->b};
    }
    return out;
}

FdResult is_finitely_determined(const MapGerm& f, int max_order) {
    FdResult res;
    res.corank = corank(f);
    if (res.corank == 2) {
        res.verdict = FdVerdict::Unsupported;
        res.note = "corank 2: double point curve computation not supported";
        return res;
    }
    if (res.corank == 0) {
        res.verdict = FdVerdict::FD;
        res.lambda = Lambda{MPoly::constant(f.vars(), 1), std::nullopt};
        res.note = "immersion: empty double point curve";
        return res;
    }
    res.prepared = prepare_corank1(f);
    if (!res.prepared) {
        res.verdict = FdVerdict::Unsupported;
        res.note = "no coordinate equals a source variable; bring the germ to first coordinate x";
        return res;
    }
    const MapGerm& g = res.prepared->germ;
    if (!is_finite(g, max_order)) {
        res.verdict = FdVerdict::NotFinite;
        return res;
    }
    try {
        res.lambda = double_point_curve(g);
    } catch (const DomainError&) {
        res.verdict = FdVerdict::NotGenerically1to1;
        return res;
    }
    const MPoly& lam = res.lambda->poly;
    if (lam.constant_term() != 0) {
        res.verdict = FdVerdict::FD;
        res.note = "double point curve does not pass through the origin";
        return res;
    }
    // Reducedness at the origin: repeated factors must avoid 0.
    MPoly repeated = lam;
    for (std::size_t v = 0; v < lam.arity(); ++v) repeated = gcd_poly(repeated, lam.derivative(v));
    if (!repeated.is_constant() && repeated.constant_term() == 0) {
        res.verdict = FdVerdict::NonReducedD;
        res.note = "repeated factor " + repeated.to_string() + " in the double point curve";
        return res;
    }
    if (!milnor_number(lam, max_order).is_finite()) {
        res.verdict = FdVerdict::NonReducedD;
        res.note = "double point curve has a non-isolated singularity";
        return res;
    }
    res.verdict = FdVerdict::FD;
    return res;
}

long Branch::count() const {
    if (kind != BranchKind::ConicClass) return 1;
    return class_poly.total_degree();
}

std::string Branch::describe() const {
    switch (kind) {
        case BranchKind::XAxis: return "V(x)";
        case BranchKind::YAxis: return "V(y)";
        case BranchKind::ConicClass:
            return "y^" + std::to_string(a) + " = t x^" + std::to_string(b) + ", B(t) = " + class_poly.to_string();
    }
    return "?";
}

namespace {

const VarList& t_vars() {
    static const VarList v{"t"};
    return v;
}

// f_i(1, theta) = theta^r G(theta^a) for quasihomogeneous f_i; returns G in t.
MPoly branch_polynomial(const MPoly& fi, long a) {
    std::vector<Term> terms;
    long r = -1;
    for (const auto& t : fi.terms())
        r = (r < 0) ? t.mono.e[1] : std::min<long>(r, t.mono.e[1]);
    for (const auto& t : fi.terms()) {
        const long j = static_cast<long>(t.mono.e[1]) - r;
        if (j % a != 0) throw InconsistencyError("coordinate is not quasihomogeneous for the branch weights");
        Monomial m;
        m.e[0] = static_cast<std::uint32_t>(j / a);
        terms.push_back({m, t.coef});
    }
    return MPoly(t_vars(), std::move(terms));
}

long gcd_all(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g;
}

BranchClass tag(long degree) {
    if (degree == 1) return BranchClass::Identification;
    if (degree == 2) return BranchClass::Fold;
    return BranchClass::Invalid;
}

}  // namespace

BranchClass classify_branch(Branch& br, const MapGerm& f, const QhType& t) {
    std::vector<long> exps;
    switch (br.kind) {
        case BranchKind::ConicClass:
            // f o (u^a, theta u^b) = (u^a, c2 u^d2, c3 u^d3).
            exps.push_back(t.a);
            if (!br.f2_vanishes) exps.push_back(t.d2);
            if (!br.f3_vanishes) exps.push_back(t.d3);
            break;
        case BranchKind::XAxis:
            // f o (0, u) = (0, f2(0,u), f3(0,u)).
            for (std::size_t i = 1; i < 3; ++i)
                if (!f[i].filter([](const Monomial& m) { return m.e[0] == 0; }).is_zero())
                    exps.push_back(t.degree(i) / t.b);
            break;
        case BranchKind::YAxis:
            // f o (u, 0) = (u, f2(u,0), f3(u,0)).
            exps.push_back(1);
            break;
    }
    br.degree = gcd_all(exps);
    br.classification = tag(br.degree);
    return br.classification;
}

BranchSet branch_decompose(const Lambda& lam, const MapGerm& f, const QhType& t) {
    const VarList& vars = lam.poly.vars();
    if (!(f.f1() == MPoly::variable(f.vars(), 0))) throw DomainError("branch_decompose: first coordinate must be x");
    const QhCheck qc = qh_check(lam.poly, t.a, t.b);
    if (!qc.ok()) throw DomainError("branch_decompose: lambda is not quasihomogeneous for weights (" +
                                    std::to_string(t.a) + "," + std::to_string(t.b) + ")");
    BranchSet bs;
    MPoly rest = lam.poly;
    const MPoly x = MPoly::variable(vars, 0), y = MPoly::variable(vars, 1);
    if (rest.min_degree_in(0) > 1 || rest.min_degree_in(1) > 1)
        throw InconsistencyError("branch_decompose: lambda has a repeated axis factor");
    if (rest.min_degree_in(0) == 1) {
        bs.s = 1;
        rest = divexact(rest, x);
    }
    if (rest.min_degree_in(1) == 1) {
        bs.v = 1;
        rest = divexact(rest, y);
    }
    // rest = x^{i0} B(y^a / x^b): every term is x^{i0 - k b} y^{k a}.
    std::vector<Term> bterms;
    const long i0 = rest.degree_in(0);
    for (const auto& term : rest.terms()) {
        const long j = term.mono.e[1];
        const long i = term.mono.e[0];
        if (j % t.a != 0 || i0 - i != (j / t.a) * t.b)
            throw InconsistencyError("branch_decompose: residual factor is not a polynomial in y^a/x^b");
        Monomial m;
        m.e[0] = static_cast<std::uint32_t>(j / t.a);
        bterms.push_back({m, term.coef});
    }
    const MPoly B = MPoly(t_vars(), std::move(bterms));

    if (bs.s) {
        Branch br;
        br.kind = BranchKind::XAxis;
        br.class_poly = x;
        br.a = t.a;
        br.b = t.b;
        br.f2_vanishes = f.f2().filter([](const Monomial& m) { return m.e[0] == 0; }).is_zero();
        br.f3_vanishes = f.f3().filter([](const Monomial& m) { return m.e[0] == 0; }).is_zero();
        classify_branch(br, f, t);
        bs.classes.push_back(br);
    }
    if (bs.v) {
        Branch br;
        br.kind = BranchKind::YAxis;
        br.class_poly = y;
        br.a = t.a;
        br.b = t.b;
        br.f2_vanishes = f.f2().filter([](const Monomial& m) { return m.e[1] == 0; }).is_zero();
        br.f3_vanishes = f.f3().filter([](const Monomial& m) { return m.e[1] == 0; }).is_zero();
        classify_branch(br, f, t);
        bs.classes.push_back(br);
    }
    if (B.total_degree() > 0) {
        const MPoly G2 = branch_polynomial(f.f2(), t.a);
        const MPoly G3 = branch_polynomial(f.f3(), t.a);
        const MPoly B2 = gcd_poly(B, G2);
        const MPoly B3 = gcd_poly(B, G3);
        const MPoly B23 = gcd_poly(B2, B3);
        const MPoly only2 = divexact(B2, B23);
        const MPoly only3 = divexact(B3, B23);
        const MPoly neither = divexact(B.monic(), B2 * only3);
        const std::pair<MPoly, std::pair<bool, bool>> parts[] = {
            {neither, {false, false}}, {only2, {true, false}}, {only3, {false, true}}, {B23, {true, true}}};
        for (const auto& [poly, pattern] : parts) {
            if (poly.total_degree() <= 0) continue;
            Branch br;
            br.kind = BranchKind::ConicClass;
            br.class_poly = poly.primitive();
            br.a = t.a;
            br.b = t.b;
            br.f2_vanishes = pattern.first;
            br.f3_vanishes = pattern.second;
            classify_branch(br, f, t);
            bs.classes.push_back(br);
        }
    }
    for (const auto& br : bs.classes) {
        if (br.classification == BranchClass::Identification) bs.r_i += br.count();
        if (br.classification == BranchClass::Fold) bs.r_f += br.count();
    }
    return bs;
}

ComponentCounts count_components(const MapGerm& f, int max_order) {
    const FdResult fd = is_finitely_determined(f, max_order);
    if (!fd.fd()) throw DomainError("count_components: germ is not finitely determined (" + to_string(fd.verdict) + ")");
    if (fd.corank == 0) return {0, 0};
    const MapGerm& g = fd.prepared->germ;
    const auto t = infer_qh_type(g);
    if (!t) throw DomainError("count_components: germ is not quasihomogeneous");
    const BranchSet bs = branch_decompose(*fd.lambda, g, *t);
    for (const auto& br : bs.classes)
        if (br.classification == BranchClass::Invalid)
            throw InconsistencyError("branch " + br.describe() + " has restriction degree " +
                                     std::to_string(br.degree) + " on a finitely determined germ");
    return {bs.r_i, bs.r_f};
}

namespace {

bool odd_in_y(const MPoly& p) {
    for (const auto& t : p.terms())
        if (t.mono.e[1] % 2 == 0) return false;
    return !p.is_zero();
}

TableResult not_applicable(TableResult r, const std::string& why) {
    r.applicable = false;
    r.reason = why;
    return r;
}

}  // namespace

TableResult table_r(const NormalFormInfo& nf, const QhType& t) {
    TableResult res;
    const VarList& vars = nf.p.vars();
    const MapGerm g = nf.reconstruct();
    const long n = nf.n;
    const bool beta = nf.beta != 0;
    res.multiplicity = static_cast<int>(beta ? std::min<long>(n, *nf.m) : n);

    if (res.multiplicity == 2) {
        // Shape (x, y^2, y h(x, y^2)): one coordinate is a pure y^2, the other odd in y.
        MPoly odd;
        long d_odd = 0;
        if (n == 2 && nf.p.is_zero() && odd_in_y(g.f3())) {
            odd = g.f3();
            d_odd = t.d3;
        } else if (beta && nf.m == 2 && nf.q.is_zero() && odd_in_y(g.f2())) {
            odd = g.f2();
            d_odd = t.d2;
        } else {
            return not_applicable(res, "multiplicity-2 table needs the shape (x, y^2, y h(x, y^2))");
        }
        const MPoly h = divexact(odd, MPoly::variable(vars, 1));
        const long s = h.min_degree_in(0) >= 1 ? 1 : 0;
        const Rat k = ratio(d_odd - s * t.a - t.b, t.a * t.b);
        if (!is_integer(k) || k < 0) return not_applicable(res, "branch count (d3 - s a - b)/(a b) is not a nonnegative integer");
        const long kk = k.get_num().get_si();
        if (t.a % 2 == 0) {
            res.r_f = kk + s;
            res.r_i = 0;
            res.rule = "mult2:a_even,s=" + std::to_string(s);
        } else {
            res.r_f = s;
            res.r_i = kk;
            res.rule = "mult2:a_odd,s=" + std::to_string(s);
        }
        res.applicable = true;
        return res;
    }

    if (!beta) return not_applicable(res, "beta = 0: third coordinate has no pure power of y; table row needs manual review");
    const long m = *nf.m;
    SVector sv{std::gcd(n, m) - 1, std::gcd(t.a, n) - 1, std::gcd(t.a, m) - 1};
    res.s = sv;
    res.r_total = Rat(t.b * (n - 1) * (m - 1) - sv.s1 * t.a, t.a * t.b) + sv.s1;
    res.r_total->canonicalize();
    const long ones = (sv.s1 == 1) + (sv.s2 == 1) + (sv.s3 == 1);
    if (sv.s1 > 1 || sv.s2 > 1 || sv.s3 > 1 || ones > 1)
        return not_applicable(res, "s-vector outside the finitely determined range");
    Rat ri, rf;
    if (sv.s1 == 1) {
        rf = 1;
        ri = Rat((n - 1) * (m - 1), t.a) - 1;
        res.rule = "mult3+:s1";
    } else if (sv.s2 == 1) {
        rf = Rat(m - 1, t.a);
        ri = Rat((n - 2) * (m - 1), t.a);
        res.rule = "mult3+:s2";
    } else if (sv.s3 == 1) {
        rf = Rat(n - 1, t.a);
        ri = Rat((n - 1) * (m - 2), t.a);
        res.rule = "mult3+:s3";
    } else {
        rf = 0;
        ri = Rat((n - 1) * (m - 1), t.a);
        res.rule = "mult3+:s0";
    }
    rf.canonicalize();
    ri.canonicalize();
    if (!is_integer(rf) || !is_integer(ri)) return not_applicable(res, "table entries are not integers for this type");
    res.r_f = rf.get_num().get_si();
    res.r_i = ri.get_num().get_si();
    res.applicable = true;
    return res;
}

FoldPlaneResult fold_image_plane(const MapGerm& f, int max_order) {
    const FdResult fd = is_finitely_determined(f, max_order);
    if (!fd.fd() || fd.corank != 1) throw DomainError("fold_image_plane: needs a finitely determined corank-1 germ");
    const PreparedGerm& pg = *fd.prepared;
    const auto t = infer_qh_type(pg.germ);
    if (!t) throw DomainError("fold_image_plane: germ is not quasihomogeneous");
    const auto nf = check_normal_form(pg.germ);
    if (!nf) throw DomainError("fold_image_plane: germ is not in normal form");
    const TableResult tr = table_r(*nf, *t);
    if (tr.multiplicity < 3 || !tr.s) throw DomainError("fold_image_plane: needs multiplicity at least 3");

    // Planes in the prepared coordinates: index 0 -> X, 1 -> Y, 2 -> Z.
    std::optional<int> observed;
    const BranchSet bs = branch_decompose(*fd.lambda, pg.germ, *t);
    for (const auto& br : bs.classes) {
        if (br.classification != BranchClass::Fold) continue;
        std::vector<int> planes;
        if (br.kind == BranchKind::XAxis) planes.push_back(0);
        if (br.f2_vanishes) planes.push_back(1);
        if (br.f3_vanishes) planes.push_back(2);
        if (planes.size() != 1)
            throw InconsistencyError("fold branch " + br.describe() + " does not lie in exactly one coordinate plane");
        if (observed && *observed != planes.front())
            throw InconsistencyError("fold images lie in more than one coordinate plane");
        observed = planes.front();
    }
    std::optional<int> predicted;
    if (tr.s->s1 == 1) predicted = 0;
    if (tr.s->s2 == 1) predicted = 2;
    if (tr.s->s3 == 1) predicted = 1;

    auto to_plane = [&](std::optional<int> idx) {
        if (!idx) return FoldPlane::NoFolds;
        switch (pg.target_order[static_cast<std::size_t>(*idx)]) {
            case 0: return FoldPlane::X0;
            case 1: return FoldPlane::Y0;
            default: return FoldPlane::Z0;
        }
    };
    FoldPlaneResult res{to_plane(observed), to_plane(predicted)};
    if (res.observed != res.predicted)
        throw InconsistencyError("fold plane from branches (" + to_string(res.observed) + ") differs from s-vector (" +
                                 to_string(res.predicted) + ")");
    return res;
}

}  // namespace germinv
