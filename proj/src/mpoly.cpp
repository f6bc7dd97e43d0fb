#include "germinv/mpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "germinv/errors.hpp"

namespace germinv {

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_integer(const Rat& r) { return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0; }

Rat ratio(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

VarList::VarList(std::vector<std::string> names) {
    if (names.size() > kMaxVars) throw DomainError("at most " + std::to_string(kMaxVars) + " variables supported");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::size_t VarList::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    throw DomainError("unknown variable '" + name + "'");
}

bool VarList::contains(const std::string& name) const {
    return std::find(names_->begin(), names_->end(), name) != names_->end();
}

VarList VarList::with_appended(const std::string& name) const {
    auto v = *names_;
    v.push_back(name);
    return VarList(std::move(v));
}

VarList VarList::without(std::size_t index) const {
    auto v = *names_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(index));
    return VarList(std::move(v));
}

namespace {

void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coef += t.coef;
        } else {
            if (!out.empty() && out.back().coef == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms = std::move(out);
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
            out.push_back(b[j++]);
            if (subtract) out.back().coef = -out.back().coef;
        } else {
            Rat c = subtract ? Rat(a[i].coef - b[j].coef) : Rat(a[i].coef + b[j].coef);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MPoly::MPoly(VarList vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        for (std::size_t i = vars_.size(); i < kMaxVars; ++i)
            if (t.mono.e[i] != 0) throw DomainError("exponent vector exceeds declared arity");
    normalize(terms_);
}

MPoly MPoly::constant(VarList vars, const Rat& c) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MPoly MPoly::variable(VarList vars, std::size_t index) {
    if (index >= vars.size()) throw DomainError("variable index out of range");
    Monomial m;
    m.e[index] = 1;
    return monomial(std::move(vars), m);
}

MPoly MPoly::variable(VarList vars, const std::string& name) {
    const auto idx = vars.index_of(name);
    return variable(std::move(vars), idx);
}

MPoly MPoly::monomial(VarList vars, const Monomial& m, const Rat& c) {
    return MPoly(std::move(vars), {{m, c}});
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

const Term& MPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

Rat MPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coef;
    return 0;
}

Rat MPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_greater(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return 0;
}

int MPoly::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int MPoly::degree_in(std::size_t var) const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[var]));
    return d;
}

int MPoly::min_degree_in(std::size_t var) const noexcept {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(terms_.front().mono.e[var]);
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.e[var]));
    return d;
}

void MPoly::check_same_vars(const MPoly& o) const {
    if (!(vars_ == o.vars_)) throw DomainError("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_vars(o);
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_vars(o);
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_vars(b);
    MPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, s.coef * t.coef});
    normalize(r.terms_);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coef *= c;
    }
    return *this;
}

MPoly MPoly::mul_term(const Monomial& m, const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the grlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = constant(vars_, 1);
    MPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

MPoly MPoly::derivative(std::size_t var) const {
    if (var >= arity()) throw DomainError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.e[var] == 0) continue;
        Term d = t;
        d.coef *= t.mono.e[var];
        --d.mono.e[var];
        out.push_back(std::move(d));
    }
    return MPoly(vars_, std::move(out));
}

MPoly MPoly::substitute(std::size_t var, const Rat& value) const {
    if (var >= arity()) throw DomainError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Term s = t;
        Rat f = 1;
        for (std::uint32_t i = 0; i < t.mono.e[var]; ++i) f *= value;
        s.coef *= f;
        s.mono.e[var] = 0;
        out.push_back(std::move(s));
    }
    return MPoly(vars_, std::move(out));
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (images.size() != arity()) throw DomainError("compose: wrong number of images");
    if (images.empty()) return *this;
    const VarList& target = images.front().vars();
    // Cache powers per variable.
    std::vector<std::vector<MPoly>> powers(arity());
    for (std::size_t v = 0; v < arity(); ++v) {
        powers[v].push_back(constant(target, 1));
        const int d = degree_in(v);
        for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
    }
    MPoly r(target);
    for (const auto& t : terms_) {
        MPoly term = constant(target, t.coef);
        for (std::size_t v = 0; v < arity(); ++v)
            if (t.mono.e[v]) term *= powers[v][t.mono.e[v]];
        r += term;
    }
    return r;
}

MPoly MPoly::coeff_in(std::size_t var, unsigned k) const {
    MPoly r(vars_);
    for (const auto& t : terms_) {
        if (t.mono.e[var] != k) continue;
        Term s = t;
        s.mono.e[var] = 0;
        r.terms_.push_back(std::move(s));
    }
    normalize(r.terms_);
    return r;
}

MPoly MPoly::remap(const VarList& target, const std::vector<std::size_t>& mapping) const {
    if (mapping.size() != arity()) throw DomainError("remap: mapping size mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s{Monomial{}, t.coef};
        for (std::size_t i = 0; i < arity(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (mapping[i] >= target.size()) throw DomainError("remap: target index out of range");
            s.mono.e[mapping[i]] += t.mono.e[i];
        }
        out.push_back(std::move(s));
    }
    return MPoly(target, std::move(out));
}

MPoly MPoly::drop_variable(std::size_t var) const {
    if (degree_in(var) > 0) throw DomainError("drop_variable: polynomial depends on '" + vars_[var] + "'");
    std::vector<std::size_t> mapping;
    for (std::size_t i = 0; i < arity(); ++i) mapping.push_back(i < var ? i : (i == var ? 0 : i - 1));
    return remap(vars_.without(var), mapping);
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    MPoly r(*this);
    const Rat inv = 1 / leading_coef();
    r *= inv;
    return r;
}

MPoly MPoly::primitive() const {
    if (is_zero()) return *this;
    Int lcm_den = 1, g = 0;
    for (const auto& t : terms_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coef.get_den_mpz_t());
    for (const auto& t : terms_) {
        Int num = t.coef.get_num() * (lcm_den / t.coef.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rat scale(lcm_den, g);
    scale.canonicalize();
    if (leading_coef() < 0) scale = -scale;
    MPoly r(*this);
    r *= scale;
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit = (c == 1) && t.mono.degree() > 0;
        bool wrote = false;
        if (!unit) {
            os << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < arity(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i];
            if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

namespace {

// Division of p by q in grlex; returns {quotient, remainder}.
std::pair<MPoly, MPoly> divide_one(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    MPoly quot(p.vars()), rem(p.vars()), work = p;
    const Monomial& lq = q.leading_monomial();
    const Rat& lc = q.leading_coef();
    std::vector<Term> rem_terms;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        if (lq.divides(lt.mono)) {
            const Monomial m = lt.mono / lq;
            const Rat c = lt.coef / lc;
            quot += MPoly::monomial(p.vars(), m, c);
            work -= q.mul_term(m, c);
        } else {
            rem_terms.push_back(lt);
            work -= MPoly::monomial(p.vars(), lt.mono, lt.coef);
        }
    }
    return {quot, MPoly(p.vars(), std::move(rem_terms))};
}

}  // namespace

MPoly divexact(const MPoly& p, const MPoly& q) {
    auto [quot, rem] = divide_one(p, q);
    if (!rem.is_zero()) throw DomainError("divexact: " + q.to_string() + " does not divide " + p.to_string());
    return quot;
}

bool divides(const MPoly& q, const MPoly& p) {
    if (q.is_zero()) return p.is_zero();
    return divide_one(p, q).second.is_zero();
}

bool associates(const MPoly& p, const MPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.size() != q.size()) return false;
    return p.monic() == q.monic();
}

}  // namespace germinv
