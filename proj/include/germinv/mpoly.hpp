#pragma once

// Sparse multivariate polynomials over Q in at most four variables.
//
// Terms are kept sorted in descending graded-lexicographic order with the
// declared variable order (first variable largest). No zero coefficient is
// ever stored, so structural equality is polynomial equality.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace germinv {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Rat& r);
bool is_integer(const Rat& r);
/// num / den in canonical form.
Rat ratio(long num, long den);

inline constexpr std::size_t kMaxVars = 4;

struct Monomial {
    std::array<std::uint32_t, kMaxVars> e{};

    std::uint32_t degree() const noexcept { return e[0] + e[1] + e[2] + e[3]; }
    bool divides(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    /// Requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - divisor.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }
    bool coprime_with(const Monomial& o) const noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lex: total degree first, then lexicographic on exponents.
inline bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

struct Term {
    Monomial mono;
    Rat coef;
};

/// Shared, immutable list of variable names.
class VarList {
public:
    VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
    VarList(std::vector<std::string> names);
    VarList(std::initializer_list<std::string> names) : VarList(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    /// Index of `name`, or throws DomainError.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    VarList with_appended(const std::string& name) const;
    VarList without(std::size_t index) const;

    friend bool operator==(const VarList& a, const VarList& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(VarList vars) : vars_(std::move(vars)) {}
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    MPoly(VarList vars, std::vector<Term> terms);

    static MPoly constant(VarList vars, const Rat& c);
    static MPoly variable(VarList vars, std::size_t index);
    static MPoly variable(VarList vars, const std::string& name);
    static MPoly monomial(VarList vars, const Monomial& m, const Rat& c = 1);

    const VarList& vars() const noexcept { return vars_; }
    std::size_t arity() const noexcept { return vars_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    const Term& leading_term() const;
    const Rat& leading_coef() const { return leading_term().coef; }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    Rat constant_term() const;
    Rat coefficient(const Monomial& m) const;

    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    int degree_in(std::size_t var) const noexcept;
    /// Minimum exponent of `var` over all terms; -1 for zero.
    int min_degree_in(std::size_t var) const noexcept;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    MPoly mul_term(const Monomial& m, const Rat& c) const;
    MPoly pow(unsigned k) const;

    friend bool operator==(const MPoly& a, const MPoly& b);

    /// Partial derivative with respect to variable `var`.
    MPoly derivative(std::size_t var) const;
    /// Substitute a rational value for `var`; the variable stays in the list.
    MPoly substitute(std::size_t var, const Rat& value) const;
    /// Substitute polynomials (over `target` variables) for every variable.
    MPoly compose(const std::vector<MPoly>& images) const;
    /// Coefficient of var^k, viewed as a polynomial in the remaining variables
    /// (same variable list, `var` exponent zero).
    MPoly coeff_in(std::size_t var, unsigned k) const;
    /// Same polynomial over a new variable list; `mapping[i]` is the new index of old variable i.
    MPoly remap(const VarList& target, const std::vector<std::size_t>& mapping) const;
    /// Drops variable `var`; throws if the polynomial depends on it.
    MPoly drop_variable(std::size_t var) const;
    /// Keep only terms whose exponents satisfy `pred`.
    template <class Pred>
    MPoly filter(Pred pred) const {
        MPoly r(vars_);
        for (const auto& t : terms_)
            if (pred(t.mono)) r.terms_.push_back(t);
        return r;
    }

    /// Divide by the leading coefficient.
    MPoly monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    MPoly primitive() const;

    std::string to_string() const;

private:
    void check_same_vars(const MPoly& o) const;
    VarList vars_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Exact quotient p / q; throws DomainError when q does not divide p.
MPoly divexact(const MPoly& p, const MPoly& q);
/// True when q divides p exactly (q != 0).
bool divides(const MPoly& q, const MPoly& p);
/// p and q differ by a nonzero rational factor (or are both zero).
bool associates(const MPoly& p, const MPoly& q);

}  // namespace germinv
