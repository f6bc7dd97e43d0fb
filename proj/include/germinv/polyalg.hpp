#pragma once

// Gcd, squarefree part, resultants and related kernels on MPoly.

#include <string>
#include <vector>

#include "germinv/mpoly.hpp"

namespace germinv {

/// Pseudo-remainder of `a` by `b` viewed as polynomials in `var`:
/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg_var r < deg_var b.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var);

/// Greatest common divisor over Q, normalized to leading coefficient 1.
/// gcd(0, 0) = 0.
MPoly gcd_poly(const MPoly& p, const MPoly& q);

/// Product of the distinct irreducible factors of p, as a primitive
/// integer polynomial. Throws DomainError on p = 0.
MPoly squarefree_part(const MPoly& p);
bool is_squarefree(const MPoly& p);

/// Sylvester resultant with respect to `var`, computed by the subresultant
/// PRS. The result lives over the remaining variables (`var` is dropped) and
/// is the exact determinant value, without normalization.
MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var);
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var);

/// (p(.., y, ..) - p(.., y', ..)) / (y - y') over the variable list of p with
/// `yprime` appended.
MPoly divided_difference(const MPoly& p, const std::string& yname, const std::string& yprime);

struct QhCheck {
    enum class Status { Quasihomogeneous, NotQuasihomogeneous, Zero };
    Status status;
    long degree = 0;

    bool ok() const noexcept { return status == Status::Quasihomogeneous; }
};

/// Weighted-degree test with one positive weight per variable.
QhCheck qh_check(const MPoly& p, const std::vector<long>& weights);
inline QhCheck qh_check(const MPoly& p, long a, long b) { return qh_check(p, std::vector<long>{a, b}); }

/// Lowest total degree among the terms. Throws DomainError on p = 0.
int order_at_origin(const MPoly& p);

/// Sum of the terms of lowest total degree.
MPoly initial_form(const MPoly& p);

}  // namespace germinv
