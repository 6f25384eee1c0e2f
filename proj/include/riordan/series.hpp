#pragma once

#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Truncated formal power series with exact rational coefficients.
//
// A Series stores exactly the coefficients it certifies: order() is the
// count of known coefficients, at indices 0 .. order()-1. Every operation
// returns the longest prefix it can certify from its inputs and never pads
// results with fabricated zeros. (Polynomials are the exception: their
// missing coefficients are genuinely zero, so polynomial() may extend them
// to any order.)
class Series {
public:
    // order = coeffs.size(); at least one coefficient is required.
    explicit Series(std::vector<Rational> coeffs);

    // value + 0x + 0x^2 + ... to the given order (exact: constants are
    // polynomials).
    static Series constant(const Rational& value, int order);

    // The series x, to the given order (>= 2).
    static Series x(int order);

    // Convenience: a series whose order equals the coefficient count.
    static Series from_integers(const std::vector<long>& coeffs);

    int order() const { return static_cast<int>(c_.size()); }

    // [x^n] of this series; n must lie below order().
    const Rational& coeff(int n) const;

    // The first new_order coefficients; 1 <= new_order <= order().
    Series truncated(int new_order) const;

    // True when every known coefficient is zero.
    bool is_zero() const;

    const std::vector<Rational>& coeffs() const { return c_; }

private:
    std::vector<Rational> c_;
};

// Series agree when they match on the shared prefix: comparison is defined
// only up to min(order). Use order() checks separately where exact
// certification depth matters.
bool operator==(const Series& a, const Series& b);
inline bool operator!=(const Series& a, const Series& b) { return !(a == b); }

// Coefficientwise sum / difference; result order = min of the input orders.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// Cauchy product truncated to min(a.order, b.order).
Series mul(const Series& a, const Series& b);

// q with mul(q, b) = a on the shared prefix. Requires b(0) != 0.
Series div(const Series& a, const Series& b);

// outer(inner(x)) truncated to min(orders). Requires inner(0) = 0: a
// truncated composition with a nonzero inner constant term would need
// infinitely many outer coefficients.
Series compose(const Series& outer, const Series& inner);

// Compositional inverse: u with compose(s, u) = compose(u, s) = x, to
// s.order. Requires s(0) = 0 and s(1) != 0. Computed two independent ways
// (Newton iteration and the fixed-point recursion u = x * (x/s)(u)); a
// disagreement raises ConsistencyError.
Series revert(const Series& s);

// Termwise derivative; order drops by one, so s.order >= 2 is required.
Series derive(const Series& s);

// s^exponent by repeated squaring; negative exponents require s(0) != 0.
Series powi(const Series& s, long exponent);

// r with mul(r, r) = s and r(0) = 1; requires s(0) = 1 (no other branch is
// supported). Newton iteration with precision doubling.
Series sqrt(const Series& s);

// Checks one instance of the coefficient-extraction identity behind series
// reversion: [x^n] f(revert(v)) = (1/n) [x^(n-1)] f'(x) (x/v)^n.
// Requires v(0) = 0, v(1) != 0, and 1 <= n < min(f.order, v.order).
bool lagrange_check(const Series& f, const Series& v, int n);

// x * s: prepends the exact zero coefficient, so order grows by one.
Series shift_up(const Series& s);

// s / x for s with certified zero constant term; order shrinks by one.
Series shift_down(const Series& s);

// A polynomial extended with exact zeros to the requested order (>= 1).
Series polynomial(const std::vector<long>& coeffs, int order);

// num(x)/den(x) expanded to the requested order; den[0] must be nonzero.
Series rational_function(const std::vector<long>& num,
                         const std::vector<long>& den, int order);

} // namespace riordan
