#include "riordan/series.hpp"

#include <algorithm>
#include <cassert>

namespace riordan {

namespace {

// Internal kernels on raw coefficient vectors. Workspace vectors may be
// zero-padded freely here (Newton-style iterations correct the padding);
// only the public wrappers decide how many coefficients are certified.
using Vec = std::vector<Rational>;

Vec vpad(Vec a, int n) {
    a.resize(static_cast<size_t>(n));
    return a;
}

Vec vhead(const Vec& a, int n) {
    return Vec(a.begin(), a.begin() + std::min<size_t>(a.size(), n));
}

Vec vadd(const Vec& a, const Vec& b, int n) {
    Vec r = vpad(vhead(a, n), n);
    for (int i = 0; i < n && i < static_cast<int>(b.size()); ++i) {
        r[i] += b[i];
    }
    return r;
}

Vec vsub(const Vec& a, const Vec& b, int n) {
    Vec r = vpad(vhead(a, n), n);
    for (int i = 0; i < n && i < static_cast<int>(b.size()); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Vec vmul(const Vec& a, const Vec& b, int n) {
    Vec r(static_cast<size_t>(n));
    const int alen = std::min<int>(static_cast<int>(a.size()), n);
    for (int i = 0; i < alen; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const int blen = std::min<int>(static_cast<int>(b.size()), n - i);
        for (int j = 0; j < blen; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Requires b[0] != 0 (checked by callers).
Vec vdiv(const Vec& a, const Vec& b, int n) {
    Vec q(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Rational acc = j < static_cast<int>(a.size()) ? a[j] : Rational(0);
        const int lo = std::max(0, j - static_cast<int>(b.size()) + 1);
        for (int i = lo; i < j; ++i) {
            acc -= q[i] * b[j - i];
        }
        q[j] = acc / b[0];
    }
    return q;
}

// Horner evaluation of outer at inner; requires inner[0] == 0 (checked by
// callers), which keeps every step a finite truncated product.
Vec vcompose(const Vec& outer, const Vec& inner, int n) {
    assert(inner.empty() || inner[0] == 0);
    Vec r(static_cast<size_t>(n));
    if (outer.empty()) {
        return r;
    }
    r[0] = outer.back();
    for (int i = static_cast<int>(outer.size()) - 2; i >= 0; --i) {
        r = vmul(r, inner, n);
        r[0] += outer[i];
    }
    return r;
}

Vec vderive(const Vec& a) {
    Vec r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = a[i] * Rational(static_cast<long>(i));
    }
    return r;
}

// Newton iteration with precision doubling; the start value is correct to
// two coefficients, and each step at working length m = min(2k, N) turns k
// correct coefficients into m.
Vec revert_newton(const Vec& s) {
    const int n = static_cast<int>(s.size());
    Vec u{Rational(0), Rational(1) / s[1]};
    while (static_cast<int>(u.size()) < n) {
        const int m = std::min(2 * static_cast<int>(u.size()), n);
        const Vec uw = vpad(u, m);
        Vec num = vcompose(vhead(s, m), uw, m);
        num[1] -= 1;
        const Vec sd = vderive(vhead(s, std::min(m + 1, n)));
        const Vec den = vcompose(vpad(sd, m), uw, m);
        u = vsub(uw, vdiv(num, den, m), m);
    }
    return u;
}

// Fixed-point recursion for the same inverse: with psi = x/s, the inverse u
// satisfies u = x * psi(u), and iterating from a start that is correct to
// two coefficients gains one correct coefficient per pass.  Each pass runs
// at the shortest truncation that can certify its new coefficient, so the
// k-th pass costs O(k^3) instead of O(n^3).
Vec revert_fixed_point(const Vec& s) {
    const int n = static_cast<int>(s.size());
    const Vec sx(s.begin() + 1, s.end()); // s/x, exact: s[0] is a known zero
    const Vec psi = vdiv(Vec{Rational(1)}, sx, n - 1);
    Vec u{Rational(0), psi[0]};
    while (static_cast<int>(u.size()) < n) {
        // u holds k certified coefficients; x*psi(u) certifies k+1
        const int m = static_cast<int>(u.size()) + 1;
        const Vec pu =
            vcompose(vhead(psi, m - 1), vpad(vhead(u, m - 1), m - 1), m - 1);
        Vec next(static_cast<size_t>(m));
        for (int i = 0; i + 1 < m; ++i) {
            next[i + 1] = pu[i];
        }
        u = std::move(next);
    }
    return u;
}

} // namespace

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw PrecisionError("a series needs at least one known coefficient");
    }
}

Series Series::constant(const Rational& value, int order) {
    if (order < 1) {
        throw UsageError("series order must be at least 1");
    }
    std::vector<Rational> c(static_cast<size_t>(order));
    c[0] = value;
    return Series(std::move(c));
}

Series Series::x(int order) {
    if (order < 2) {
        throw UsageError("the series x needs order at least 2");
    }
    std::vector<Rational> c(static_cast<size_t>(order));
    c[1] = 1;
    return Series(std::move(c));
}

Series Series::from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return Series(std::move(c));
}

const Rational& Series::coeff(int n) const {
    if (n < 0) {
        throw UsageError("negative coefficient index");
    }
    if (n >= order()) {
        throw PrecisionError("coefficient " + std::to_string(n) +
                             " requested, but only " + std::to_string(order()) +
                             " are certified");
    }
    return c_[static_cast<size_t>(n)];
}

Series Series::truncated(int new_order) const {
    if (new_order < 1) {
        throw UsageError("series order must be at least 1");
    }
    if (new_order > order()) {
        throw PrecisionError("truncation to " + std::to_string(new_order) +
                             " exceeds the certified order " +
                             std::to_string(order()));
    }
    return Series(Vec(c_.begin(), c_.begin() + new_order));
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool operator==(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) {
            return false;
        }
    }
    return true;
}

Series add(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    return Series(vadd(a.coeffs(), b.coeffs(), n));
}

Series sub(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    return Series(vsub(a.coeffs(), b.coeffs(), n));
}

Series mul(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    return Series(vmul(a.coeffs(), b.coeffs(), n));
}

Series div(const Series& a, const Series& b) {
    if (b.coeff(0) == 0) {
        throw SingularDivisionError("division by a series with zero constant term");
    }
    const int n = std::min(a.order(), b.order());
    return Series(vdiv(a.coeffs(), b.coeffs(), n));
}

Series compose(const Series& outer, const Series& inner) {
    if (inner.coeff(0) != 0) {
        throw CompositionError("composition requires inner constant term 0, got " +
                               to_string(inner.coeff(0)));
    }
    const int n = std::min(outer.order(), inner.order());
    return Series(vcompose(vhead(outer.coeffs(), n), vhead(inner.coeffs(), n), n));
}

Series revert(const Series& s) {
    if (s.coeff(0) != 0) {
        throw ReversionError("reversion requires constant term 0");
    }
    if (s.order() < 2) {
        throw ReversionError("reversion needs the linear coefficient, but only "
                             "the constant term is certified");
    }
    if (s.coeff(1) == 0) {
        throw ReversionError("reversion requires a nonzero linear term");
    }
    const Vec u = revert_newton(s.coeffs());
    const Vec w = revert_fixed_point(s.coeffs());
    if (u != w) {
        throw ConsistencyError("the two reversion methods disagree");
    }
    return Series(u);
}

Series derive(const Series& s) {
    if (s.order() < 2) {
        throw PrecisionError("derivative of an order-1 series has no certified "
                             "coefficients");
    }
    return Series(vderive(s.coeffs()));
}

Series powi(const Series& s, long exponent) {
    if (exponent < 0) {
        if (s.coeff(0) == 0) {
            throw SingularDivisionError(
                "negative power of a series with zero constant term");
        }
        return powi(div(Series::constant(1, s.order()), s), -exponent);
    }
    Series result = Series::constant(1, s.order());
    Series base = s;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) {
            result = mul(result, base);
        }
        e >>= 1UL;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Series sqrt(const Series& s) {
    if (s.coeff(0) != 1) {
        throw BranchError("square root requires constant term 1, got " +
                          to_string(s.coeff(0)));
    }
    const int n = s.order();
    Vec r{Rational(1)};
    while (static_cast<int>(r.size()) < n) {
        const int m = std::min(2 * static_cast<int>(r.size()), n);
        const Vec rw = vpad(r, m);
        Vec next = vadd(rw, vdiv(vhead(s.coeffs(), m), rw, m), m);
        for (auto& q : next) {
            q /= 2;
        }
        r = next;
    }
    return Series(r);
}

bool lagrange_check(const Series& f, const Series& v, int n) {
    if (v.coeff(0) != 0 || v.order() < 2 || v.coeff(1) == 0) {
        throw ReversionError("coefficient-extraction check requires v(0) = 0 "
                             "and a nonzero linear term");
    }
    if (n < 1 || n >= std::min(f.order(), v.order())) {
        throw ReversionError("coefficient index out of the certified range");
    }
    const Rational lhs = compose(f, revert(v)).coeff(n);
    // (x/v)^n = (v/x)^(-n); v/x is exact because v(0) is a known zero.
    const Series x_over_v =
        div(Series::constant(1, v.order() - 1), shift_down(v));
    const Series rhs_series = mul(derive(f), powi(x_over_v, n));
    const Rational rhs = rhs_series.coeff(n - 1) / Rational(n);
    return lhs == rhs;
}

Series shift_up(const Series& s) {
    Vec c(s.coeffs().size() + 1);
    for (size_t i = 0; i < s.coeffs().size(); ++i) {
        c[i + 1] = s.coeffs()[i];
    }
    return Series(std::move(c));
}

Series shift_down(const Series& s) {
    if (s.coeff(0) != 0) {
        throw SingularDivisionError(
            "series with nonzero constant term is not divisible by x");
    }
    if (s.order() < 2) {
        throw PrecisionError("dividing an order-1 series by x leaves no "
                             "certified coefficients");
    }
    return Series(Vec(s.coeffs().begin() + 1, s.coeffs().end()));
}

Series polynomial(const std::vector<long>& coeffs, int order) {
    if (order < 1) {
        throw UsageError("series order must be at least 1");
    }
    Vec c(static_cast<size_t>(order));
    for (size_t i = 0; i < coeffs.size() && i < c.size(); ++i) {
        c[i] = coeffs[i];
    }
    return Series(std::move(c));
}

Series rational_function(const std::vector<long>& num,
                         const std::vector<long>& den, int order) {
    if (den.empty() || den[0] == 0) {
        throw SingularDivisionError(
            "rational function requires a denominator with nonzero constant term");
    }
    return div(polynomial(num, order), polynomial(den, order));
}

} // namespace riordan
