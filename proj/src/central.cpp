#include "riordan/central.hpp"

#include <string>

namespace riordan {

namespace {

Series one(int order) { return Series::constant(1, order); }

// w = Rev(x*f): the reverted multiplier, certified one past the array order.
Series reverted_multiplier(const RiordanArray& a) {
    return revert(a.multiplier());
}

void require_same(const RiordanArray& got, const RiordanArray& want,
                  const char* what) {
    if (got.g() != want.g() || got.ft() != want.ft()) {
        throw IdentityError(std::string(what) + " violated");
    }
}

} // namespace

Phi phi_of(const RiordanArray& a) {
    // x/f has an exactly-zero constant term, so it certifies one coefficient
    // past the array order; reversion preserves that.
    const Series x_over_f = shift_up(div(one(a.order()), a.ft()));
    Series phi = revert(x_over_f);
    Series dphi = derive(phi);
    return Phi{std::move(phi), std::move(dphi)};
}

Triangle central_direct(const RiordanArray& a, Shift s, int n_rows) {
    if (n_rows < 1) {
        throw UsageError("request at least one row");
    }
    const int need = 2 * n_rows - 1 + s.s();
    if (need > a.order()) {
        throw PrecisionError("central triangle with " + std::to_string(n_rows) +
                             " rows at shift " + std::to_string(s.s()) +
                             " needs series order at least " +
                             std::to_string(need) + ", have " +
                             std::to_string(a.order()));
    }
    const Triangle t = triangle(a, need);
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n_rows));
    for (int n = 0; n < n_rows; ++n) {
        auto& row = rows[static_cast<size_t>(n)];
        row.reserve(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            row.push_back(t.at(2 * n + s.s(), n + k + s.s()));
        }
    }
    return Triangle(std::move(rows));
}

CentralDecomposition central_array(const RiordanArray& a, Shift s) {
    return central_array(a, s, phi_of(a));
}

CentralDecomposition central_array(const RiordanArray& a, Shift s,
                                   const Phi& p) {
    const Series f_at_phi = compose(a.ft(), p.phi);
    const Series g_at_phi = compose(a.g(), p.phi);
    const Series f_power = powi(f_at_phi, s.s() - 1);

    RiordanArray left = make_array(mul(p.dphi, f_power), shift_down(p.phi));
    RiordanArray combined = make_array(mul(mul(p.dphi, f_power), g_at_phi),
                                       mul(shift_down(p.phi), f_at_phi));

    require_same(rmul(left, a), combined,
                 "central factorization: left * base = combined");
    return CentralDecomposition{std::move(left), a, std::move(combined)};
}

CentralDecomposition bell_central(const Series& ft, Shift s) {
    const RiordanArray a = make_array(ft, ft);
    const Phi p = phi_of(a);
    CentralDecomposition dec = central_array(a, s, p);
    // With g = f the combined first component collapses to phi' * f(phi)^s.
    const Series simplified =
        mul(p.dphi, powi(compose(a.ft(), p.phi), s.s()));
    if (dec.combined.g() != simplified) {
        throw IdentityError("Bell-subgroup simplification violated");
    }
    return dec;
}

Series central_column_gf(const RiordanArray& a) {
    return central_column_gf(a, phi_of(a));
}

Series central_column_gf(const RiordanArray& a, const Phi& p) {
    return mul(p.dphi,
               div(compose(a.g(), p.phi), compose(a.ft(), p.phi)));
}

RiordanArray central_inverse(const RiordanArray& a, Shift s) {
    return rinv(central_array(a, s).combined);
}

InverseFormReport central_inverse_forms(const RiordanArray& a, Shift s) {
    const Phi p = phi_of(a);
    return central_inverse_forms(
        a, s, p, rinv(central_array(a, s, p).combined));
}

InverseFormReport central_inverse_forms(const RiordanArray& a, Shift s,
                                        const Phi& p,
                                        const RiordanArray& inverse) {
    const int n = a.order();

    const Series w = reverted_multiplier(a); // order n + 1
    const Series f_at_w = compose(a.ft(), w);
    const Series g_at_w = compose(a.g(), w);
    const Series f_power_w = powi(f_at_w, s.s() - 1);

    InverseFormReport report{};
    // multiplier of the inverse: (w/f(w)) / x = (w/x) / f(w)
    report.multiplier_matches =
        inverse.ft() == div(shift_down(w), f_at_w);

    const auto candidate_g = [&](const Series& argument) {
        const Series dphi_at = compose(p.dphi, argument);
        return div(one(n), mul(mul(dphi_at, g_at_w), f_power_w));
    };
    // reading 1: the derivative taken at the inverse multiplier w/f(w)
    const Series arg_wf = shift_up(div(shift_down(w), f_at_w));
    report.derivative_at_inverse_multiplier =
        inverse.g() == candidate_g(arg_wf);
    // reading 2: the derivative taken at x/f(x)
    const Series arg_xf = shift_up(div(one(n), a.ft()));
    report.derivative_at_x_over_f = inverse.g() == candidate_g(arg_xf);
    return report;
}

Series z_of_central(const RiordanArray& a, Shift s) {
    const Phi p = phi_of(a);
    return z_of_central(a, s, central_array(a, s, p), p);
}

Series z_of_central(const RiordanArray& a, Shift s,
                    const CentralDecomposition& dec, const Phi& p) {
    const Series z = z_sequence_gf(dec.combined);

    const int n = a.order();
    const Series w = reverted_multiplier(a);
    const Series a_gf = div(one(n), shift_down(w)); // A(x) = x/w
    const Series f_at_w = compose(a.ft(), w);
    const Series g_at_w = compose(a.g(), w);
    // m = Rev(phi * f(phi)) = w^2/x; built from w directly.
    const Series m = shift_up(mul(shift_down(w), shift_down(w)));
    const Series denom =
        mul(mul(compose(p.dphi, m), g_at_w), powi(f_at_w, s.s() - 1));
    // denom(0) = 1, so the difference below has an exactly-zero constant.
    const Series inner = sub(one(n), div(one(n), denom));
    const Series closed = mul(powi(a_gf, 2), shift_down(inner));

    if (z != closed) {
        throw IdentityError("closed form of the central Z-sequence violated");
    }
    return z;
}

Series a_of_central(const RiordanArray& a, Shift s) {
    return a_of_central(a, central_array(a, s).combined);
}

Series a_of_central(const RiordanArray& a, const RiordanArray& combined) {
    const Series a_central = a_sequence_gf(combined);
    if (a_central != powi(a_sequence_gf(a), 2)) {
        throw IdentityError("A-sequence squaring law violated");
    }
    return a_central;
}

Series product_aseq(const Series& a_outer, const Series& a_inner) {
    if (a_inner.coeff(0) == 0) {
        throw SingularDivisionError(
            "product A-sequence requires inner constant term != 0");
    }
    const Series x_over_inner = shift_up(div(one(a_inner.order()), a_inner));
    return mul(a_inner, compose(a_outer, x_over_inner));
}

RiordanArray transition_right(const RiordanArray& a, Shift s) {
    const Phi p = phi_of(a);
    const CentralDecomposition lower = central_array(a, s, p);
    const CentralDecomposition upper =
        central_array(a, Shift(s.s() + 1), p);
    return transition_right(a, p, upper.combined, rinv(lower.combined));
}

RiordanArray transition_right(const RiordanArray& a, const Phi& p,
                              const RiordanArray& at_s1,
                              const RiordanArray& at_s_inverse) {
    const RiordanArray t = rmul(at_s1, at_s_inverse);
    if (t.ft() != one(t.order()) ||
        t.g() != compose(a.ft(), p.phi)) {
        throw IdentityError("shift-raising transition (f(phi), x) violated");
    }
    return t;
}

RiordanArray transition_left(const RiordanArray& a, Shift s) {
    const Phi p = phi_of(a);
    const CentralDecomposition lower = central_array(a, s, p);
    const CentralDecomposition upper =
        central_array(a, Shift(s.s() + 1), p);
    return transition_left(a, p, lower.combined, upper.combined,
                           rinv(lower.combined));
}

RiordanArray transition_left(const RiordanArray& a, const Phi& p,
                             const RiordanArray& at_s,
                             const RiordanArray& at_s1,
                             const RiordanArray& at_s_inverse) {
    const RiordanArray t = rmul(at_s_inverse, at_s1);

    // expected first component: x / phi(Rev(phi * f(phi)))
    const Series m_bar = revert(shift_up(at_s.ft())); // Rev(phi f(phi))
    const Series phi_at = compose(p.phi, m_bar);
    const Series expected = div(one(a.order()), shift_down(phi_at));
    if (t.ft() != one(t.order()) || t.g() != expected) {
        throw IdentityError("left transition x/phi(Rev(phi f(phi))) violated");
    }
    return t;
}

RiordanArray conjugation(const RiordanArray& a) {
    const Phi p = phi_of(a);
    return conjugation(a, p, central_array(a, Shift(0), p).combined,
                       central_array(a, Shift(1), p).combined);
}

RiordanArray conjugation(const RiordanArray& a, const Phi& p,
                         const RiordanArray& at_s0,
                         const RiordanArray& at_s1) {
    const RiordanArray c0_inv = rinv(at_s0);
    const RiordanArray sandwich = rmul(rmul(c0_inv, at_s1), c0_inv);

    const Series f_at_phi = compose(a.ft(), p.phi);
    const RiordanArray w = make_array(
        mul(p.dphi, div(compose(a.g(), p.phi), mul(f_at_phi, f_at_phi))),
        mul(shift_down(p.phi), f_at_phi));
    require_same(sandwich, rinv(w),
                 "conjugation: sandwich equals the inverse of "
                 "(phi' g(phi)/f(phi)^2, phi f(phi))");
    return sandwich;
}

} // namespace riordan
