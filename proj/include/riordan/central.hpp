#pragma once

#include "riordan/array.hpp"

namespace riordan {

// Non-negative shift selecting the diagonal family a(2n+s, n+k+s) of an
// array: s = 0 reads the even rows through their central column, s = 1 the
// odd rows, and so on. Some sources label the same triangles with r = s + 1;
// the command-line front end accepts that labeling as an alias.
class Shift {
public:
    explicit Shift(int s) : s_(s) {
        if (s < 0) {
            throw UsageError("shift must be non-negative");
        }
    }
    int s() const { return s_; }

private:
    int s_;
};

// phi = Rev(x/f), the series solving phi = x * f(phi), with phi(0) = 0 and
// phi'(0) = 1, together with its derivative. phi is certified one
// coefficient past the array order (the leading zero of x/f is exact);
// dphi is certified at the array order.
struct Phi {
    Series phi;
    Series dphi;
};

Phi phi_of(const RiordanArray& a);

// Brute-force extraction: row n is a(2n+s, n+s) .. a(2n+s, 2n+s), read
// directly off the ordinary triangle. This is the reference oracle the
// factorized construction is measured against. Requires certified order at
// least 2*n_rows - 1 + s.
Triangle central_direct(const RiordanArray& a, Shift s, int n_rows);

// A shifted central triangle in factorized form: left * base = combined,
// with left = (phi' * f(phi)^(s-1), phi) and
// combined = (phi' * g(phi) * f(phi)^(s-1), phi * f(phi)).
// The product identity is asserted at construction; the equality of
// combined's triangle with central_direct is the module's defining property,
// exercised per-array by the verification suite.
struct CentralDecomposition {
    RiordanArray left;
    RiordanArray base;
    RiordanArray combined;
};

CentralDecomposition central_array(const RiordanArray& a, Shift s);

// As above with a precomputed phi_of(a), so a caller sweeping many shifts
// of one array pays for the reversion once.
CentralDecomposition central_array(const RiordanArray& a, Shift s,
                                   const Phi& phi);

// central_array of the Bell-subgroup array (f, x*f); additionally asserts
// the simplified first component phi' * f(phi)^s of the combined array.
CentralDecomposition bell_central(const Series& ft, Shift s);

// Generating function of the central column a(2n, n): phi' * g(phi) / f(phi).
Series central_column_gf(const RiordanArray& a);
Series central_column_gf(const RiordanArray& a, const Phi& phi);

// Group inverse of the combined array. rinv is the source of truth; the
// closed-form candidates are evaluated by central_inverse_forms.
RiordanArray central_inverse(const RiordanArray& a, Shift s);

// Agreement between rinv(combined) and its closed-form description
// (1 / (phi'(ARG) * g(w) * f(w)^(s-1)), w/f(w)) with w = Rev(x*f).
// The derivative's argument ARG admits two plausible readings — w/f(w) and
// x/f(x) — which cannot both be right; the group inverse arbitrates, and the
// verification suite records which reading holds.
struct InverseFormReport {
    bool multiplier_matches;
    bool derivative_at_inverse_multiplier; // ARG = w/f(w)
    bool derivative_at_x_over_f;           // ARG = x/f(x)
};

InverseFormReport central_inverse_forms(const RiordanArray& a, Shift s);

// As above with precomputed phi_of(a) and the group inverse of the combined
// array at this shift (i.e. rinv(central_array(a, s).combined)).
InverseFormReport central_inverse_forms(const RiordanArray& a, Shift s,
                                        const Phi& phi,
                                        const RiordanArray& inverse);

// Z-sequence of the combined array, cross-checked against the closed form
// (A(x)^2/x) * (1 - 1/(phi'(m) * g(w) * f(w)^(s-1))) with w = Rev(x*f) and
// m = w^2/x. A mismatch raises IdentityError.
Series z_of_central(const RiordanArray& a, Shift s);

// As above with precomputed phi_of(a) and central_array(a, s).
Series z_of_central(const RiordanArray& a, Shift s,
                    const CentralDecomposition& dec, const Phi& phi);

// A-sequence of the combined array; asserts the squaring law: it equals
// a_sequence_gf(a)^2 for every shift. A mismatch raises IdentityError.
Series a_of_central(const RiordanArray& a, Shift s);

// As above for a precomputed combined array of `a` at any shift.
Series a_of_central(const RiordanArray& a, const RiordanArray& combined);

// A-sequence of a product of two arrays, from the factors' A-sequences
// alone: inner(x) * outer(x/inner(x)), where `outer` belongs to the left
// factor and `inner` to the right. Requires inner(0) != 0.
Series product_aseq(const Series& a_outer, const Series& a_inner);

// c(A; s+1) * c(A; s)^{-1}. Asserts the result is (f(phi), x): multiplier
// exactly x and first component f(phi), the same series for every s.
RiordanArray transition_right(const RiordanArray& a, Shift s);

// As above with precomputed phi_of(a), the combined array at shift s+1, and
// the group inverse of the combined array at shift s.
RiordanArray transition_right(const RiordanArray& a, const Phi& phi,
                              const RiordanArray& at_s1,
                              const RiordanArray& at_s_inverse);

// c(A; s)^{-1} * c(A; s+1). Asserts the result is
// (x / phi(Rev(phi * f(phi))), x).
RiordanArray transition_left(const RiordanArray& a, Shift s);

// As above with precomputed phi_of(a), the combined arrays at shifts s and
// s+1, and the group inverse of the one at shift s.
RiordanArray transition_left(const RiordanArray& a, const Phi& phi,
                             const RiordanArray& at_s,
                             const RiordanArray& at_s1,
                             const RiordanArray& at_s_inverse);

// The sandwich c(A;0)^{-1} * c(A;1) * c(A;0)^{-1}; asserts it equals the
// group inverse of W = (phi' * g(phi) / f(phi)^2, phi * f(phi)) and returns
// the sandwich. A mismatch raises IdentityError.
RiordanArray conjugation(const RiordanArray& a);

// As above with precomputed phi_of(a) and the combined arrays at shifts 0
// and 1.
RiordanArray conjugation(const RiordanArray& a, const Phi& phi,
                         const RiordanArray& at_s0,
                         const RiordanArray& at_s1);

} // namespace riordan
