#pragma once

#include <vector>

#include "riordan/series.hpp"

namespace riordan {

// A proper Riordan array A = (g(x), x*f(x)), stored as the unit series g and
// f: entry (n, k) is [x^n] g(x) * (x*f(x))^k. Both components must have
// constant term exactly 1 (the standing normalization; arrays with other
// units are rejected, not rescaled), and they are truncated to a common
// certified order at construction.
class RiordanArray {
public:
    RiordanArray(Series g, Series ft);

    const Series& g() const { return g_; }
    const Series& ft() const { return ft_; }
    int order() const { return g_.order(); }

    // x*f(x); certified one coefficient past order() because the prepended
    // zero is exact.
    Series multiplier() const { return shift_up(ft_); }

private:
    Series g_, ft_;
};

RiordanArray make_array(Series g, Series ft);

// a_{n,k} = [x^n] g (x f)^k; entries with k > n are 0 by convention.
// n must lie below the certified order.
Rational entry(const RiordanArray& a, int n, int k);

// A finite lower-triangular matrix: row n holds entries (n, 0) .. (n, n).
class Triangle {
public:
    explicit Triangle(std::vector<std::vector<Rational>> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    const Rational& at(int n, int k) const;
    const std::vector<Rational>& row(int n) const;
    const std::vector<std::vector<Rational>>& data() const { return rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

bool operator==(const Triangle& a, const Triangle& b);
inline bool operator!=(const Triangle& a, const Triangle& b) { return !(a == b); }

// Rows 0 .. n_rows-1 of the array. n_rows may not exceed the certified order.
Triangle triangle(const RiordanArray& a, int n_rows);

// Exact product / inverse of finite lower-triangular matrices. The inverse
// requires nonzero diagonal entries.
Triangle tri_mul(const Triangle& a, const Triangle& b);
Triangle tri_inverse(const Triangle& t);

// Group product: (g, xf) . (u, xv) = (g * u(xf), xf * v(xf)).
RiordanArray rmul(const RiordanArray& m, const RiordanArray& n);

// Group inverse: (1/g(w), w) with w the compositional inverse of x*f(x).
// The result certifies the same order as the input.
RiordanArray rinv(const RiordanArray& m);

// A(x) = x / Rev(x*f(x)): the series whose coefficients steer every
// column-to-column recurrence d(n+1, k+1) = sum_j a_j d(n, k+j).
Series a_sequence_gf(const RiordanArray& m);

// Z(x) = (1 - 1/g(w)) / w with w = Rev(x*f(x)): the series steering the
// column-0 recurrence d(n+1, 0) = sum_j z_j d(n, j). Certified to one
// coefficient less than the array order. The zero series (degenerate, no
// usable recurrence) results when g = 1.
Series z_sequence_gf(const RiordanArray& m);

// A finite lower-Hessenberg matrix: row n holds entries (n, 0) .. (n, n+1).
// For a Riordan source, column 0 is the Z-sequence, column 1 the A-sequence,
// and the rows are Toeplitz right of column 0.
class ProductionMatrix {
public:
    explicit ProductionMatrix(std::vector<std::vector<Rational>> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    const Rational& at(int n, int j) const;
    const std::vector<std::vector<Rational>>& data() const { return rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

bool operator==(const ProductionMatrix& a, const ProductionMatrix& b);
inline bool operator!=(const ProductionMatrix& a, const ProductionMatrix& b) {
    return !(a == b);
}

// The matrix P with row(n+1) of the array = row(n) . P. Computed two
// independent ways — finite matrix algebra on the truncated triangle, and
// assembly from the Z- and A-sequences — and cross-checked; a disagreement
// raises ConsistencyError. Requires n_rows + 1 <= certified order.
ProductionMatrix production_matrix(const RiordanArray& m, int n_rows);

// The array induced by a production matrix: row 0 is (1, 0, 0, ...) and each
// following row is the previous row times P. Requires p.rows() >= n_rows - 1.
Triangle from_production(const ProductionMatrix& p, int n_rows);

} // namespace riordan
