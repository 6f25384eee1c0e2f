#include "riordan/array.hpp"

#include <algorithm>
#include <string>

namespace riordan {

namespace {

Series equalized(const Series& s, int order) {
    return s.order() == order ? s : s.truncated(order);
}

} // namespace

RiordanArray::RiordanArray(Series g, Series ft)
    : g_(std::move(g)), ft_(std::move(ft)) {
    if (g_.coeff(0) != 1) {
        throw NormalizationError("array requires g(0) = 1, got " +
                                 to_string(g_.coeff(0)));
    }
    if (ft_.coeff(0) != 1) {
        throw NormalizationError("array requires f(0) = 1, got " +
                                 to_string(ft_.coeff(0)));
    }
    const int n = std::min(g_.order(), ft_.order());
    g_ = equalized(g_, n);
    ft_ = equalized(ft_, n);
}

RiordanArray make_array(Series g, Series ft) {
    return RiordanArray(std::move(g), std::move(ft));
}

Rational entry(const RiordanArray& a, int n, int k) {
    if (n < 0 || k < 0) {
        throw UsageError("negative array index");
    }
    if (n >= a.order()) {
        throw PrecisionError("entry row " + std::to_string(n) +
                             " requested, but the array certifies only " +
                             std::to_string(a.order()) + " rows");
    }
    if (k > n) {
        return Rational(0);
    }
    // [x^n] g (xf)^k = [x^(n-k)] g f^k
    return mul(a.g(), powi(a.ft(), k)).coeff(n - k);
}

Triangle::Triangle(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
    for (size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw UsageError("triangle row " + std::to_string(n) +
                             " must have " + std::to_string(n + 1) + " entries");
        }
    }
}

const Rational& Triangle::at(int n, int k) const {
    if (n < 0 || n >= rows() || k < 0 || k > n) {
        throw UsageError("triangle index out of range");
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const std::vector<Rational>& Triangle::row(int n) const {
    if (n < 0 || n >= rows()) {
        throw UsageError("triangle row out of range");
    }
    return rows_[static_cast<size_t>(n)];
}

bool operator==(const Triangle& a, const Triangle& b) {
    return a.data() == b.data();
}

Triangle triangle(const RiordanArray& a, int n_rows) {
    if (n_rows < 1) {
        throw UsageError("a triangle needs at least one row");
    }
    if (n_rows > a.order()) {
        throw PrecisionError("triangle with " + std::to_string(n_rows) +
                             " rows needs series order at least " +
                             std::to_string(n_rows) + ", have " +
                             std::to_string(a.order()));
    }
    // Column k is g * (xf)^k; build columns incrementally.
    std::vector<Series> cols;
    cols.reserve(static_cast<size_t>(n_rows));
    cols.push_back(a.g());
    const Series v = a.multiplier();
    for (int k = 1; k < n_rows; ++k) {
        cols.push_back(mul(cols.back(), v));
    }
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n_rows));
    for (int n = 0; n < n_rows; ++n) {
        rows[static_cast<size_t>(n)].reserve(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            rows[static_cast<size_t>(n)].push_back(
                cols[static_cast<size_t>(k)].coeff(n));
        }
    }
    return Triangle(std::move(rows));
}

Triangle tri_mul(const Triangle& a, const Triangle& b) {
    if (a.rows() != b.rows()) {
        throw UsageError("triangle product needs matching sizes");
    }
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) {
            Rational acc(0);
            for (int m = j; m <= i; ++m) {
                acc += a.at(i, m) * b.at(m, j);
            }
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    }
    return Triangle(std::move(rows));
}

Triangle tri_inverse(const Triangle& t) {
    std::vector<std::vector<Rational>> inv(static_cast<size_t>(t.rows()));
    for (int i = 0; i < t.rows(); ++i) {
        if (t.at(i, i) == 0) {
            throw SingularDivisionError("triangle with zero diagonal entry "
                                        "has no inverse");
        }
        inv[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1);
        inv[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            Rational(1) / t.at(i, i);
        for (int j = i - 1; j >= 0; --j) {
            Rational acc(0);
            for (int m = j; m < i; ++m) {
                acc += t.at(i, m) * inv[static_cast<size_t>(m)][static_cast<size_t>(j)];
            }
            inv[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                -acc / t.at(i, i);
        }
    }
    return Triangle(std::move(inv));
}

RiordanArray rmul(const RiordanArray& m, const RiordanArray& n) {
    const Series v = m.multiplier();
    return make_array(mul(m.g(), compose(n.g(), v)),
                      mul(m.ft(), compose(n.ft(), v)));
}

RiordanArray rinv(const RiordanArray& m) {
    const Series w = revert(m.multiplier());
    const Series g_inv =
        div(Series::constant(1, m.order()), compose(m.g(), w));
    return make_array(g_inv, shift_down(w));
}

Series a_sequence_gf(const RiordanArray& m) {
    const Series w = revert(m.multiplier());
    return div(Series::constant(1, m.order()), shift_down(w));
}

Series z_sequence_gf(const RiordanArray& m) {
    const Series w = revert(m.multiplier());
    const Series g_at_w = compose(m.g(), w);
    const Series one = Series::constant(1, g_at_w.order());
    // 1 - 1/g(w) has an exactly-zero constant term because g(0) = 1.
    const Series numer = sub(one, div(one, g_at_w));
    return div(shift_down(numer), shift_down(w));
}

ProductionMatrix::ProductionMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
    for (size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 2) {
            throw UsageError("production row " + std::to_string(n) +
                             " must have " + std::to_string(n + 2) + " entries");
        }
    }
}

const Rational& ProductionMatrix::at(int n, int j) const {
    if (n < 0 || n >= rows() || j < 0 || j > n + 1) {
        throw UsageError("production index out of range");
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
    return a.data() == b.data();
}

ProductionMatrix production_matrix(const RiordanArray& m, int n_rows) {
    if (n_rows < 1) {
        throw UsageError("a production matrix needs at least one row");
    }
    if (n_rows + 1 > m.order()) {
        throw PrecisionError("production matrix with " + std::to_string(n_rows) +
                             " rows needs series order at least " +
                             std::to_string(n_rows + 1) + ", have " +
                             std::to_string(m.order()));
    }

    // Route 1: finite matrix algebra. Row n+1 of the triangle equals row n
    // times P; forward substitution peels P off row by row.
    const Triangle t = triangle(m, n_rows + 1);
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n_rows));
    for (int n = 0; n < n_rows; ++n) {
        auto& row = rows[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>(n) + 2);
        for (int j = 0; j <= n + 1; ++j) {
            Rational acc = t.at(n + 1, j);
            for (int mm = std::max(0, j - 1); mm < n; ++mm) {
                if (j <= mm + 1) {
                    acc -= t.at(n, mm) * rows[static_cast<size_t>(mm)][static_cast<size_t>(j)];
                }
            }
            row[static_cast<size_t>(j)] = acc / t.at(n, n);
        }
    }
    ProductionMatrix direct{std::move(rows)};

    // Route 2: assemble from the Z- and A-sequences (column 0 is Z, the rest
    // of each row reads the A-sequence backwards).
    const Series zs = z_sequence_gf(m);
    const Series as = a_sequence_gf(m);
    std::vector<std::vector<Rational>> assembled(static_cast<size_t>(n_rows));
    for (int n = 0; n < n_rows; ++n) {
        auto& row = assembled[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>(n) + 2);
        row[0] = zs.coeff(n);
        for (int j = 1; j <= n + 1; ++j) {
            row[static_cast<size_t>(j)] = as.coeff(n + 1 - j);
        }
    }
    ProductionMatrix sequenced{std::move(assembled)};

    if (direct != sequenced) {
        throw ConsistencyError("production matrix routes disagree: matrix "
                               "algebra vs sequence assembly");
    }
    return direct;
}

Triangle from_production(const ProductionMatrix& p, int n_rows) {
    if (n_rows < 1) {
        throw UsageError("request at least one row");
    }
    if (p.rows() < n_rows - 1) {
        throw PrecisionError("building " + std::to_string(n_rows) +
                             " rows needs " + std::to_string(n_rows - 1) +
                             " production rows, have " +
                             std::to_string(p.rows()));
    }
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n_rows));
    rows[0] = {Rational(1)};
    for (int n = 1; n < n_rows; ++n) {
        auto& row = rows[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>(n) + 1);
        const auto& prev = rows[static_cast<size_t>(n - 1)];
        for (int j = 0; j <= n; ++j) {
            Rational acc(0);
            for (int mm = std::max(0, j - 1); mm < n; ++mm) {
                if (j <= mm + 1) {
                    acc += prev[static_cast<size_t>(mm)] * p.at(mm, j);
                }
            }
            row[static_cast<size_t>(j)] = acc;
        }
    }
    return Triangle(std::move(rows));
}

} // namespace riordan
