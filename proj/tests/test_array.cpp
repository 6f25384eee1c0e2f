#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "riordan/array.hpp"

using namespace riordan;

namespace {

Series catalan_series(int order) {
    // c(0) = 1, c(n) = sum c(i) c(n-1-i): kept independent of the series
    // kernel so the fixture does not rely on the operations under test.
    std::vector<Rational> c(static_cast<size_t>(order));
    c[0] = 1;
    for (int n = 1; n < order; ++n) {
        Rational acc(0);
        for (int i = 0; i < n; ++i) {
            acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
        }
        c[static_cast<size_t>(n)] = acc;
    }
    return Series(std::move(c));
}

RiordanArray pascal(int order) {
    return make_array(rational_function({1}, {1, -1}, order),
                      rational_function({1}, {1, -1}, order));
}

RiordanArray delannoy(int order) {
    return make_array(rational_function({1}, {1, -1}, order),
                      rational_function({1, 1}, {1, -1}, order));
}

RiordanArray catalan_bell(int order) {
    const Series c = catalan_series(order);
    return make_array(c, c);
}

RiordanArray identity_array(int order) {
    return make_array(Series::constant(1, order), Series::constant(1, order));
}

std::vector<long> ints(const std::vector<Rational>& row) {
    std::vector<long> out;
    out.reserve(row.size());
    for (const auto& q : row) {
        out.push_back(to_integer(q).get_si());
    }
    return out;
}

RiordanArray random_array(std::mt19937_64& rng, int max_coeff, int order) {
    std::uniform_int_distribution<long> dist(-max_coeff, max_coeff);
    std::vector<long> gc(5), fc(5);
    for (auto& v : gc) {
        v = dist(rng);
    }
    for (auto& v : fc) {
        v = dist(rng);
    }
    gc[0] = 1;
    fc[0] = 1;
    return make_array(polynomial(gc, order), polynomial(fc, order));
}

} // namespace

TEST_CASE("construction enforces unit constant terms and a common order") {
    CHECK_THROWS_AS(make_array(polynomial({2}, 4), Series::constant(1, 4)),
                    NormalizationError);
    CHECK_THROWS_AS(make_array(Series::constant(1, 4), polynomial({0, 1}, 4)),
                    NormalizationError);
    const RiordanArray a = make_array(rational_function({1}, {1, -1}, 7),
                                      Series::constant(1, 4));
    CHECK(a.order() == 4);
    CHECK(a.g().order() == 4);
    CHECK(a.multiplier().order() == 5);
    CHECK(a.multiplier().coeff(0) == 0);
}

TEST_CASE("entries are coefficient extractions") {
    CHECK(entry(delannoy(6), 4, 2) == 13);
    CHECK(entry(pascal(6), 4, 2) == 6);
    CHECK(entry(catalan_bell(6), 3, 1) == 5);
    CHECK(entry(pascal(6), 2, 5) == 0); // above the diagonal
    CHECK_THROWS_AS(entry(pascal(6), 6, 0), PrecisionError);
    CHECK_THROWS_AS(entry(pascal(6), -1, 0), UsageError);
}

TEST_CASE("triangles reproduce the classical arrays") {
    const Triangle d = triangle(delannoy(8), 6);
    CHECK(ints(d.row(3)) == std::vector<long>{1, 5, 5, 1});
    CHECK(ints(d.row(4)) == std::vector<long>{1, 7, 13, 7, 1});
    CHECK(ints(d.row(5)) == std::vector<long>{1, 9, 25, 25, 9, 1});

    const Triangle c = triangle(catalan_bell(8), 6);
    CHECK(ints(c.row(4)) == std::vector<long>{14, 14, 9, 4, 1});
    CHECK(ints(c.row(5)) == std::vector<long>{42, 42, 28, 14, 5, 1});

    const Triangle id = triangle(identity_array(5), 5);
    for (int n = 0; n < 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(id.at(n, k) == (n == k ? 1 : 0));
        }
    }

    CHECK_THROWS_AS(triangle(pascal(4), 5), PrecisionError);
}

TEST_CASE("triangle entries agree with single-entry extraction") {
    const RiordanArray a = delannoy(7);
    const Triangle t = triangle(a, 7);
    for (int n = 0; n < 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(t.at(n, k) == entry(a, n, k));
        }
    }
}

TEST_CASE("group product matches both the closed form and matrix algebra") {
    const RiordanArray p2 = rmul(pascal(9), pascal(9));
    CHECK(p2.g() == rational_function({1}, {1, -2}, 9));
    CHECK(p2.ft() == rational_function({1}, {1, -2}, 9));

    const RiordanArray m = delannoy(9);
    CHECK(triangle(rmul(m, identity_array(9)), 9) == triangle(m, 9));
    CHECK(triangle(rmul(identity_array(9), m), 9) == triangle(m, 9));

    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        const RiordanArray a = random_array(rng, 4, 8);
        const RiordanArray b = random_array(rng, 4, 8);
        CHECK(triangle(rmul(a, b), 8) ==
              tri_mul(triangle(a, 8), triangle(b, 8)));
    }
}

TEST_CASE("group inverse") {
    const RiordanArray ip = rinv(pascal(9));
    CHECK(ip.g() == rational_function({1}, {1, 1}, 9));
    CHECK(ip.ft() == rational_function({1}, {1, 1}, 9));
    CHECK(rinv(identity_array(6)).g() == Series::constant(1, 6));

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        const RiordanArray a = random_array(rng, 4, 9);
        const RiordanArray prod = rmul(a, rinv(a));
        CHECK(prod.g() == Series::constant(1, 9));
        CHECK(prod.ft() == Series::constant(1, 9));
        // matrix-level: triangle of the inverse is the inverse triangle
        CHECK(triangle(rinv(a), 9) == tri_inverse(triangle(a, 9)));
    }
}

TEST_CASE("group axioms on random triples") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        const RiordanArray a = random_array(rng, 3, 8);
        const RiordanArray b = random_array(rng, 3, 8);
        const RiordanArray c = random_array(rng, 3, 8);
        const RiordanArray left = rmul(rmul(a, b), c);
        const RiordanArray right = rmul(a, rmul(b, c));
        CHECK(left.g() == right.g());
        CHECK(left.ft() == right.ft());
        const RiordanArray inv_prod = rinv(rmul(a, b));
        const RiordanArray prod_inv = rmul(rinv(b), rinv(a));
        CHECK(inv_prod.g() == prod_inv.g());
        CHECK(inv_prod.ft() == prod_inv.ft());
    }
}

TEST_CASE("A-sequences") {
    CHECK(a_sequence_gf(pascal(8)) == polynomial({1, 1}, 8));
    CHECK(a_sequence_gf(catalan_bell(8)) == rational_function({1}, {1, -1}, 8));
    CHECK(a_sequence_gf(identity_array(8)) == Series::constant(1, 8));
}

TEST_CASE("Z-sequences") {
    CHECK(z_sequence_gf(catalan_bell(8)) == rational_function({1}, {1, -1}, 7));
    CHECK(z_sequence_gf(pascal(8)) == Series::constant(1, 7));
    CHECK(z_sequence_gf(identity_array(8)).is_zero()); // degenerate
    CHECK(z_sequence_gf(pascal(8)).order() == 7);
}

TEST_CASE("row recurrences driven by the A- and Z-sequences") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        const RiordanArray a = random_array(rng, 4, 10);
        const Triangle t = triangle(a, 10);
        const Series as = a_sequence_gf(a);
        const Series zs = z_sequence_gf(a);
        for (int n = 0; n + 1 < 10; ++n) {
            for (int k = 0; k < n + 1; ++k) {
                Rational acc(0);
                for (int j = 0; k + j <= n; ++j) {
                    acc += as.coeff(j) * t.at(n, k + j);
                }
                CHECK(t.at(n + 1, k + 1) == acc);
            }
            Rational acc0(0);
            for (int j = 0; j <= n && j < zs.order(); ++j) {
                acc0 += zs.coeff(j) * t.at(n, j);
            }
            CHECK(t.at(n + 1, 0) == acc0);
        }
    }
}

TEST_CASE("production matrices: dual-route construction") {
    const ProductionMatrix pc = production_matrix(catalan_bell(8), 5);
    for (int n = 0; n < 5; ++n) {
        for (int j = 0; j <= n + 1; ++j) {
            CHECK(pc.at(n, j) == 1);
        }
    }
    const ProductionMatrix pid = production_matrix(identity_array(8), 4);
    for (int n = 0; n < 4; ++n) {
        for (int j = 0; j <= n + 1; ++j) {
            CHECK(pid.at(n, j) == (j == n + 1 ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(production_matrix(pascal(5), 5), PrecisionError);

    // Toeplitz shape right of column 0
    const ProductionMatrix pd = production_matrix(delannoy(9), 6);
    for (int n = 1; n < 6; ++n) {
        for (int j = 2; j <= n + 1; ++j) {
            CHECK(pd.at(n, j) == pd.at(n - 1, j - 1));
        }
    }
}

TEST_CASE("a production matrix regenerates its triangle") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 10; ++trial) {
        const RiordanArray a = random_array(rng, 4, 9);
        const ProductionMatrix p = production_matrix(a, 8);
        CHECK(from_production(p, 9) == triangle(a, 9));
    }
    const ProductionMatrix zero(
        {{Rational(0), Rational(0)}, {Rational(0), Rational(0), Rational(0)}});
    const Triangle degenerate = from_production(zero, 3);
    CHECK(degenerate.at(0, 0) == 1);
    CHECK(degenerate.at(1, 0) == 0);
    CHECK(degenerate.at(2, 2) == 0);
    CHECK_THROWS_AS(from_production(zero, 5), PrecisionError);
}

TEST_CASE("shape validation of triangle and production types") {
    CHECK_THROWS_AS(Triangle({{Rational(1), Rational(2)}}), UsageError);
    CHECK_THROWS_AS(ProductionMatrix({{Rational(1)}}), UsageError);
    CHECK_THROWS_AS(tri_inverse(Triangle({{Rational(0)}})),
                    SingularDivisionError);
}
