#include "riordan/catalog.hpp"

#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// Catalan generating function c = 1 + x*c^2, built by the coefficient
// recurrence c_n = sum c_i c_{n-1-i} so the catalog does not depend on the
// sqrt kernel it is later used to test.
Series catalan_gf(int order) {
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

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    entries.push_back(CatalogEntry{
        "pascal",
        "(1/(1-x), x/(1-x))",
        [](int order) {
            return make_array(rational_function({1}, {1, -1}, order),
                              rational_function({1}, {1, -1}, order));
        },
        {
            {"triangle_row4", {1, 4, 6, 4, 1}, "binomial row n=4"},
            {"central_s0_col0",
             {1, 2, 6, 20, 70, 252},
             "central binomial coefficients binomial(2n, n) (A000984)"},
            {"transition_right_s0_g",
             {1, 1, 2, 5, 14},
             "first component of the shift 0 -> 1 right transition; the "
             "Catalan generating function c(x)"},
            {"transition_left_s0_g",
             {1, 1, 0, 0, 0},
             "first component of the shift 0 -> 1 left transition; the "
             "polynomial 1 + x"},
            {"a_central_s0",
             {1, 2, 1, 0, 0},
             "A-sequence generating function of the shift-0 central array; "
             "the polynomial (1 + x)^2"},
        }});

    entries.push_back(CatalogEntry{
        "delannoy",
        "(1/(1-x), x(1+x)/(1-x))",
        [](int order) {
            return make_array(rational_function({1}, {1, -1}, order),
                              rational_function({1, 1}, {1, -1}, order));
        },
        {
            {"triangle_row4",
             {1, 7, 13, 7, 1},
             "Delannoy square array read along antidiagonals (A008288)"},
            {"triangle_row5", {1, 9, 25, 25, 9, 1}, "next antidiagonal row"},
            {"central_s0",
             {1, 3, 13, 63, 321, 1683},
             "central Delannoy numbers (A001850)"},
            {"central_s0_extended",
             {1, 3, 13, 63, 321, 1683, 8989, 48639, 265729, 1462563, 8097453,
              45046719, 251595969, 1409933619, 7923848253, 44642381823,
              252055236609},
             "central column continued; the series 1/sqrt(1 - 6x + x^2)"},
            {"z_central_s0",
             {3, 4, -4, 12, -44, 180, -788, 3612},
             "Z-sequence of the shift-0 central array; the series "
             "2 + x + sqrt(1 + 6x + x^2)"},
            {"inverse_g_s0",
             {1, -3, 8, -28, 112, -484, 2200, -10364},
             "first component of the group inverse of the shift-0 central "
             "array"},
        }});

    entries.push_back(CatalogEntry{
        "catalan_bell",
        "(c, xc) with c = 1 + x*c^2",
        [](int order) {
            const Series c = catalan_gf(order);
            return make_array(c, c);
        },
        {
            {"column0", {1, 1, 2, 5, 14, 42}, "Catalan numbers (A000108)"},
            {"triangle_row5", {42, 42, 28, 14, 5, 1}, "triangle row n=5"},
            {"central_s0",
             {1, 2, 9, 48, 275, 1638, 9996, 62016},
             "published central column digits"},
            {"central_s0_extended",
             {1, 2, 9, 48, 275, 1638, 9996, 62016, 389367, 2466750},
             "central column continued"},
            {"phi",
             {0, 1, 1, 3, 12, 55, 273, 1428, 7752, 43263},
             "the series phi solving phi = x * c(phi)"},
            {"production_col0_central_s0",
             {2, 5, 10, 19, 36, 69},
             "column 0 of the production matrix of the shift-0 central "
             "array (its Z-sequence values)"},
            {"a_central_s0",
             {1, 2, 3, 4, 5, 6},
             "A-sequence generating function of the shift-0 central array; "
             "the series 1/(1-x)^2"},
        }});

    entries.push_back(CatalogEntry{
        "inv_catalan",
        "(1/c, x/c) with c = 1 + x*c^2",
        [](int order) {
            const Series inv_c =
                div(Series::constant(1, order), catalan_gf(order));
            return make_array(inv_c, inv_c);
        },
        {
            {"phi",
             {0, 1, -1, 0, 0, 0},
             "the reversion collapses to the polynomial x - x^2"},
            {"central_s0_g",
             {1, -2, 0, 0, 0},
             "first component of the shift-0 central array; the polynomial "
             "1 - 2x"},
            {"central_s0_ft",
             {1, -2, 1, 0, 0},
             "multiplier of the shift-0 central array divided by x; the "
             "polynomial (1 - x)^2"},
        }});

    entries.push_back(CatalogEntry{
        "schroeder_neg",
        "(1/(1-x), x(1-x)/(1+x))",
        [](int order) {
            return make_array(rational_function({1}, {1, -1}, order),
                              rational_function({1, -1}, {1, 1}, order));
        },
        {
            {"conjugation_column_reference",
             {1, 1, 5, 25, 129, 681},
             "published first column of the conjugated array (A002002); "
             "exact evaluation of the triple product yields "
             "conjugation_column_computed instead — see README"},
            {"conjugation_column_computed",
             {1, -1, -4, -8, -28, -112},
             "first column of the triple product computed in exact "
             "arithmetic"},
        }});

    entries.push_back(CatalogEntry{
        "identity",
        "(1, x)",
        [](int order) {
            return make_array(Series::constant(1, order),
                              Series::constant(1, order));
        },
        {}});

    return entries;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : catalog()) {
            out.push_back(e.name);
        }
        return out;
    }();
    return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw LookupError("unknown catalog array: " + name);
}

RiordanArray get(const std::string& name, int order) {
    if (order < 1) {
        throw UsageError("catalog order must be at least 1");
    }
    return catalog_entry(name).generator(order);
}

const std::vector<Reference>& references(const std::string& name) {
    return catalog_entry(name).references;
}

} // namespace riordan
