#include <functional>

#include "doctest.h"
#include "positroid/enumerate.hpp"
#include "positroid/matrix.hpp"
#include "positroid/positroid.hpp"
#include "test_helpers.hpp"

using namespace positroid;
using testutil::ms;

namespace {

RationalMatrix from_ints(int d, int n, std::initializer_list<long> flat) {
    RationalMatrix a(d, n);
    auto it = flat.begin();
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < n; ++c) a.at(r, c) = Rational(*it++);
    return a;
}

// Laplace cofactor expansion along the first row; the independent route
// for determinants.
Rational laplace_det(const RationalMatrix& a, std::vector<int> cols) {
    const int d = static_cast<int>(cols.size());
    if (d == 0) return Rational(1);
    std::function<Rational(std::vector<int>, std::vector<int>)> rec =
        [&](std::vector<int> rows, std::vector<int> cs) -> Rational {
        if (rows.size() == 1) return a.at(rows[0], cs[0]);
        Rational det(0);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            std::vector<int> sub_rows(rows.begin() + 1, rows.end());
            std::vector<int> sub_cols;
            for (std::size_t t = 0; t < cs.size(); ++t)
                if (t != j) sub_cols.push_back(cs[t]);
            const Rational term = a.at(rows[0], cs[j]) * rec(sub_rows, sub_cols);
            if (j % 2 == 0)
                det += term;
            else
                det -= term;
        }
        return det;
    };
    std::vector<int> rows;
    for (int r = 0; r < d; ++r) rows.push_back(r);
    return rec(rows, cols);
}

Rational laplace_minor(const RationalMatrix& a, Mask cols) {
    std::vector<int> cs;
    for (int e : elements(cols)) cs.push_back(e - 1);
    return laplace_det(a, cs);
}

std::uint64_t lcg(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
}

}  // namespace

TEST_SUITE_BEGIN("realization");

TEST_CASE("maximal minors") {
    const RationalMatrix id2 = from_ints(2, 2, {1, 0, 0, 1});
    CHECK(maximal_minor(id2, ms({1, 2})) == Rational(1));

    const RationalMatrix m23 = from_ints(2, 3, {1, 1, 1, 0, 1, 2});
    CHECK(maximal_minor(m23, ms({1, 3})) == Rational(2));
    CHECK(maximal_minor(m23, ms({1, 2})) == Rational(1));
    CHECK(maximal_minor(m23, ms({2, 3})) == Rational(1));

    const RationalMatrix rep = from_ints(2, 2, {1, 1, 2, 2});
    CHECK(maximal_minor(rep, ms({1, 2})) == Rational(0));

    CHECK_THROWS_AS(maximal_minor(m23, ms({1})), wrong_size);
}

TEST_CASE("bareiss agrees with laplace expansion on rational entries") {
    std::uint64_t state = 99;
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(lcg(state) % 4);
        const int n = d + static_cast<int>(lcg(state) % 3);
        RationalMatrix a(d, n);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < n; ++c) {
                const long num = static_cast<long>(lcg(state) % 19) - 9;
                const long den = 1 + static_cast<long>(lcg(state) % 7);
                a.at(r, c) = make_rational(num, den);
            }
        for (Mask cols : subsets_of_size(full_mask(n), d))
            CHECK(maximal_minor(a, cols) == laplace_minor(a, cols));
    }
}

TEST_CASE("chirotopes of matrices") {
    const RationalMatrix id3 = from_ints(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const Chirotope free3 = chirotope_from_matrix(id3);
    CHECK(free3.underlying_matroid() == uniform_matroid(3, 3));

    const RationalMatrix m23 = from_ints(2, 3, {1, 1, 1, 0, 1, 2});
    const Chirotope u23 = chirotope_from_matrix(m23);
    for (std::int8_t s : u23.signs()) CHECK(s == 1);

    const RationalMatrix swapped = from_ints(2, 2, {0, 1, 1, 0});
    // det = -1, canonicalized back to +1 on the single basis.
    CHECK(chirotope_from_matrix(swapped).sign_of(ms({1, 2})) == 1);
    CHECK(sign_of(maximal_minor(swapped, ms({1, 2}))) == -1);

    CHECK_THROWS_AS(chirotope_from_matrix(from_ints(1, 2, {0, 0})), rank_deficient);
}

TEST_CASE("total nonnegativity") {
    CHECK(is_totally_nonnegative(from_ints(2, 3, {1, 1, 1, 0, 1, 2})));
    CHECK(!is_totally_nonnegative(from_ints(2, 2, {0, 1, 1, 0})));
    CHECK(is_totally_nonnegative(from_ints(1, 3, {0, 2, 5})));
    CHECK(is_totally_nonnegative(from_ints(2, 2, {1, 0, -1, 1})));  // negative entry
}

TEST_CASE("matroids of matrices") {
    CHECK(matroid_of_matrix(from_ints(2, 3, {1, 1, 1, 0, 1, 2})) ==
          uniform_matroid(3, 2));
    CHECK(matroid_of_matrix(from_ints(2, 4, {1, 1, 0, 0, 0, 0, 1, 1})) ==
          testutil::nested_blocks_sum());
    CHECK(matroid_of_matrix(from_ints(2, 2, {1, 0, 0, 1})) == uniform_matroid(2, 2));
}

TEST_CASE("moment curves") {
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(2)};
    const RationalMatrix a = moment_curve_matrix(2, xs);
    CHECK(a == from_ints(2, 3, {1, 1, 1, 0, 1, 2}));
    CHECK(maximal_minor(a, ms({1, 2})) == Rational(1));
    CHECK(maximal_minor(a, ms({1, 3})) == Rational(2));
    CHECK(maximal_minor(a, ms({2, 3})) == Rational(1));

    CHECK(matroid_of_matrix(moment_curve_matrix(1, xs)) == uniform_matroid(3, 1));

    const std::vector<Rational> xs4 = {Rational(0), Rational(1), Rational(2),
                                       Rational(3)};
    const RationalMatrix c = moment_curve_matrix(3, xs4);
    for (Mask cols : subsets_of_size(full_mask(4), 3))
        CHECK(sign_of(maximal_minor(c, cols)) == 1);

    CHECK_THROWS_AS(moment_curve_matrix(2, {Rational(1), Rational(1)}),
                    not_increasing);
}

TEST_CASE("moment curve minors are positive for random rational parameters") {
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + static_cast<int>(lcg(state) % 4);
        const int n = d + static_cast<int>(lcg(state) % (9 - d));
        std::vector<Rational> xs;
        Rational cur = make_rational(static_cast<long>(lcg(state) % 7) - 3, 1);
        for (int i = 0; i < n; ++i) {
            cur += make_rational(1 + static_cast<long>(lcg(state) % 12),
                                 1 + static_cast<long>(lcg(state) % 9));
            xs.push_back(cur);
        }
        const RationalMatrix a = moment_curve_matrix(d, xs);
        for (Mask cols : subsets_of_size(full_mask(n), d))
            CHECK(sign_of(maximal_minor(a, cols)) == 1);
        CHECK(matroid_of_matrix(a) == uniform_matroid(n, d));
    }
}

TEST_CASE("matrix chirotopes always validate") {
    // Regression guard on the three-term checker itself.
    std::uint64_t state = 7;
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + static_cast<int>(lcg(state) % 3);
        const int n = d + static_cast<int>(lcg(state) % 3);
        RationalMatrix a(d, n);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < n; ++c)
                a.at(r, c) = Rational(static_cast<long>(lcg(state) % 7) - 3);
        try {
            chirotope_from_matrix(a);  // gp_violation_error would fail the case
        } catch (const rank_deficient&) {
        }
    }
}

TEST_CASE("totally nonnegative matrices realize positroids") {
    const RationalMatrix corpus[] = {
        from_ints(2, 3, {1, 1, 1, 0, 1, 2}),
        from_ints(2, 4, {1, 1, 0, 0, 0, 0, 1, 1}),
        from_ints(1, 3, {0, 1, 1}),
        from_ints(2, 2, {1, 0, -1, 1}),
        moment_curve_matrix(3, {Rational(0), Rational(1), Rational(2), Rational(3)}),
    };
    for (const RationalMatrix& a : corpus) {
        REQUIRE(is_totally_nonnegative(a));
        CHECK(is_positroid(matroid_of_matrix(a)).positive);
    }
}

TEST_CASE("realization search") {
    const auto u24 = realize_positroid_search(uniform_matroid(4, 2), 2);
    REQUIRE(u24.has_value());
    CHECK(is_totally_nonnegative(*u24));
    CHECK(matroid_of_matrix(*u24) == uniform_matroid(4, 2));

    const Matroid r1 = Matroid::validate(3, testutil::basis_list({{2}, {3}}));
    const auto row = realize_positroid_search(r1, 1);
    REQUIRE(row.has_value());
    CHECK(*row == from_ints(1, 3, {0, 1, 1}));

    const auto blocks = realize_positroid_search(testutil::nested_blocks_sum(), 1);
    REQUIRE(blocks.has_value());
    CHECK(is_totally_nonnegative(*blocks));
    CHECK(matroid_of_matrix(*blocks) == testutil::nested_blocks_sum());

    CHECK_THROWS_AS(realize_positroid_search(testutil::crossing_sum(), 1),
                    not_a_positroid);

    // The wrapping block sum needs the echelon scan.
    const Matroid wrap =
        Matroid::validate(4, testutil::basis_list({{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    const auto found = realize_positroid_search(wrap, 1);
    REQUIRE(found.has_value());
    CHECK(is_totally_nonnegative(*found));
    CHECK(matroid_of_matrix(*found) == wrap);
}

TEST_CASE("the search realizes every small positroid") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (const Matroid& m : enumerate_positroids(n, k)) {
                const auto a = realize_positroid_search(m, 2);
                REQUIRE(a.has_value());
                CHECK(is_totally_nonnegative(*a));
                CHECK(matroid_of_matrix(*a) == m);
            }
}

TEST_SUITE_END();
