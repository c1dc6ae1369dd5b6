#include <set>

#include "doctest.h"
#include "positroid/enumerate.hpp"
#include "positroid/positroid.hpp"
#include "test_helpers.hpp"

using namespace positroid;
using testutil::ms;

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("tiny layers by direct listing") {
    const auto m21 = enumerate_matroids(2, 1);
    REQUIRE(m21.size() == 3);
    std::set<std::vector<Mask>, std::less<>> seen;
    for (const Matroid& m : m21) seen.insert(m.bases());
    CHECK(seen.count({ms({1})}) == 1);
    CHECK(seen.count({ms({2})}) == 1);
    CHECK(seen.count({ms({1}), ms({2})}) == 1);

    for (int n = 0; n <= 5; ++n) CHECK(enumerate_matroids(n, 0).size() == 1);
    CHECK(enumerate_matroids(3, 4).empty());
}

TEST_CASE("the DFS agrees with the brute-force filter") {
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}}) {
        auto fast = enumerate_matroids(n, k);
        auto slow = enumerate_matroids_bruteforce(n, k);
        std::set<std::vector<Mask>, std::less<>> fs, ss;
        for (const Matroid& m : fast) fs.insert(m.bases());
        for (const Matroid& m : slow) ss.insert(m.bases());
        CHECK(fs == ss);
        CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("every enumerated family passes the exchange validator, each once") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            std::set<std::vector<Mask>, std::less<>> seen;
            for (const Matroid& m : enumerate_matroids(n, k)) {
                CHECK_NOTHROW(Matroid::validate(n, m.bases()));
                CHECK(seen.insert(m.bases()).second);
            }
        }
}

TEST_CASE("positroid layers") {
    const auto p42 = enumerate_positroids(4, 2);
    bool has_uniform = false, has_crossing = false;
    for (const Matroid& m : p42) {
        has_uniform = has_uniform || m == uniform_matroid(4, 2);
        has_crossing = has_crossing || m == testutil::crossing_sum();
    }
    CHECK(has_uniform);
    CHECK(!has_crossing);

    // Rank-1 positroids = nonempty sets of non-loops.
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_positroids(n, 1).size() == (1u << n) - 1);
}

TEST_CASE("positroid counts match the decorated permutation oracle") {
    const long long expected[] = {1, 2, 5, 16, 65};  // n = 0..4, frozen
    for (int n = 0; n <= 4; ++n) {
        long long total = 0;
        for (int k = 0; k <= n; ++k)
            total += static_cast<long long>(enumerate_positroids(n, k).size());
        CHECK(total == expected[n]);
        CHECK(total == decorated_permutation_count(n));
    }
}

TEST_CASE("pom layers coincide with positroid layers") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto poms = enumerate_pom_matroids(n, k);
            const auto pos = enumerate_positroids(n, k);
            REQUIRE(poms.size() == pos.size());
            for (std::size_t i = 0; i < poms.size(); ++i)
                CHECK(poms[i] == pos[i]);
        }
}

TEST_CASE("chirotope enumeration") {
    // Rank 1 on [3]: any nonzero sign vector, canonicalized: (3^3 - 1)/2.
    CHECK(enumerate_chirotopes(3, 1).size() == 13);
    // Single basis: only the all-plus map.
    CHECK(enumerate_chirotopes(2, 2).size() == 1);
    CHECK(enumerate_chirotopes(0, 0).size() == 1);

    std::set<std::vector<std::int8_t>, std::less<>> seen;
    for (const Chirotope& chi : enumerate_chirotopes(4, 2)) {
        CHECK(chi.n() == 4);
        CHECK(chi.d() == 2);
        CHECK(seen.insert(chi.signs()).second);  // distinct canonical forms
        CHECK_NOTHROW(Chirotope::validated(4, 2, chi.signs()));
    }
}

TEST_SUITE_END();
