#include <algorithm>

#include "doctest.h"
#include "positroid/chirotope.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/positroid.hpp"
#include "test_helpers.hpp"

using namespace positroid;
using testutil::ms;

namespace {

Chirotope uniform_indicator(int n, int d) {
    return Chirotope::validated(n, d, std::vector<std::int8_t>(binom(n, d), 1));
}

std::vector<std::int8_t> signs_with(int n, int d, Mask flip_to_minus) {
    std::vector<std::int8_t> s(binom(n, d), 1);
    s[colex_rank(flip_to_minus)] = -1;
    return s;
}

// Sign of an ordered tuple straight from a raw sign table.
int raw_eval(int n, int d, const std::vector<std::int8_t>& signs,
             const std::vector<int>& tuple) {
    (void)n;
    (void)d;
    Mask m = 0;
    for (int e : tuple) {
        if (contains(m, e)) return 0;
        m |= element_bit(e);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return (inversions & 1 ? -1 : 1) * signs[colex_rank(m)];
}

// Unpruned three-term oracle: every ordered quadruple of (possibly equal)
// elements against every sorted (d-2)-subset.
bool gp_holds_oracle(int n, int d, const std::vector<std::int8_t>& signs) {
    if (d < 2) return true;
    for (Mask ys : subsets_of_size(full_mask(n), d - 2)) {
        const std::vector<int> tail = elements(ys);
        auto chi = [&](int a, int b) {
            std::vector<int> tuple{a, b};
            tuple.insert(tuple.end(), tail.begin(), tail.end());
            return raw_eval(n, d, signs, tuple);
        };
        for (int v1 = 1; v1 <= n; ++v1)
            for (int v2 = 1; v2 <= n; ++v2)
                for (int v3 = 1; v3 <= n; ++v3)
                    for (int v4 = 1; v4 <= n; ++v4) {
                        const int eps = chi(v1, v2) * chi(v3, v4);
                        if (eps == 0) continue;
                        if (chi(v3, v2) * chi(v1, v4) != eps &&
                            chi(v2, v4) * chi(v1, v3) != eps)
                            return false;
                    }
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("chirotope");

TEST_CASE("eval is alternating and kills repeats") {
    const Chirotope chi = uniform_indicator(4, 2);
    CHECK(chi.eval({2, 1}) == -1);
    CHECK(chi.eval({1, 2}) == 1);
    CHECK(chi.eval({1, 1}) == 0);
    CHECK_THROWS_AS(chi.eval({1, 2, 3}), wrong_arity);

    const Chirotope chi3 = uniform_indicator(3, 2);
    CHECK(chi3.eval({3, 2}) == -1);
}

TEST_CASE("validation accepts the uniform indicator and reports violations") {
    CHECK_NOTHROW(uniform_indicator(4, 2));

    try {
        Chirotope::validated(4, 2, signs_with(4, 2, ms({1, 3})));
        FAIL("expected a three-term violation");
    } catch (const gp_violation_error& e) {
        CHECK(e.witness.v1 == 1);
        CHECK(e.witness.v2 == 2);
        CHECK(e.witness.v3 == 3);
        CHECK(e.witness.v4 == 4);
        CHECK(e.witness.ys == 0);
    }

    CHECK_THROWS_AS(Chirotope::validated(3, 2, std::vector<std::int8_t>(3, 0)),
                    all_zero);
}

TEST_CASE("pruned three-term scan agrees with the unpruned oracle") {
    // Exhaustive over all sign maps for small shapes.
    for (auto [n, d] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
        const std::int64_t m = binom(n, d);
        std::vector<std::int8_t> signs(m, 0);
        std::vector<int> digit(m, 0);
        const std::int8_t vals[3] = {0, 1, -1};
        while (true) {
            for (std::int64_t i = 0; i < m; ++i) signs[i] = vals[digit[i]];
            CHECK(find_gp_violation_serial(n, d, signs).has_value() !=
                  gp_holds_oracle(n, d, signs));
            std::int64_t pos = 0;
            while (pos < m && ++digit[pos] == 3) digit[pos++] = 0;
            if (pos == m) break;
        }
    }
    // Pseudorandom sample at (5,3).
    std::uint64_t state = 12345;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::int8_t> signs(10);
        for (auto& s : signs) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            s = static_cast<std::int8_t>(static_cast<int>((state >> 33) % 3) - 1);
        }
        CHECK(find_gp_violation_serial(5, 3, signs).has_value() !=
              gp_holds_oracle(5, 3, signs));
    }
}

TEST_CASE("underlying matroid is the support") {
    CHECK(uniform_indicator(4, 2).underlying_matroid() == uniform_matroid(4, 2));
    CHECK(reorient(uniform_indicator(4, 2), ms({2})).underlying_matroid() ==
          uniform_matroid(4, 2));
}

TEST_CASE("reorientation applies the parity formula, then canonicalizes") {
    const Chirotope chi = uniform_indicator(4, 2);
    CHECK(reorient(chi, 0) == chi);

    // Flipping {2} negates exactly the subsets through 2; the canonical
    // form is the global negation of that raw table.
    const Chirotope flipped = reorient(chi, ms({2}));
    std::vector<std::int8_t> raw(6, 1);
    for (Mask b : {ms({1, 2}), ms({2, 3}), ms({2, 4})}) raw[colex_rank(b)] = -1;
    CHECK(flipped == Chirotope::unchecked(4, 2, raw));
    CHECK(flipped.sign_of(ms({1, 3})) == -flipped.sign_of(ms({1, 2})));

    // Full-ground flip with odd rank is a global sign change only.
    const Chirotope chi3 = uniform_indicator(4, 3);
    CHECK(reorient(chi3, full_mask(4)) == chi3);

    // Involution and support preservation over every enumerated chirotope.
    for (const Chirotope& c : enumerate_chirotopes(4, 2))
        for (Mask a : {ms({1}), ms({2, 4}), full_mask(4)}) {
            CHECK(reorient(reorient(c, a), a) == c);
            CHECK(reorient(c, a).underlying_matroid() == c.underlying_matroid());
        }
}

TEST_CASE("positive reorientation by parity solve, brute force as referee") {
    CHECK(positive_reorientation(uniform_indicator(4, 2)) == Mask{0});

    const Chirotope constructed = reorient(uniform_indicator(4, 2), ms({2}));
    const auto back = positive_reorientation(constructed);
    REQUIRE(back.has_value());
    // Any valid solution must land every sign on one side.
    const Chirotope fixed = reorient(constructed, *back);
    CHECK(fixed == uniform_indicator(4, 2));

    // chi({2,3}) = -1 with all other signs +1 is not orientable either way.
    const auto signs = signs_with(4, 2, ms({2, 3}));
    const Chirotope bad = Chirotope::validated(4, 2, signs);
    CHECK(!positive_reorientation(bad).has_value());
    CHECK(!positive_reorientation_bruteforce(bad).has_value());

    for (int d = 0; d <= 4; ++d)
        for (const Chirotope& c : enumerate_chirotopes(4, d)) {
            const auto fast = positive_reorientation(c);
            const auto slow = positive_reorientation_bruteforce(c);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) {
                const Chirotope r = reorient(c, *fast);
                bool uniform_sign = true;
                int seen = 0;
                for (std::int8_t s : r.signs()) {
                    if (s == 0) continue;
                    if (seen == 0) seen = s;
                    uniform_sign = uniform_sign && s == seen;
                }
                CHECK(uniform_sign);
            }
        }
}

TEST_CASE("signed circuits of the rank-2 uniform indicator on three elements") {
    const auto scs = signed_circuits(uniform_indicator(3, 2));
    REQUIRE(scs.size() == 1);
    CHECK(scs[0].pos == ms({1, 3}));
    CHECK(scs[0].neg == ms({2}));
}

TEST_CASE("a loop is a one-element signed circuit") {
    // Rank-1 chirotope on [2] supported on {1} alone: 2 is a loop.
    std::vector<std::int8_t> signs = {1, 0};
    const auto scs = signed_circuits(Chirotope::validated(2, 1, signs));
    REQUIRE(scs.size() == 1);
    CHECK(scs[0].pos == ms({2}));
    CHECK(scs[0].neg == 0);
}

TEST_CASE("signed circuit of the parallel pair in the block direct sum") {
    // U_{1,{1,3}} (+) U_{1,{2,4}}: columns 1 and 3 are parallel, so the
    // dependency is a1 - a3 = 0 and the circuit is {1+, 3-}.
    const Chirotope a = uniform_indicator(2, 1);
    const Chirotope sum = om_direct_sum(a, ms({1, 3}), a, ms({2, 4}), 4);
    CHECK(sum.sign_of(ms({2, 3})) == -sum.sign_of(ms({1, 2})));
    const auto scs = signed_circuits(sum);
    REQUIRE(scs.size() == 2);
    CHECK(scs[0].pos == ms({1}));
    CHECK(scs[0].neg == ms({3}));
    CHECK(scs[1].pos == ms({2}));
    CHECK(scs[1].neg == ms({4}));
}

TEST_CASE("signed circuits do not depend on the basis completion") {
    for (auto [n, d] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}})
        for (const Chirotope& chi : enumerate_chirotopes(n, d)) {
            const Matroid m = chi.underlying_matroid();
            for (Mask c : circuits(m)) {
                const Mask base_part = c & ~element_bit(min_element(c));
                std::vector<SignedSet> variants;
                const int need = d - popcount(base_part);
                for (Mask comp : subsets_of_size(full_mask(n) & ~c, need))
                    if (rank(m, base_part | comp) == d)
                        variants.push_back(signed_circuit_for(chi, c, comp));
                REQUIRE(!variants.empty());
                for (const SignedSet& v : variants) CHECK(v == variants.front());
            }
        }
}

TEST_CASE("signed circuits satisfy the circuit axioms") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3},
                        std::pair{5, 2}, std::pair{5, 3}})
        for (const Chirotope& chi : enumerate_chirotopes(n, d)) {
            std::vector<SignedSet> family;
            for (const SignedSet& c : signed_circuits(chi)) {
                family.push_back(c);
                family.push_back(c.negated());
            }
            CHECK(satisfies_circuit_axioms(family));
        }
}

TEST_CASE("restriction" ) {
    const Chirotope chi = uniform_indicator(4, 2);
    CHECK(om_restriction(chi, ms({1, 2, 3})) == uniform_indicator(3, 2));
    CHECK(om_restriction(chi, full_mask(4)) == chi);

    // Rank drops when restricting the block sum to one block.
    const Chirotope sum =
        om_direct_sum(uniform_indicator(2, 1), ms({1, 3}), uniform_indicator(2, 1),
                      ms({2, 4}), 4);
    const Chirotope r = om_restriction(sum, ms({1, 3}));
    CHECK(r.d() == 1);
    CHECK(r.underlying_matroid() == uniform_matroid(2, 1));
}

TEST_CASE("restriction is independent of the completion choice") {
    for (auto [n, d] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2},
                        std::pair{5, 3}})
        for (const Chirotope& chi : enumerate_chirotopes(n, d)) {
            const Matroid m = chi.underlying_matroid();
            for (Mask keep : all_submasks(full_mask(n))) {
                const Chirotope once = om_restriction(chi, keep);
                const int dd = rank(m, keep);
                const std::vector<int> kept = elements(keep);
                for (Mask comp : subsets_of_size(full_mask(n) & ~keep, d - dd)) {
                    if (rank(m, keep | comp) != d) continue;
                    // Recompute with this completion.
                    const std::vector<int> tail = elements(comp);
                    std::vector<std::int8_t> signs(binom(popcount(keep), dd));
                    for (std::int64_t rr = 0; rr < binom(popcount(keep), dd); ++rr) {
                        std::vector<int> tuple;
                        for (int pos : elements(colex_unrank(rr, dd, popcount(keep))))
                            tuple.push_back(kept[pos - 1]);
                        tuple.insert(tuple.end(), tail.begin(), tail.end());
                        signs[rr] = static_cast<std::int8_t>(chi.eval(tuple));
                    }
                    CHECK(Chirotope::unchecked(popcount(keep), dd, signs) == once);
                }
            }
        }
}

TEST_CASE("direct sums of chirotopes") {
    const Chirotope u1 = uniform_indicator(2, 1);
    const Chirotope contiguous = om_direct_sum(u1, ms({1, 2}), u1, ms({3, 4}), 4);
    for (std::int8_t s : contiguous.signs()) CHECK(s >= 0);
    CHECK(contiguous.underlying_matroid() == testutil::nested_blocks_sum());

    const Chirotope interleaved = om_direct_sum(u1, ms({1, 3}), u1, ms({2, 4}), 4);
    CHECK(interleaved.sign_of(ms({2, 3})) == -interleaved.sign_of(ms({1, 2})));

    const Chirotope empty = Chirotope::validated(0, 0, {1});
    CHECK(om_direct_sum(uniform_indicator(3, 2), full_mask(3), empty, 0, 3) ==
          uniform_indicator(3, 2));

    CHECK_THROWS_AS(om_direct_sum(u1, ms({1, 2}), u1, ms({2, 3}), 3),
                    overlapping_ground_sets);
}

TEST_CASE("underlying matroid of a sum is the sum of underlying matroids") {
    for (const Chirotope& a : enumerate_chirotopes(2, 1))
        for (const Chirotope& b : enumerate_chirotopes(3, 1)) {
            const Chirotope sum = om_direct_sum(a, ms({1, 2}), b, ms({3, 4, 5}), 5);
            const Matroid ua = a.underlying_matroid();
            const Matroid ub = b.underlying_matroid();
            std::vector<Mask> shifted;
            for (Mask bb : ub.bases()) shifted.push_back(bb << 2);
            const Matroid expect =
                direct_sum(Matroid::unchecked(5, ms({1, 2}), ua.bases()),
                           Matroid::unchecked(5, ms({3, 4, 5}), shifted));
            CHECK(sum.underlying_matroid().bases() == expect.bases());
        }
}

TEST_CASE("connectivity routes agree") {
    CHECK(om_is_connected(uniform_indicator(4, 2)));
    CHECK(!om_is_connected(om_direct_sum(uniform_indicator(2, 1), ms({1, 2}),
                                         uniform_indicator(2, 1), ms({3, 4}), 4)));
    CHECK(om_is_connected(uniform_indicator(1, 1)));  // single coloop

    for (auto [n, d] : {std::pair{4, 2}, std::pair{5, 2}})
        for (const Chirotope& chi : enumerate_chirotopes(n, d))
            CHECK(om_is_connected(chi) == om_is_connected_via_circuits(chi));
}

TEST_CASE("rotating the ground order") {
    const Chirotope chi = uniform_indicator(3, 2);
    CHECK(rotate_order(chi, 1) == chi);

    const Chirotope rot = rotate_order(chi, 2);
    const auto a = positive_reorientation(rot);
    REQUIRE(a.has_value());
    const Chirotope fixed = reorient(rot, *a);
    bool all_plus = true;
    for (std::int8_t s : fixed.signs()) all_plus = all_plus && s == 1;
    CHECK(all_plus);

    // n single steps compose to the identity.
    Chirotope cur = uniform_indicator(5, 2);
    const Chirotope with_sign = reorient(cur, ms({2, 4}));
    cur = with_sign;
    for (int i = 0; i < 5; ++i) cur = rotate_order(cur, 2);
    CHECK(cur == with_sign);
}

TEST_SUITE_END();
