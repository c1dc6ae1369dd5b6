// Shared helpers and independent oracles for the test suites. Everything
// here recomputes results from definitions, without touching the library
// code paths under test.
#pragma once

#include <algorithm>
#include <vector>

#include "positroid/bits.hpp"
#include "positroid/matroid.hpp"

namespace testutil {

using positroid::Mask;

inline Mask ms(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= positroid::element_bit(e);
    return m;
}

inline std::vector<Mask> basis_list(std::initializer_list<std::initializer_list<int>> bs) {
    std::vector<Mask> out;
    for (auto b : bs) out.push_back(ms(b));
    std::sort(out.begin(), out.end());
    return out;
}

// U_{1,{1,2}} (+) U_{1,{3,4}} on [4].
inline positroid::Matroid nested_blocks_sum() {
    return positroid::Matroid::validate(4, basis_list({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

// U_{1,{1,3}} (+) U_{1,{2,4}} on [4]: the crossing direct sum.
inline positroid::Matroid crossing_sum() {
    return positroid::Matroid::validate(4, basis_list({{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
}

// Oracle: rank by maximal independent subset, where independence means
// being contained in some basis (straight from the definitions).
inline int rank_oracle(const positroid::Matroid& m, Mask a) {
    int best = 0;
    for (Mask s : positroid::all_submasks(a)) {
        bool independent = false;
        for (Mask b : m.bases())
            if ((s & ~b) == 0) {
                independent = true;
                break;
            }
        if (independent) best = std::max(best, positroid::popcount(s));
    }
    return best;
}

// Oracle: circuits = dependent sets all of whose proper subsets are
// independent, by direct enumeration.
inline std::vector<Mask> circuits_oracle(const positroid::Matroid& m) {
    std::vector<Mask> out;
    for (Mask s : positroid::all_submasks(m.ground())) {
        if (s == 0 || rank_oracle(m, s) == positroid::popcount(s)) continue;
        bool minimal = true;
        Mask sub = s;
        while (sub && minimal) {
            const Mask without = s & ~(sub & -sub);
            sub &= sub - 1;
            if (rank_oracle(m, without) < positroid::popcount(without)) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
