// The specialization order on positively oriented matroids of fixed rank,
// with its bottom element adjoined, plus the basis-containment order it is
// checked against.
#pragma once

#include <vector>

#include "positroid/chirotope.hpp"
#include "positroid/matroid.hpp"
#include "positroid/poset.hpp"

namespace positroid {

// chi specializes to weaker iff they agree on the support of weaker, up
// to a global sign flip. Throws shape_mismatch on differing (n, d).
bool specializes(const Chirotope& chi, const Chirotope& weaker);

struct MacphersonianPlus {
    int k = 0;
    int n = 0;
    // One canonical all-plus chirotope per positively orientable matroid;
    // index i in the poset is element i+1 (0 is the adjoined bottom).
    std::vector<Chirotope> elements;
    std::vector<Matroid> matroids;
    Poset poset;  // specialization order

    // The basis-containment relation on the same elements (weaker <= chi
    // iff bases(weaker) is contained in bases(chi)); same indexing as the
    // poset, bottom included.
    bool containment_leq(int x, int y) const;
    bool orders_coincide() const;
};

MacphersonianPlus build_macphersonian_plus(int k, int n);

// The literal reading where every positively orientable chirotope (up to
// global sign) is its own element, not just canonical representatives;
// used to compare the two readings, n <= 5 only.
MacphersonianPlus build_macphersonian_plus_reorientation_closed(int k, int n);

}  // namespace positroid
