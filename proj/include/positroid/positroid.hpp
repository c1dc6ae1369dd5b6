// Positroid decision procedures: cyclic interval rank bounds, non-crossing
// decompositions, the circuit/cocircuit criterion, circularity, and the
// all-plus chirotope route. All of them operate on matroids carrying the
// full ground set [n]; reindex minors first.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "positroid/chirotope.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

struct PositroidVerdict {
    bool positive = false;
    // When negative: a k-subset satisfying every cyclic interval rank bound
    // without being a basis.
    std::optional<Mask> certificate;
};

struct PartitionCheck {
    bool noncrossing = false;
    std::vector<Mask> blocks;
    std::optional<std::pair<Mask, Mask>> crossing_witness;
};

struct DaSilvaCheck {
    bool ok = false;
    // When failing: a disjoint crossing circuit/cocircuit pair.
    std::optional<std::pair<Mask, Mask>> witness;
};

// Two disjoint subsets cross iff the cyclic sequence of their elements
// alternates at least four times. Throws not_disjoint.
bool is_noncrossing(Mask t, Mask u, int n);

// Oracle formulation: some cyclic interval contains t and misses u.
bool is_noncrossing_by_intervals(Mask t, Mask u, int n);

PartitionCheck component_partition_check(const Matroid& m);

// Decides positroid-ness by sweeping all k-subsets against the cyclic
// interval rank bounds a_[i,j] = r([i,j]); bases always satisfy the
// bounds, so the decision is whether any non-basis sneaks under all of
// them. The sweep is sharded over subsets with OpenMP; the serial
// reference is kept for testing. Certificates are colex-minimal.
PositroidVerdict is_positroid(const Matroid& m);
PositroidVerdict is_positroid_serial(const Matroid& m);

// I_a = lexicographically minimal basis in the rotated order a, a+1, ...
std::vector<Mask> grassmann_necklace(const Matroid& m);

// Independent route: positroid iff every k-subset Gale-dominating I_a in
// every rotated order a is a basis.
PositroidVerdict is_positroid_gale(const Matroid& m);

// Every disjoint circuit/cocircuit pair must be non-crossing.
DaSilvaCheck da_silva_criterion(const Matroid& m);

// Every circuit of rank below r(M) must span a cyclic interval.
bool is_circular(const Matroid& m);

// The all-plus sign map on the bases, if it is a valid chirotope; its
// existence is equivalent to M underlying a positively oriented matroid.
std::optional<Chirotope> indicator_chirotope(const Matroid& m,
                                             GpViolation* witness = nullptr);

}  // namespace positroid
