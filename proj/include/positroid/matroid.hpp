// Matroids on ordered ground sets, represented by their basis families.
// A matroid may live on a ground set S inside an ambient [n]; the ambient
// size is kept so the cyclic order stays well defined for minors.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "positroid/bits.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// Cyclic interval [lo,hi] of [n]; wraps around n when hi < lo.
struct CyclicInterval {
    int n;
    int lo;
    int hi;

    bool contains(int e) const {
        if (lo <= hi) return lo <= e && e <= hi;
        return e >= lo || e <= hi;
    }
    Mask mask() const;
};

class Matroid {
  public:
    // Runs the exhaustive basis exchange check; throws empty_basis_set,
    // unequal_basis_sizes or exchange_violation (with witness).
    static Matroid validate(int n, Mask ground, std::vector<Mask> bases);
    static Matroid validate(int n, std::vector<Mask> bases);

    // Fast path for callers that guarantee the exchange axiom themselves
    // (the enumerator, minors of validated matroids).
    static Matroid unchecked(int n, Mask ground, std::vector<Mask> bases);

    int n() const { return n_; }
    Mask ground() const { return ground_; }
    int rank() const { return rank_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask b) const;

    // Loops = elements of the ground set lying in no basis.
    Mask loops() const;
    // Coloops = elements lying in every basis.
    Mask coloops() const;

    bool operator==(const Matroid& o) const = default;

  private:
    Matroid(int n, Mask ground, int rank, std::vector<Mask> bases)
        : n_(n), ground_(ground), rank_(rank), bases_(std::move(bases)) {}

    int n_ = 0;
    Mask ground_ = 0;
    int rank_ = 0;
    std::vector<Mask> bases_;  // sorted ascending as integers
};

// Largest independent subset of A, equivalently max |B & A| over bases.
int rank(const Matroid& m, Mask a);

std::vector<Mask> independent_sets(const Matroid& m);

// Inclusion-minimal dependent subsets, by increasing cardinality.
std::vector<Mask> circuits(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);

// Largest superset of A with the same rank.
Mask closure(const Matroid& m, Mask a);

Matroid dual(const Matroid& m);
Matroid restriction(const Matroid& m, Mask s);
Matroid contraction(const Matroid& m, Mask t);
Matroid direct_sum(const Matroid& m, const Matroid& other);

// Ground set partition under the shared-circuit equivalence; blocks are
// returned sorted by smallest element. Loops and coloops are singletons.
std::vector<Mask> connected_components(const Matroid& m);
bool is_connected(const Matroid& m);

// |ground| - #components: dimension of the basis polytope.
int polytope_dim(const Matroid& m);

// The matroid of the polytope face maximizing w: direct sum of the slab
// minors (M|A_i)/A_{i-1} along the flag of descending weight levels.
Matroid face_matroid(const Matroid& m, const std::vector<Rational>& w);

// Order-preserving relabel of the ground set onto [#ground]; returns the
// matroid together with old labels indexed by new ones.
std::pair<Matroid, std::vector<int>> reindexed(const Matroid& m);

Matroid uniform_matroid(int n, int k);

}  // namespace positroid
