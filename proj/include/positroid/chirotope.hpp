// Oriented matroids as chirotopes: alternating sign maps on d-tuples whose
// support is a matroid and which satisfy the 3-term Grassmann-Pluecker
// sign condition. A chirotope and its global negation are the same
// oriented matroid; the stored form is canonical (the lex-smallest support
// subset carries sign +1), which makes equality and hashing bit-exact.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "positroid/errors.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// Witness for a failed 3-term sign condition: epsilon = x(v1,v2,Y)x(v3,v4,Y)
// is nonzero but neither admissible pairing matches it.
struct GpViolation {
    int v1, v2, v3, v4;
    Mask ys;
};

struct gp_violation_error : error {
    GpViolation witness;
    explicit gp_violation_error(const GpViolation& w)
        : error("Grassmann-Pluecker violation at (" + std::to_string(w.v1) + "," +
                std::to_string(w.v2) + "," + std::to_string(w.v3) + "," +
                std::to_string(w.v4) + ") with " + mask_to_string(w.ys)),
          witness(w) {}
};

// Signed subset: disjoint positive and negative parts.
struct SignedSet {
    Mask pos = 0;
    Mask neg = 0;

    Mask support() const { return pos | neg; }
    SignedSet negated() const { return {neg, pos}; }
    int sign_of(int e) const {
        if (contains(pos, e)) return 1;
        if (contains(neg, e)) return -1;
        return 0;
    }
    bool operator==(const SignedSet&) const = default;
    bool operator<(const SignedSet& o) const {
        return std::pair(pos, neg) < std::pair(o.pos, o.neg);
    }
};

class Chirotope {
  public:
    // Full validation: alternating by construction (signs are stored per
    // sorted subset), support checked to be a matroid, 3-term condition
    // checked exhaustively. Throws all_zero, support_not_matroid,
    // gp_violation_error. `signs` is indexed by colex rank of the subset.
    static Chirotope validated(int n, int d, std::vector<std::int8_t> signs);

    // Non-throwing variant; on failure optionally reports the witness.
    static std::optional<Chirotope> try_validated(int n, int d,
                                                  std::vector<std::int8_t> signs,
                                                  GpViolation* witness = nullptr);

    // For internal constructions already known to satisfy the axioms
    // (reorientations, rotations of valid chirotopes). Canonicalizes.
    static Chirotope unchecked(int n, int d, std::vector<std::int8_t> signs);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<std::int8_t>& signs() const { return signs_; }

    // Sign of a sorted d-subset.
    int sign_of(Mask subset) const { return signs_[colex_rank(subset)]; }

    // Sign of an arbitrary ordered tuple: 0 on repeats, otherwise the sign
    // of the sorting permutation times the stored sign. Throws wrong_arity.
    int eval(std::span<const int> tuple) const;
    int eval(std::initializer_list<int> tuple) const;

    Matroid underlying_matroid() const;
    Mask support_ground() const { return full_mask(n_); }

    bool operator==(const Chirotope&) const = default;

  private:
    Chirotope(int n, int d, std::vector<std::int8_t> signs)
        : n_(n), d_(d), signs_(std::move(signs)) {}
    void canonicalize();

    int n_ = 0;
    int d_ = 0;
    std::vector<std::int8_t> signs_;  // colex-indexed over d-subsets of [n]
};

// Scans for a 3-term violation; nullopt means the condition holds. The
// witness returned is the minimal one under (colex(Y), v1, v2, v3, v4), so
// serial and parallel scans agree. `find_gp_violation` shards the scan over
// Y-subsets with OpenMP; the serial version is the reference kept for tests.
std::optional<GpViolation> find_gp_violation(int n, int d,
                                             const std::vector<std::int8_t>& signs);
std::optional<GpViolation> find_gp_violation_serial(
    int n, int d, const std::vector<std::int8_t>& signs);

// Flips the sign contribution of every element of `flipped`:
// signs multiply by (-1)^|flipped & subset|.
Chirotope reorient(const Chirotope& chi, Mask flipped);

// Searches for a reorientation making every basis positive. Decided by a
// GF(2) linear solve (one parity equation per basis, both global sign
// targets); the 2^n brute-force reference is kept for testing.
std::optional<Mask> positive_reorientation(const Chirotope& chi);
std::optional<Mask> positive_reorientation_bruteforce(const Chirotope& chi);
bool is_positively_orientable(const Chirotope& chi);

// Signed circuits, one canonical representative per circuit of the
// underlying matroid (smallest element positive).
std::vector<SignedSet> signed_circuits(const Chirotope& chi);

// Signed circuit of one circuit mask, using the given completion set to a
// basis of circuit-minus-min; exposed so tests can sweep all completions.
SignedSet signed_circuit_for(const Chirotope& chi, Mask circuit, Mask completion);

// Deletion of everything outside `keep`, relabeled order-preservingly onto
// [|keep|]. Completion elements are the smallest independent extension.
Chirotope om_restriction(const Chirotope& chi, Mask keep);

// Direct sum of `a` embedded (order-preserving) at the elements of
// `where_a` and `b` at `where_b`; the two masks must partition [n]. The
// sign on a sorted subset is the product of the component signs times the
// parity of the permutation merging the two component lists.
Chirotope om_direct_sum(const Chirotope& a, Mask where_a, const Chirotope& b,
                        Mask where_b, int n);

bool om_is_connected(const Chirotope& chi);

// Relabels by the cyclic shift sending `first` to 1.
Chirotope rotate_order(const Chirotope& chi, int first);

// C0-C3 signed circuit axioms for a family closed under negation.
bool satisfies_circuit_axioms(const std::vector<SignedSet>& family);

// Connectivity recomputed from signed circuits alone (shared-circuit
// union-find); independent consistency route for om_is_connected.
bool om_is_connected_via_circuits(const Chirotope& chi);

}  // namespace positroid
