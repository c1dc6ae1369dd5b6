// Error taxonomy; every witness-carrying failure keeps its witness.
#pragma once

#include <stdexcept>
#include <string>

#include "positroid/bits.hpp"

namespace positroid {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct empty_basis_set : error {
    empty_basis_set() : error("basis set is empty") {}
};

struct unequal_basis_sizes : error {
    unequal_basis_sizes() : error("bases do not all have the same cardinality") {}
};

// Basis exchange axiom failed: b1 in B1 - B2 admits no b2 in B2 - B1 with
// (B1 - b1) + b2 a basis.
struct exchange_violation : error {
    Mask basis1, basis2;
    int pivot;
    exchange_violation(Mask b1, Mask b2, int b)
        : error("exchange axiom violated: B1=" + mask_to_string(b1) + " B2=" +
                mask_to_string(b2) + " b1=" + std::to_string(b)),
          basis1(b1),
          basis2(b2),
          pivot(b) {}
};

struct overlapping_ground_sets : error {
    overlapping_ground_sets() : error("ground sets overlap") {}
};

struct wrong_arity : error {
    using error::error;
};

struct all_zero : error {
    all_zero() : error("chirotope sign map is identically zero") {}
};

struct support_not_matroid : error {
    support_not_matroid(const std::string& why)
        : error("chirotope support is not a matroid: " + why) {}
};

struct shape_mismatch : error {
    using error::error;
};

struct not_disjoint : error {
    not_disjoint() : error("sets are not disjoint") {}
};

struct wrong_size : error {
    using error::error;
};

struct rank_deficient : error {
    rank_deficient() : error("matrix does not have full row rank") {}
};

struct not_increasing : error {
    not_increasing() : error("parameters are not strictly increasing") {}
};

struct not_a_positroid : error {
    not_a_positroid() : error("matroid is not a positroid") {}
};

struct not_comparable : error {
    not_comparable() : error("poset elements are not comparable") {}
};

struct unknown_theorem : error {
    unknown_theorem(const std::string& id) : error("unknown theorem id: " + id) {}
};

}  // namespace positroid
