// Exact rational matrices and their maximal minors.
#pragma once

#include <optional>
#include <vector>

#include "positroid/chirotope.hpp"
#include "positroid/matroid.hpp"
#include "positroid/rational.hpp"

namespace positroid {

class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool operator==(const RationalMatrix&) const = default;

  private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

// Exact determinant of the column submatrix selected by the d-subset
// `cols` (1-based), via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix. Throws wrong_size if |cols| != d.
Rational maximal_minor(const RationalMatrix& a, Mask cols);

// Signs of all maximal minors, validated as a chirotope. A validation
// failure here would mean broken arithmetic, so it is allowed to throw.
Chirotope chirotope_from_matrix(const RationalMatrix& a);

bool is_totally_nonnegative(const RationalMatrix& a);

// Column subsets with nonzero minor; throws rank_deficient if none.
Matroid matroid_of_matrix(const RationalMatrix& a);

// Columns (1, x, x^2, ..., x^{d-1}) for strictly increasing xs; every
// maximal minor is a Vandermonde product, hence positive.
RationalMatrix moment_curve_matrix(int d, const std::vector<Rational>& xs);

// Best-effort search for a totally nonnegative matrix realizing the given
// positroid: loops become zero columns, uniform parts use the moment
// curve, interval-block decompositions are assembled blockwise, and the
// remainder falls back to a bounded exhaustive scan over small integer
// entries in [-height, height]. Absence is not a disproof.
std::optional<RationalMatrix> realize_positroid_search(const Matroid& m, int height);

}  // namespace positroid
