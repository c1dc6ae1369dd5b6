#include "positroid/matrix.hpp"

#include <algorithm>

#include "positroid/positroid.hpp"

namespace positroid {

namespace {

// Bareiss fraction-free elimination; every division is exact.
Int integer_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Rational maximal_minor(const RationalMatrix& a, Mask cols) {
    const int d = a.rows();
    if (popcount(cols) != d)
        throw wrong_size("minor needs exactly " + std::to_string(d) + " columns");
    const std::vector<int> picked = elements(cols);
    // Clear denominators row by row; det scales by the product of the lcms.
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
    Rational scale(1);
    for (int r = 0; r < d; ++r) {
        Int l(1);
        for (int c = 0; c < d; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    a.at(r, picked[c] - 1).get_den().get_mpz_t());
        for (int c = 0; c < d; ++c) {
            Rational scaled = a.at(r, picked[c] - 1) * Rational(l);
            m[r][c] = scaled.get_num();  // denominator is 1 now
        }
        scale *= Rational(l);
    }
    Rational det(integer_det(std::move(m)));
    det /= scale;
    det.canonicalize();
    return det;
}

Chirotope chirotope_from_matrix(const RationalMatrix& a) {
    const int d = a.rows(), n = a.cols();
    if (n > kMaxGroundSize) throw error("too many columns");
    const std::int64_t count = binom(n, d);
    std::vector<std::int8_t> signs(count);
    bool any = false;
    for (std::int64_t r = 0; r < count; ++r) {
        const int s = sign_of(maximal_minor(a, colex_unrank(r, d, n)));
        signs[r] = static_cast<std::int8_t>(s);
        any = any || s != 0;
    }
    if (!any) throw rank_deficient();
    return Chirotope::validated(n, d, std::move(signs));
}

bool is_totally_nonnegative(const RationalMatrix& a) {
    const std::int64_t count = binom(a.cols(), a.rows());
    for (std::int64_t r = 0; r < count; ++r)
        if (sign_of(maximal_minor(a, colex_unrank(r, a.rows(), a.cols()))) < 0)
            return false;
    return true;
}

Matroid matroid_of_matrix(const RationalMatrix& a) {
    const int d = a.rows(), n = a.cols();
    std::vector<Mask> bases;
    const std::int64_t count = binom(n, d);
    for (std::int64_t r = 0; r < count; ++r) {
        const Mask cols = colex_unrank(r, d, n);
        if (sign_of(maximal_minor(a, cols)) != 0) bases.push_back(cols);
    }
    if (bases.empty()) throw rank_deficient();
    return Matroid::unchecked(n, full_mask(n), std::move(bases));
}

RationalMatrix moment_curve_matrix(int d, const std::vector<Rational>& xs) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1])) throw not_increasing();
    const int n = static_cast<int>(xs.size());
    RationalMatrix a(d, n);
    for (int c = 0; c < n; ++c) {
        Rational p(1);
        for (int r = 0; r < d; ++r) {
            a.at(r, c) = p;
            p *= xs[c];
        }
    }
    return a;
}

namespace {

// Moment-curve realization placed on the non-loop columns of [n].
RationalMatrix uniform_on_columns(int d, int n, Mask non_loops) {
    RationalMatrix a(d, n);
    std::vector<Rational> xs;
    for (int i = 0; i < popcount(non_loops); ++i) xs.emplace_back(i);
    const RationalMatrix block = moment_curve_matrix(d, xs);
    int bc = 0;
    for (int e : elements(non_loops)) {
        for (int r = 0; r < d; ++r) a.at(r, e - 1) = block.at(r, bc);
        ++bc;
    }
    return a;
}

bool matches(const RationalMatrix& a, const Matroid& m) {
    if (!is_totally_nonnegative(a)) return false;
    const std::int64_t count = binom(a.cols(), a.rows());
    for (std::int64_t r = 0; r < count; ++r) {
        const Mask cols = colex_unrank(r, a.rows(), a.cols());
        const bool nonzero = sign_of(maximal_minor(a, cols)) != 0;
        if (nonzero != m.is_basis(cols)) return false;
    }
    return true;
}

// True when the ground masks are consecutive blocks of non-loop elements
// (each block a plain interval once loops are ignored).
bool is_block_decomposition(const std::vector<Mask>& blocks) {
    std::vector<Mask> sorted = blocks;
    std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
        return min_element(a) < min_element(b);
    });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (max_element(sorted[i]) > min_element(sorted[i + 1])) return false;
    return true;
}

}  // namespace

std::optional<RationalMatrix> realize_positroid_search(const Matroid& m, int height) {
    if (m.ground() != full_mask(m.n())) throw error("need a matroid on the full [n]");
    if (!is_positroid(m).positive) throw not_a_positroid();
    const int d = m.rank(), n = m.n();
    if (d == 0) return RationalMatrix(0, n);

    const Mask non_loops = m.ground() & ~m.loops();

    // Uniform on the non-loop part: moment curve.
    if (m.bases() == subsets_of_size(non_loops, d)) {
        RationalMatrix a = uniform_on_columns(d, n, non_loops);
        if (matches(a, m)) return a;
    }

    // Connected components sitting in consecutive blocks: stack per-block
    // moment curves on disjoint row sets (all interleaving minors vanish
    // or split as products of block minors with no sign twist).
    const std::vector<Mask> comps = connected_components(restriction(m, non_loops));
    if (comps.size() > 1 && is_block_decomposition(comps)) {
        bool all_uniform = true;
        RationalMatrix a(d, n);
        int row0 = 0;
        for (Mask comp : comps) {
            const Matroid sub = restriction(m, comp);
            const int dd = sub.rank();
            if (sub.bases() != subsets_of_size(comp, dd)) {
                all_uniform = false;
                break;
            }
            const RationalMatrix block = uniform_on_columns(dd, n, comp);
            for (int r = 0; r < dd; ++r)
                for (int c = 0; c < n; ++c) a.at(row0 + r, c) = block.at(r, c);
            row0 += dd;
        }
        if (all_uniform && row0 == d && matches(a, m)) return a;
    }

    // Bounded scan in echelon form: identity on the columns of the
    // lexicographically minimal basis, zeros on loops, integer entries in
    // [-height, height] elsewhere. Normalizing a totally nonnegative
    // realization to this shape divides every minor by the (positive)
    // pivot minor, so the shape loses no totally nonnegative cell; only
    // the integrality and height bounds do. Capped; absence proves nothing.
    const Mask pivots = grassmann_necklace(m)[0];
    const std::vector<int> pivot_cols = elements(pivots);
    std::vector<int> free_cols;
    for (int e : elements(non_loops))
        if (!contains(pivots, e)) free_cols.push_back(e);
    const int cells = d * static_cast<int>(free_cols.size());
    const long base = 2L * height + 1;
    double space = 1;
    for (int i = 0; i < cells; ++i) space *= static_cast<double>(base);
    const double cap = 1e6;
    if (space <= cap) {
        std::vector<int> digit(cells, 0);
        while (true) {
            RationalMatrix a(d, n);
            for (int r = 0; r < d; ++r) a.at(r, pivot_cols[r] - 1) = Rational(1);
            for (int i = 0; i < cells; ++i) {
                const int col = free_cols[i % free_cols.size()] - 1;
                const int row = i / static_cast<int>(free_cols.size());
                a.at(row, col) = Rational(digit[i] - height);
            }
            if (matches(a, m)) return a;
            int pos = 0;
            while (pos < cells && ++digit[pos] == base) digit[pos++] = 0;
            if (pos == cells) break;
        }
    }
    return std::nullopt;
}

}  // namespace positroid
