#include "positroid/positroid.hpp"

#include <algorithm>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace positroid {

bool is_noncrossing(Mask t, Mask u, int n) {
    if (t & u) throw not_disjoint();
    int changes = 0;
    int prev = 0, first = 0;
    for (int e = 1; e <= n; ++e) {
        const int label = contains(t, e) ? 1 : contains(u, e) ? 2 : 0;
        if (label == 0) continue;
        if (prev != 0 && label != prev) ++changes;
        if (first == 0) first = label;
        prev = label;
    }
    if (prev != 0 && first != prev) ++changes;  // wrap-around
    return changes <= 2;
}

bool is_noncrossing_by_intervals(Mask t, Mask u, int n) {
    if (t & u) throw not_disjoint();
    if (t == 0 || u == 0) return true;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = 1; hi <= n; ++hi) {
            const Mask iv = CyclicInterval{n, lo, hi}.mask();
            if ((t & ~iv) == 0 && (u & iv) == 0) return true;
        }
    return false;
}

PartitionCheck component_partition_check(const Matroid& m) {
    PartitionCheck out;
    out.blocks = connected_components(m);
    out.noncrossing = true;
    for (std::size_t i = 0; i < out.blocks.size() && out.noncrossing; ++i)
        for (std::size_t j = i + 1; j < out.blocks.size(); ++j)
            if (!is_noncrossing(out.blocks[i], out.blocks[j], m.n())) {
                out.noncrossing = false;
                out.crossing_witness = {out.blocks[i], out.blocks[j]};
                break;
            }
    return out;
}

namespace {

// Cyclic interval masks paired with their ranks, flattened.
struct IntervalBounds {
    std::vector<Mask> masks;
    std::vector<int> bounds;
};

IntervalBounds interval_ranks(const Matroid& m) {
    const int n = m.n();
    IntervalBounds out;
    out.masks.reserve(static_cast<std::size_t>(n) * n);
    out.bounds.reserve(out.masks.capacity());
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = 1; hi <= n; ++hi) {
            out.masks.push_back(CyclicInterval{n, lo, hi}.mask());
            out.bounds.push_back(rank(m, out.masks.back()));
        }
    return out;
}

bool under_all_bounds(Mask s, const IntervalBounds& b) {
    for (std::size_t i = 0; i < b.masks.size(); ++i)
        if (popcount(s & b.masks[i]) > b.bounds[i]) return false;
    return true;
}

void require_full_ground(const Matroid& m) {
    if (m.ground() != full_mask(m.n()))
        throw error("positroid tests need a matroid on the full [n]; reindex first");
}

}  // namespace

PositroidVerdict is_positroid_serial(const Matroid& m) {
    require_full_ground(m);
    const IntervalBounds bound = interval_ranks(m);
    const std::int64_t count = binom(m.n(), m.rank());
    Mask s = full_mask(m.rank());
    for (std::int64_t r = 0; r < count; ++r, s = next_same_popcount(s)) {
        if (!m.is_basis(s) && under_all_bounds(s, bound)) return {false, s};
    }
    return {true, std::nullopt};
}

PositroidVerdict is_positroid(const Matroid& m) {
    require_full_ground(m);
    IntervalBounds bound;
    const int n = m.n();
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = 1; hi <= n; ++hi)
            bound.masks.push_back(CyclicInterval{n, lo, hi}.mask());
    bound.bounds.assign(bound.masks.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < bound.masks.size(); ++i)
        bound.bounds[i] = rank(m, bound.masks[i]);
    const std::int64_t count = binom(m.n(), m.rank());
    std::int64_t best = -1;
#pragma omp parallel
    {
        std::int64_t local = -1;
#ifdef _OPENMP
        const int threads = omp_get_num_threads();
        const int me = omp_get_thread_num();
#else
        const int threads = 1;
        const int me = 0;
#endif
        // Contiguous shards, walked by Gosper steps from one unrank each.
        const std::int64_t lo = count * me / threads;
        const std::int64_t hi = count * (me + 1) / threads;
        Mask s = lo < count ? colex_unrank(lo, m.rank(), m.n()) : 0;
        for (std::int64_t r = lo; r < hi && local < 0; ++r) {
            if (!m.is_basis(s) && under_all_bounds(s, bound)) local = r;
            s = next_same_popcount(s);
        }
#pragma omp critical
        if (local >= 0 && (best < 0 || local < best)) best = local;
    }
    if (best < 0) return {true, std::nullopt};
    return {false, colex_unrank(best, m.rank(), m.n())};
}

std::vector<Mask> grassmann_necklace(const Matroid& m) {
    require_full_ground(m);
    const int n = m.n();
    std::vector<Mask> necklace;
    necklace.reserve(n);
    for (int a = 1; a <= n; ++a) {
        Mask picked = 0;
        int r = 0;
        for (int step = 0; step < n && r < m.rank(); ++step) {
            const int e = (a - 1 + step) % n + 1;
            if (rank(m, picked | element_bit(e)) > r) {
                picked |= element_bit(e);
                ++r;
            }
        }
        necklace.push_back(picked);
    }
    return necklace;
}

namespace {

// I <= S in the Gale order of the rotation starting at a.
bool gale_leq(Mask i_set, Mask s, int a, int n) {
    auto rotated_pos = [&](int e) { return (e - a + n) % n; };
    std::vector<int> iv = elements(i_set), sv = elements(s);
    auto by_rot = [&](int x, int y) { return rotated_pos(x) < rotated_pos(y); };
    std::sort(iv.begin(), iv.end(), by_rot);
    std::sort(sv.begin(), sv.end(), by_rot);
    for (std::size_t t = 0; t < iv.size(); ++t)
        if (rotated_pos(iv[t]) > rotated_pos(sv[t])) return false;
    return true;
}

}  // namespace

PositroidVerdict is_positroid_gale(const Matroid& m) {
    require_full_ground(m);
    const std::vector<Mask> necklace = grassmann_necklace(m);
    const std::int64_t count = binom(m.n(), m.rank());
    for (std::int64_t r = 0; r < count; ++r) {
        const Mask s = colex_unrank(r, m.rank(), m.n());
        if (m.is_basis(s)) continue;
        bool dominates = true;
        for (int a = 1; a <= m.n() && dominates; ++a)
            dominates = gale_leq(necklace[a - 1], s, a, m.n());
        if (dominates) return {false, s};
    }
    return {true, std::nullopt};
}

DaSilvaCheck da_silva_criterion(const Matroid& m) {
    require_full_ground(m);
    const std::vector<Mask> cs = circuits(m);
    const std::vector<Mask> cos = cocircuits(m);
    for (Mask c : cs)
        for (Mask cc : cos) {
            if (c & cc) continue;
            if (!is_noncrossing(c, cc, m.n())) return {false, std::pair{c, cc}};
        }
    return {true, std::nullopt};
}

bool is_circular(const Matroid& m) {
    require_full_ground(m);
    for (Mask c : circuits(m)) {
        if (rank(m, c) >= m.rank()) continue;
        const Mask flat = closure(m, c);
        bool interval = false;
        for (int lo = 1; lo <= m.n() && !interval; ++lo)
            for (int hi = 1; hi <= m.n() && !interval; ++hi)
                interval = (CyclicInterval{m.n(), lo, hi}.mask() == flat);
        if (!interval) return false;
    }
    return true;
}

std::optional<Chirotope> indicator_chirotope(const Matroid& m, GpViolation* witness) {
    require_full_ground(m);
    const std::int64_t count = binom(m.n(), m.rank());
    std::vector<std::int8_t> signs(count);
    for (std::int64_t r = 0; r < count; ++r)
        signs[r] = m.is_basis(colex_unrank(r, m.rank(), m.n())) ? 1 : 0;
    return Chirotope::try_validated(m.n(), m.rank(), std::move(signs), witness);
}

}  // namespace positroid
