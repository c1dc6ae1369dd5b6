#include "positroid/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "positroid/errors.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

namespace {

struct Enumerator {
    int m = 0;
    std::vector<Mask> slots;  // k-subsets, colex order
    // by_pair[p*m+q]: one fix-mask per element of S_p - S_q; if both p and
    // q are in the family, each entry must intersect it.
    std::vector<std::vector<std::uint64_t>> by_pair;
    std::vector<Matroid> out;
    int n = 0;

    bool viable(std::uint64_t chosen, std::uint64_t avail) const {
        std::uint64_t rest = chosen;
        while (rest) {
            const int p = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t rest2 = chosen;
            while (rest2) {
                const int q = std::countr_zero(rest2);
                rest2 &= rest2 - 1;
                if (p == q) continue;
                for (std::uint64_t fixes : by_pair[p * m + q])
                    if ((fixes & avail) == 0) return false;
            }
        }
        return true;
    }

    void dfs(int i, std::uint64_t chosen) {
        if (i == m) {
            if (chosen) {
                std::vector<Mask> bases;
                std::uint64_t rest = chosen;
                while (rest) {
                    bases.push_back(slots[std::countr_zero(rest)]);
                    rest &= rest - 1;
                }
                out.push_back(Matroid::unchecked(n, full_mask(n), std::move(bases)));
            }
            return;
        }
        const std::uint64_t suffix =
            i + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (i + 1)) - 1);
        // Include slot i: only pairs touching i are new.
        {
            const std::uint64_t next = chosen | (std::uint64_t{1} << i);
            const std::uint64_t avail = next | suffix;
            bool ok = true;
            std::uint64_t rest = chosen;
            while (rest && ok) {
                const int q = std::countr_zero(rest);
                rest &= rest - 1;
                for (std::uint64_t fixes : by_pair[i * m + q])
                    if ((fixes & avail) == 0) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
                for (std::uint64_t fixes : by_pair[q * m + i])
                    if ((fixes & avail) == 0) {
                        ok = false;
                        break;
                    }
            }
            if (ok) dfs(i + 1, next);
        }
        // Exclude slot i: obligations that leaned on it may now be dead.
        if (viable(chosen, chosen | suffix)) dfs(i + 1, chosen);
    }
};

}  // namespace

std::vector<Matroid> enumerate_matroids(int n, int k) {
    if (n < 0 || n > kMaxGroundSize || k < 0) throw error("parameters out of range");
    if (k > n) return {};
    Enumerator e;
    e.n = n;
    e.slots = subsets_of_size(full_mask(n), k);
    e.m = static_cast<int>(e.slots.size());
    if (e.m > 64) throw error("enumeration supports at most 64 basis slots");

    e.by_pair.assign(static_cast<std::size_t>(e.m) * e.m, {});
    for (int p = 0; p < e.m; ++p)
        for (int q = 0; q < e.m; ++q) {
            if (p == q) continue;
            for (int b1 : elements(e.slots[p] & ~e.slots[q])) {
                std::uint64_t fixes = 0;
                for (int b2 : elements(e.slots[q] & ~e.slots[p])) {
                    const Mask fixed = (e.slots[p] & ~element_bit(b1)) | element_bit(b2);
                    const auto it =
                        std::lower_bound(e.slots.begin(), e.slots.end(), fixed);
                    fixes |= std::uint64_t{1} << (it - e.slots.begin());
                }
                e.by_pair[p * e.m + q].push_back(fixes);
            }
        }
    e.dfs(0, 0);
    return std::move(e.out);
}

std::vector<Matroid> enumerate_matroids_bruteforce(int n, int k) {
    const std::vector<Mask> slots = subsets_of_size(full_mask(n), k);
    const int m = static_cast<int>(slots.size());
    if (m > 20) throw error("brute-force enumeration is for tiny parameters only");
    std::vector<Matroid> out;
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << m); ++family) {
        std::vector<Mask> bases;
        for (int i = 0; i < m; ++i)
            if ((family >> i) & 1) bases.push_back(slots[i]);
        try {
            out.push_back(Matroid::validate(n, bases));
        } catch (const error&) {
        }
    }
    return out;
}

std::vector<Matroid> enumerate_positroids(int n, int k) {
    std::vector<Matroid> out;
    for (const Matroid& m : enumerate_matroids(n, k))
        if (is_positroid(m).positive) out.push_back(m);
    return out;
}

std::vector<Matroid> enumerate_pom_matroids(int n, int k) {
    std::vector<Matroid> out;
    for (const Matroid& m : enumerate_matroids(n, k))
        if (indicator_chirotope(m)) out.push_back(m);
    return out;
}

std::vector<Chirotope> enumerate_chirotopes(int n, int d) {
    if (n < 0 || n > kMaxGroundSize || d < 0) throw error("parameters out of range");
    if (d > n) return {};
    const std::int64_t m = binom(n, d);
    if (m > 12) throw error("chirotope enumeration supports at most 3^12 sign maps");

    // Subset indices ordered so the canonical-sign test scans lex order.
    std::vector<std::int64_t> lex_order(m);
    std::iota(lex_order.begin(), lex_order.end(), 0);
    std::sort(lex_order.begin(), lex_order.end(), [&](std::int64_t a, std::int64_t b) {
        return lex_less(colex_unrank(a, d, n), colex_unrank(b, d, n));
    });

    std::vector<Chirotope> out;
    std::vector<std::int8_t> signs(m, 0);
    const std::int8_t digits[3] = {0, 1, -1};
    std::vector<int> digit(m, 0);
    while (true) {
        for (std::int64_t i = 0; i < m; ++i) signs[i] = digits[digit[i]];
        int first = 0;
        for (std::int64_t i = 0; i < m; ++i)
            if ((first = signs[lex_order[i]]) != 0) break;
        if (first == 1) {  // canonical representative of {chi, -chi}
            if (auto chi = Chirotope::try_validated(n, d, signs))
                out.push_back(std::move(*chi));
        }
        std::int64_t pos = 0;
        while (pos < m && ++digit[pos] == 3) digit[pos++] = 0;
        if (pos == m) break;
    }
    return out;
}

long long decorated_permutation_count(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        int fixed = 0;
        for (int i = 0; i < n; ++i)
            if (perm[i] == i) ++fixed;
        total += 1LL << fixed;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace positroid
