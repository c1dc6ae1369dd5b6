#include "positroid/bits.hpp"

#include <array>
#include <stdexcept>

namespace positroid {

Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= element_bit(e);
    return m;
}

std::vector<int> elements(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        int e = min_element(m);
        out.push_back(e);
        m &= m - 1;
    }
    return out;
}

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

bool lex_less(Mask a, Mask b) {
    while (a && b) {
        int ea = min_element(a), eb = min_element(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

namespace {

struct BinomTable {
    std::array<std::array<std::int64_t, 33>, 33> c{};
    BinomTable() {
        for (int n = 0; n < 33; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable g_binom;

}  // namespace

std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return g_binom.c[n][k];
}

std::int64_t colex_rank(Mask m) {
    std::int64_t r = 0;
    int j = 1;
    for (int e : elements(m)) r += binom(e - 1, j++);
    return r;
}

Mask colex_unrank(std::int64_t rank, int d, int n) {
    Mask m = 0;
    for (int j = d; j >= 1; --j) {
        int p = n - 1;
        while (p >= j - 1 && binom(p, j) > rank) --p;
        rank -= binom(p, j);
        m |= Mask{1} << p;
    }
    if (rank != 0) throw std::out_of_range("colex_unrank: rank out of range");
    return m;
}

std::vector<Mask> subsets_of_size(Mask ground, int k) {
    std::vector<Mask> out;
    const int m = popcount(ground);
    if (k < 0 || k > m) return out;
    if (k == 0) return {Mask{0}};
    const std::vector<int> elems = elements(ground);
    out.reserve(static_cast<std::size_t>(binom(m, k)));
    for (Mask pos = full_mask(k); pos < (Mask{1} << m); pos = next_same_popcount(pos)) {
        Mask s = 0;
        for (int i : elements(pos)) s |= element_bit(elems[i - 1]);
        out.push_back(s);
        if (pos == (full_mask(k) << (m - k))) break;  // highest k-subset reached
    }
    return out;
}

Mask positions_in(Mask sub, Mask super) {
    Mask out = 0;
    int pos = 0;
    while (super) {
        const int e = min_element(super);
        super &= super - 1;
        ++pos;
        if (contains(sub, e)) out |= element_bit(pos);
    }
    return out;
}

std::vector<Mask> all_submasks(Mask ground) {
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << popcount(ground));
    Mask s = 0;
    while (true) {
        out.push_back(s);
        if (s == ground) break;
        s = (s - ground) & ground;
    }
    return out;
}

}  // namespace positroid
