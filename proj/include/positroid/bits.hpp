// Subsets of [n] as bitmasks, n <= 16. Element e (1-based) lives at bit e-1.
#pragma once

#include <cstdint>
#include <bit>
#include <string>
#include <vector>

namespace positroid {

using Mask = std::uint32_t;

constexpr int kMaxGroundSize = 16;

constexpr Mask full_mask(int n) { return n == 0 ? 0u : ((Mask{1} << n) - 1u); }
constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr bool contains(Mask m, int e) { return (m >> (e - 1)) & 1u; }
constexpr int popcount(Mask m) { return std::popcount(m); }

// Smallest element of a nonempty mask (1-based).
constexpr int min_element(Mask m) { return std::countr_zero(m) + 1; }
constexpr int max_element(Mask m) { return 32 - std::countl_zero(m); }

Mask mask_of(const std::vector<int>& elems);
std::vector<int> elements(Mask m);
std::string mask_to_string(Mask m);

// Lexicographic order on subsets viewed as sorted element sequences
// ({1,2,4} < {1,3} < {2}).
bool lex_less(Mask a, Mask b);

std::int64_t binom(int n, int k);

// Rank of a d-subset in colex order (numeric mask order restricted to
// fixed popcount); dense index into chirotope sign tables.
std::int64_t colex_rank(Mask m);
Mask colex_unrank(std::int64_t rank, int d, int n);

// Next mask with the same popcount (Gosper); enumerates d-subsets in
// colex order starting from full_mask(d).
constexpr Mask next_same_popcount(Mask v) {
    if (v == 0) return 0;
    Mask t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// All k-subsets of the (not necessarily contiguous) ground mask, in
// colex order of positions within the ground's element list.
std::vector<Mask> subsets_of_size(Mask ground, int k);

// All submasks of ground including 0 and ground itself, ascending as integers.
std::vector<Mask> all_submasks(Mask ground);

// Positions (1-based, as a mask) of sub's elements within super's sorted
// element list; sub must be contained in super.
Mask positions_in(Mask sub, Mask super);

}  // namespace positroid
