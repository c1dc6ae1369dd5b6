#include "positroid/chirotope.hpp"

#include <algorithm>
#include <array>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace positroid {

namespace {

// Inversion parity of an arbitrary int sequence, 0 on repeats via caller.
int sort_parity(std::vector<int>& v) {
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inversions;
    return inversions & 1 ? -1 : 1;
}

}  // namespace

void Chirotope::canonicalize() {
    const std::int64_t count = binom(n_, d_);
    Mask best = 0;
    bool found = false;
    for (std::int64_t r = 0; r < count; ++r) {
        if (signs_[r] == 0) continue;
        const Mask m = colex_unrank(r, d_, n_);
        if (!found || lex_less(m, best)) {
            best = m;
            found = true;
        }
    }
    if (found && signs_[colex_rank(best)] < 0)
        for (auto& s : signs_) s = static_cast<std::int8_t>(-s);
}

int Chirotope::eval(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != d_)
        throw wrong_arity("expected " + std::to_string(d_) + " entries, got " +
                          std::to_string(tuple.size()));
    Mask m = 0;
    for (int e : tuple) {
        if (e < 1 || e > n_) throw wrong_arity("element out of range");
        if (contains(m, e)) return 0;
        m |= element_bit(e);
    }
    std::vector<int> v(tuple.begin(), tuple.end());
    return sort_parity(v) * sign_of(m);
}

int Chirotope::eval(std::initializer_list<int> tuple) const {
    return eval(std::span<const int>(tuple.begin(), tuple.size()));
}

Matroid Chirotope::underlying_matroid() const {
    std::vector<Mask> bases;
    const std::int64_t count = binom(n_, d_);
    for (std::int64_t r = 0; r < count; ++r)
        if (signs_[r] != 0) bases.push_back(colex_unrank(r, d_, n_));
    return Matroid::unchecked(n_, full_mask(n_), std::move(bases));
}

Chirotope Chirotope::unchecked(int n, int d, std::vector<std::int8_t> signs) {
    Chirotope chi(n, d, std::move(signs));
    chi.canonicalize();
    return chi;
}

Chirotope Chirotope::validated(int n, int d, std::vector<std::int8_t> signs) {
    if (n < 0 || n > kMaxGroundSize || d < 0 || d > n)
        throw error("chirotope shape out of range");
    if (static_cast<std::int64_t>(signs.size()) != binom(n, d))
        throw wrong_size("sign table size must be C(n,d)");
    std::vector<Mask> support;
    const std::int64_t count = binom(n, d);
    for (std::int64_t r = 0; r < count; ++r)
        if (signs[r] != 0) support.push_back(colex_unrank(r, d, n));
    if (support.empty()) throw all_zero();
    try {
        Matroid::validate(n, full_mask(n), support);
    } catch (const exchange_violation& e) {
        throw support_not_matroid(e.what());
    } catch (const unequal_basis_sizes& e) {
        throw support_not_matroid(e.what());
    }
    if (auto w = find_gp_violation(n, d, signs)) throw gp_violation_error(*w);
    return unchecked(n, d, std::move(signs));
}

std::optional<Chirotope> Chirotope::try_validated(int n, int d,
                                                  std::vector<std::int8_t> signs,
                                                  GpViolation* witness) {
    try {
        return validated(n, d, std::move(signs));
    } catch (const gp_violation_error& e) {
        if (witness) *witness = e.witness;
        return std::nullopt;
    } catch (const error&) {
        return std::nullopt;
    }
}

namespace {

// Scans every admissible (v1<v2, v3<v4, v1<v3, all distinct) quadruple
// against one fixed sorted (d-2)-subset Y. Tuples with coinciding v's or
// v's meeting Y make the condition hold automatically, so skipping them
// loses nothing; the three pair symmetries are quotiented out by the
// ordering constraints (cross-checked against the unpruned oracle in the
// test suite).
std::optional<GpViolation> scan_gp_block(int n, const std::vector<std::int8_t>& signs,
                                         Mask ys) {
    std::array<int, kMaxGroundSize + 1> below{};  // |{y in Y : y < e}|
    for (int e = 1; e <= n; ++e) below[e] = popcount(ys & (element_bit(e) - 1));

    const std::vector<int> rest = elements(full_mask(n) & ~ys);
    const int m = static_cast<int>(rest.size());

    // chi(a,b,Y) for a<b, with the parity of moving (a,b) in front of Y.
    auto chi2 = [&](int a, int b) -> int {
        const int s = signs[colex_rank(ys | element_bit(a) | element_bit(b))];
        return ((below[a] + below[b]) & 1) ? -s : s;
    };
    auto chi2o = [&](int a, int b) -> int {  // arbitrary order
        return a < b ? chi2(a, b) : -chi2(b, a);
    };

    for (int i1 = 0; i1 < m; ++i1) {
        const int v1 = rest[i1];
        for (int i2 = i1 + 1; i2 < m; ++i2) {
            const int v2 = rest[i2];
            const int e12 = chi2(v1, v2);
            if (e12 == 0) continue;
            for (int i3 = i1 + 1; i3 < m; ++i3) {
                if (i3 == i2) continue;
                const int v3 = rest[i3];
                for (int i4 = i3 + 1; i4 < m; ++i4) {
                    if (i4 == i2) continue;
                    const int v4 = rest[i4];
                    const int eps = e12 * chi2(v3, v4);
                    if (eps == 0) continue;
                    if (chi2o(v3, v2) * chi2o(v1, v4) == eps) continue;
                    if (chi2o(v2, v4) * chi2o(v1, v3) == eps) continue;
                    return GpViolation{v1, v2, v3, v4, ys};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<GpViolation> find_gp_violation_serial(
    int n, int d, const std::vector<std::int8_t>& signs) {
    if (d < 2) return std::nullopt;
    const std::int64_t blocks = binom(n, d - 2);
    for (std::int64_t r = 0; r < blocks; ++r)
        if (auto w = scan_gp_block(n, signs, colex_unrank(r, d - 2, n))) return w;
    return std::nullopt;
}

std::optional<GpViolation> find_gp_violation(int n, int d,
                                             const std::vector<std::int8_t>& signs) {
    if (d < 2) return std::nullopt;
    const std::int64_t blocks = binom(n, d - 2);
    std::int64_t best_rank = -1;
    GpViolation best{};
#pragma omp parallel
    {
        std::int64_t local_rank = -1;
        GpViolation local{};
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t r = 0; r < blocks; ++r) {
            if (local_rank >= 0 && r > local_rank) continue;
            if (auto w = scan_gp_block(n, signs, colex_unrank(r, d - 2, n))) {
                if (local_rank < 0 || r < local_rank) {
                    local_rank = r;
                    local = *w;
                }
            }
        }
#pragma omp critical
        if (local_rank >= 0 && (best_rank < 0 || local_rank < best_rank)) {
            best_rank = local_rank;
            best = local;
        }
    }
    if (best_rank < 0) return std::nullopt;
    return best;
}

Chirotope reorient(const Chirotope& chi, Mask flipped) {
    std::vector<std::int8_t> signs = chi.signs();
    const std::int64_t count = binom(chi.n(), chi.d());
    for (std::int64_t r = 0; r < count; ++r) {
        if (signs[r] == 0) continue;
        if (popcount(colex_unrank(r, chi.d(), chi.n()) & flipped) & 1)
            signs[r] = static_cast<std::int8_t>(-signs[r]);
    }
    return Chirotope::unchecked(chi.n(), chi.d(), std::move(signs));
}

namespace {

// GF(2) solve of (x . row) = rhs per row; returns any solution.
std::optional<Mask> solve_parity(int n, std::vector<std::pair<Mask, int>> rows) {
    std::size_t top = 0;
    std::vector<std::pair<Mask, int>> pivots;  // (row mask, rhs), pivot = lowest bit
    for (int col = 0; col < n && top < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t i = top; i < rows.size(); ++i)
            if (contains(rows[i].first, col + 1)) {
                found = i;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[top], rows[found]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == top) continue;
            if (contains(rows[i].first, col + 1)) {
                rows[i].first ^= rows[top].first;
                rows[i].second ^= rows[top].second;
            }
        }
        ++top;
    }
    Mask x = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first == 0) {
            if (rows[i].second) return std::nullopt;
            continue;
        }
        if (i < top && rows[i].second) x |= element_bit(min_element(rows[i].first));
    }
    return x;
}

}  // namespace

std::optional<Mask> positive_reorientation(const Chirotope& chi) {
    const std::int64_t count = binom(chi.n(), chi.d());
    for (int target = 1; target >= -1; target -= 2) {
        std::vector<std::pair<Mask, int>> rows;
        for (std::int64_t r = 0; r < count; ++r) {
            const int s = chi.signs()[r];
            if (s == 0) continue;
            rows.emplace_back(colex_unrank(r, chi.d(), chi.n()), s == target ? 0 : 1);
        }
        if (auto x = solve_parity(chi.n(), std::move(rows))) return x;
    }
    return std::nullopt;
}

std::optional<Mask> positive_reorientation_bruteforce(const Chirotope& chi) {
    const std::int64_t count = binom(chi.n(), chi.d());
    for (Mask a : all_submasks(full_mask(chi.n()))) {
        int seen = 0;  // +1 / -1 once any basis sign observed
        bool ok = true;
        for (std::int64_t r = 0; r < count && ok; ++r) {
            int s = chi.signs()[r];
            if (s == 0) continue;
            if (popcount(colex_unrank(r, chi.d(), chi.n()) & a) & 1) s = -s;
            if (seen == 0)
                seen = s;
            else
                ok = (s == seen);
        }
        if (ok) return a;
    }
    return std::nullopt;
}

bool is_positively_orientable(const Chirotope& chi) {
    return positive_reorientation(chi).has_value();
}

SignedSet signed_circuit_for(const Chirotope& chi, Mask circuit, Mask completion) {
    const int cmin = min_element(circuit);
    const Mask others = circuit & ~element_bit(cmin);
    SignedSet out{element_bit(cmin), 0};
    for (int f : elements(others)) {
        const std::vector<int> rest =
            elements((others & ~element_bit(f)) | completion);
        std::vector<int> with_c{cmin}, with_f{f};
        with_c.insert(with_c.end(), rest.begin(), rest.end());
        with_f.insert(with_f.end(), rest.begin(), rest.end());
        const int sc = chi.eval(with_c), sf = chi.eval(with_f);
        if (sc == 0 || sf == 0)
            throw error("no basis extension for circuit element");  // unreachable
        if (-sc * sf > 0)
            out.pos |= element_bit(f);
        else
            out.neg |= element_bit(f);
    }
    return out;
}

namespace {

// Smallest-index completion of (circuit - min) to a basis.
Mask greedy_completion(const Matroid& m, Mask independent) {
    Mask chosen = 0;
    int r = rank(m, independent);
    for (int e = 1; e <= m.n() && r < m.rank(); ++e) {
        if (contains(independent | chosen, e)) continue;
        if (rank(m, independent | chosen | element_bit(e)) > r) {
            chosen |= element_bit(e);
            ++r;
        }
    }
    return chosen;
}

}  // namespace

std::vector<SignedSet> signed_circuits(const Chirotope& chi) {
    const Matroid m = chi.underlying_matroid();
    std::vector<SignedSet> out;
    for (Mask c : circuits(m)) {
        const Mask base_part = c & ~element_bit(min_element(c));
        out.push_back(signed_circuit_for(chi, c, greedy_completion(m, base_part)));
    }
    return out;
}

Chirotope om_restriction(const Chirotope& chi, Mask keep) {
    if (keep & ~full_mask(chi.n())) throw error("restriction set leaves [n]");
    const Matroid m = chi.underlying_matroid();
    const int sub_rank = rank(m, keep);
    const Mask completion = greedy_completion(m, keep);
    const std::vector<int> kept = elements(keep);
    const std::vector<int> tail = elements(completion);
    const int nn = static_cast<int>(kept.size());

    std::vector<std::int8_t> signs(binom(nn, sub_rank));
    const std::int64_t count = binom(nn, sub_rank);
    for (std::int64_t r = 0; r < count; ++r) {
        std::vector<int> tuple;
        for (int pos : elements(colex_unrank(r, sub_rank, nn)))
            tuple.push_back(kept[pos - 1]);
        tuple.insert(tuple.end(), tail.begin(), tail.end());
        signs[r] = static_cast<std::int8_t>(chi.eval(tuple));
    }
    return Chirotope::unchecked(nn, sub_rank, std::move(signs));
}

Chirotope om_direct_sum(const Chirotope& a, Mask where_a, const Chirotope& b,
                        Mask where_b, int n) {
    if (where_a & where_b) throw overlapping_ground_sets();
    if ((where_a | where_b) != full_mask(n))
        throw error("embedding masks must partition [n]");
    if (popcount(where_a) != a.n() || popcount(where_b) != b.n())
        throw shape_mismatch("embedding mask sizes must match component sizes");
    const int d = a.d() + b.d();
    const std::int64_t count = binom(n, d);
    std::vector<std::int8_t> signs(count);
    for (std::int64_t r = 0; r < count; ++r) {
        const Mask t = colex_unrank(r, d, n);
        const Mask ta = t & where_a, tb = t & where_b;
        if (popcount(ta) != a.d()) continue;
        const int sa = a.sign_of(positions_in(ta, where_a));
        const int sb = b.sign_of(positions_in(tb, where_b));
        if (sa == 0 || sb == 0) continue;
        int inversions = 0;  // pairs (x in ta, y in tb) with y < x
        for (int x : elements(ta)) inversions += popcount(tb & (element_bit(x) - 1));
        const int merge = (inversions & 1) ? -1 : 1;
        signs[r] = static_cast<std::int8_t>(merge * sa * sb);
    }
    return Chirotope::unchecked(n, d, std::move(signs));
}

bool om_is_connected(const Chirotope& chi) {
    return is_connected(chi.underlying_matroid());
}

bool om_is_connected_via_circuits(const Chirotope& chi) {
    const int n = chi.n();
    std::vector<int> parent(n + 1);
    for (int e = 1; e <= n; ++e) parent[e] = e;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const SignedSet& c : signed_circuits(chi)) {
        const Mask sup = c.support();
        const int root = find(min_element(sup));
        for (int e : elements(sup)) parent[find(e)] = root;
    }
    int classes = 0;
    for (int e = 1; e <= n; ++e)
        if (find(e) == e) ++classes;
    return classes == 1;
}

Chirotope rotate_order(const Chirotope& chi, int first) {
    const int n = chi.n();
    if (first < 1 || first > n) throw error("rotation element out of range");
    auto old_of = [&](int fresh) { return (fresh - 1 + first - 1) % n + 1; };
    const std::int64_t count = binom(n, chi.d());
    std::vector<std::int8_t> signs(count);
    for (std::int64_t r = 0; r < count; ++r) {
        std::vector<int> tuple;
        for (int j : elements(colex_unrank(r, chi.d(), n))) tuple.push_back(old_of(j));
        signs[r] = static_cast<std::int8_t>(chi.eval(tuple));
    }
    return Chirotope::unchecked(n, chi.d(), std::move(signs));
}

bool satisfies_circuit_axioms(const std::vector<SignedSet>& family) {
    for (const SignedSet& x : family)
        if (x.support() == 0) return false;  // C0
    for (const SignedSet& x : family) {      // C1
        if (std::find(family.begin(), family.end(), x.negated()) == family.end())
            return false;
    }
    for (const SignedSet& x : family) {      // C2
        for (const SignedSet& y : family) {
            if ((x.support() & ~y.support()) == 0 &&
                !(x == y || x == y.negated()))
                return false;
        }
    }
    for (const SignedSet& x : family) {      // C3, weak elimination
        for (const SignedSet& y : family) {
            if (x == y.negated()) continue;
            Mask conflict = x.pos & y.neg;
            while (conflict) {
                const int e = min_element(conflict);
                conflict &= conflict - 1;
                const Mask zpos_bound = (x.pos | y.pos) & ~element_bit(e);
                const Mask zneg_bound = (x.neg | y.neg) & ~element_bit(e);
                bool found = false;
                for (const SignedSet& z : family) {
                    if ((z.pos & ~zpos_bound) == 0 && (z.neg & ~zneg_bound) == 0) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

}  // namespace positroid
