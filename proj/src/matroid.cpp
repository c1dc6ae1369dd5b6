#include "positroid/matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "positroid/errors.hpp"

namespace positroid {

Mask CyclicInterval::mask() const {
    Mask m = 0;
    for (int e = 1; e <= n; ++e)
        if (contains(e)) m |= element_bit(e);
    return m;
}

namespace {

void check_exchange(const std::vector<Mask>& bases) {
    for (Mask b1 : bases) {
        for (Mask b2 : bases) {
            Mask out = b1 & ~b2;
            while (out) {
                const int e1 = min_element(out);
                out &= out - 1;
                Mask in = b2 & ~b1;
                bool ok = false;
                while (in && !ok) {
                    const int e2 = min_element(in);
                    in &= in - 1;
                    const Mask swapped = (b1 & ~element_bit(e1)) | element_bit(e2);
                    ok = std::binary_search(bases.begin(), bases.end(), swapped);
                }
                if (!ok) throw exchange_violation(b1, b2, e1);
            }
        }
    }
}

}  // namespace

Matroid Matroid::validate(int n, Mask ground, std::vector<Mask> bases) {
    if (n < 0 || n > kMaxGroundSize) throw error("ground size out of range");
    if (bases.empty()) throw empty_basis_set();
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const int k = popcount(bases.front());
    for (Mask b : bases) {
        if (popcount(b) != k) throw unequal_basis_sizes();
        if (b & ~ground) throw error("basis leaves the ground set");
    }
    if (ground & ~full_mask(n)) throw error("ground set leaves [n]");
    check_exchange(bases);
    return Matroid(n, ground, k, std::move(bases));
}

Matroid Matroid::validate(int n, std::vector<Mask> bases) {
    return validate(n, full_mask(n), std::move(bases));
}

Matroid Matroid::unchecked(int n, Mask ground, std::vector<Mask> bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const int k = bases.empty() ? 0 : popcount(bases.front());
    return Matroid(n, ground, k, std::move(bases));
}

bool Matroid::is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
}

Mask Matroid::loops() const {
    Mask in_some = 0;
    for (Mask b : bases_) in_some |= b;
    return ground_ & ~in_some;
}

Mask Matroid::coloops() const {
    Mask in_all = ground_;
    for (Mask b : bases_) in_all &= b;
    return in_all;
}

int rank(const Matroid& m, Mask a) {
    int best = 0;
    for (Mask b : m.bases()) best = std::max(best, popcount(b & a));
    return best;
}

std::vector<Mask> independent_sets(const Matroid& m) {
    std::vector<Mask> out;
    for (Mask s : all_submasks(m.ground())) {
        for (Mask b : m.bases()) {
            if ((s & ~b) == 0) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

std::vector<Mask> circuits(const Matroid& m) {
    std::vector<Mask> out;
    for (int size = 1; size <= m.rank() + 1; ++size) {
        for (Mask c : subsets_of_size(m.ground(), size)) {
            if (rank(m, c) == size) continue;  // independent
            bool minimal = true;
            for (Mask smaller : out) {
                if ((smaller & ~c) == 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> cocircuits(const Matroid& m) { return circuits(dual(m)); }

Mask closure(const Matroid& m, Mask a) {
    const int r = rank(m, a);
    Mask cl = a;
    Mask rest = m.ground() & ~a;
    while (rest) {
        const int e = min_element(rest);
        rest &= rest - 1;
        if (rank(m, a | element_bit(e)) == r) cl |= element_bit(e);
    }
    return cl;
}

Matroid dual(const Matroid& m) {
    std::vector<Mask> co;
    co.reserve(m.bases().size());
    for (Mask b : m.bases()) co.push_back(m.ground() & ~b);
    return Matroid::unchecked(m.n(), m.ground(), std::move(co));
}

Matroid restriction(const Matroid& m, Mask s) {
    int best = -1;
    std::vector<Mask> bs;
    for (Mask b : m.bases()) {
        const int c = popcount(b & s);
        if (c > best) {
            best = c;
            bs.clear();
        }
        if (c == best) bs.push_back(b & s);
    }
    return Matroid::unchecked(m.n(), s, std::move(bs));
}

Matroid contraction(const Matroid& m, Mask t) {
    int best = -1;
    std::vector<Mask> bs;
    for (Mask b : m.bases()) {
        const int c = popcount(b & t);
        if (c > best) {
            best = c;
            bs.clear();
        }
        if (c == best) bs.push_back(b & ~t);
    }
    return Matroid::unchecked(m.n(), m.ground() & ~t, std::move(bs));
}

Matroid direct_sum(const Matroid& m, const Matroid& other) {
    if (m.ground() & other.ground()) throw overlapping_ground_sets();
    const int n = std::max(m.n(), other.n());
    std::vector<Mask> bs;
    bs.reserve(m.bases().size() * other.bases().size());
    for (Mask a : m.bases())
        for (Mask b : other.bases()) bs.push_back(a | b);
    return Matroid::unchecked(n, m.ground() | other.ground(), std::move(bs));
}

std::vector<Mask> connected_components(const Matroid& m) {
    std::map<int, int> parent;  // union-find over ground elements
    for (int e : elements(m.ground())) parent[e] = e;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask c : circuits(m)) {
        const int root = min_element(c);
        for (int e : elements(c)) parent[find(e)] = find(root);
    }
    std::map<int, Mask> blocks;
    for (int e : elements(m.ground())) blocks[find(e)] |= element_bit(e);
    std::vector<Mask> out;
    for (auto& [root, block] : blocks) out.push_back(block);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return min_element(a) < min_element(b);
    });
    return out;
}

bool is_connected(const Matroid& m) { return connected_components(m).size() == 1; }

int polytope_dim(const Matroid& m) {
    return popcount(m.ground()) - static_cast<int>(connected_components(m).size());
}

Matroid face_matroid(const Matroid& m, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != m.n())
        throw wrong_size("weight vector length must equal n");
    // Group ground elements by weight, descending.
    std::map<Rational, Mask, std::greater<Rational>> levels;
    for (int e : elements(m.ground())) levels[w[e - 1]] |= element_bit(e);

    Matroid result = Matroid::unchecked(m.n(), 0, {0});  // empty summand
    Mask below = 0;                                      // A_{i-1}
    for (auto& [weight, level] : levels) {
        const Mask upto = below | level;  // A_i
        result = direct_sum(result, contraction(restriction(m, upto), below));
        below = upto;
    }
    return result;
}

std::pair<Matroid, std::vector<int>> reindexed(const Matroid& m) {
    const std::vector<int> old_labels = elements(m.ground());
    std::vector<int> new_of(m.n() + 1, 0);
    for (std::size_t i = 0; i < old_labels.size(); ++i)
        new_of[old_labels[i]] = static_cast<int>(i) + 1;
    std::vector<Mask> bs;
    bs.reserve(m.bases().size());
    for (Mask b : m.bases()) {
        Mask nb = 0;
        for (int e : elements(b)) nb |= element_bit(new_of[e]);
        bs.push_back(nb);
    }
    const int nn = static_cast<int>(old_labels.size());
    return {Matroid::unchecked(nn, full_mask(nn), std::move(bs)), old_labels};
}

Matroid uniform_matroid(int n, int k) {
    return Matroid::unchecked(n, full_mask(n), subsets_of_size(full_mask(n), k));
}

}  // namespace positroid
