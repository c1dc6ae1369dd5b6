#include "positroid/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "positroid/errors.hpp"

namespace positroid {

Poset Poset::with_bottom(std::vector<std::string> labels,
                         std::vector<std::vector<std::uint8_t>> leq) {
    const int k = static_cast<int>(labels.size());
    if (static_cast<int>(leq.size()) != k)
        throw wrong_size("relation size must match element count");
    for (auto& row : leq)
        if (static_cast<int>(row.size()) != k)
            throw wrong_size("relation must be square");
    for (int i = 0; i < k; ++i)
        if (!leq[i][i]) throw error("order relation is not reflexive");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && leq[i][j] && leq[j][i])
                throw error("order relation is not antisymmetric");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!leq[i][j]) continue;
            for (int l = 0; l < k; ++l)
                if (leq[j][l] && !leq[i][l])
                    throw error("order relation is not transitive");
        }

    Poset p;
    p.m_ = k + 1;
    p.labels_.reserve(k + 1);
    p.labels_.push_back("0hat");
    for (auto& s : labels) p.labels_.push_back(std::move(s));
    p.leq_.assign(p.m_, std::vector<std::uint8_t>(p.m_, 0));
    p.leq_[0][0] = 1;
    for (int i = 0; i < k; ++i) {
        p.leq_[0][i + 1] = 1;
        for (int j = 0; j < k; ++j) p.leq_[i + 1][j + 1] = leq[i][j];
    }

    // Linear extension: sort by the size of the down-set.
    std::vector<int> below(p.m_, 0);
    for (int j = 0; j < p.m_; ++j)
        for (int i = 0; i < p.m_; ++i) below[j] += p.leq_[i][j];
    p.topo_.resize(p.m_);
    std::iota(p.topo_.begin(), p.topo_.end(), 0);
    std::stable_sort(p.topo_.begin(), p.topo_.end(),
                     [&](int a, int b) { return below[a] < below[b]; });
    return p;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y) {
            if (x == y || !leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < m_ && cover; ++z)
                if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
            if (cover) out.emplace_back(x, y);
        }
    return out;
}

std::vector<int> Poset::element_ranks() const {
    std::vector<int> r(m_, 0);
    for (int z : topo_) {
        int best = 0;
        for (int w = 0; w < m_; ++w)
            if (w != z && leq(w, z)) best = std::max(best, r[w] + 1);
        r[z] = best;
    }
    return r;
}

int Poset::interval_length(int x, int y) const {
    if (!leq(x, y)) throw not_comparable();
    std::vector<int> len(m_, -1);
    len[x] = 0;
    for (int z : topo_) {
        if (!(leq(x, z) && leq(z, y)) || z == x) continue;
        int best = 0;
        for (int w = 0; w < m_; ++w)
            if (w != z && leq(x, w) && leq(w, z) && len[w] >= 0)
                best = std::max(best, len[w] + 1);
        len[z] = best;
    }
    return len[y];
}

long long Poset::mobius(int x, int y) const {
    if (!leq(x, y)) throw not_comparable();
    std::vector<long long> mu(m_, 0);
    mu[x] = 1;
    for (int z : topo_) {
        if (z == x || !(leq(x, z) && leq(z, y))) continue;
        long long sum = 0;
        for (int w = 0; w < m_; ++w)
            if (leq(x, w) && leq(w, z) && w != z) sum += mu[w];
        mu[z] = -sum;
    }
    return mu[y];
}

PosetDiagnostics Poset::diagnostics() const {
    PosetDiagnostics out;

    // Rank by longest chain from the bottom.
    const std::vector<int> r = element_ranks();
    bool graded = true;
    for (auto [x, y] : covers())
        if (r[y] != r[x] + 1) graded = false;
    int top_rank = 0;
    for (int z = 0; z < m_; ++z) top_rank = std::max(top_rank, r[z]);
    for (int z = 0; z < m_ && graded; ++z) {
        bool maximal = true;
        for (int w = 0; w < m_; ++w)
            if (w != z && leq(z, w)) maximal = false;
        if (maximal && r[z] != top_rank) graded = false;
    }
    out.graded = graded;
    out.rank_vector.assign(top_rank + 1, 0);
    for (int z = 0; z < m_; ++z) ++out.rank_vector[r[z]];

    out.thin = true;
    for (int x = 0; x < m_ && out.thin; ++x)
        for (int y = 0; y < m_; ++y) {
            if (!leq(x, y) || interval_length(x, y) != 2) continue;
            int count = 0;
            for (int z = 0; z < m_; ++z)
                if (leq(x, z) && leq(z, y)) ++count;
            if (count != 4) {
                out.thin = false;
                break;
            }
        }

    out.eulerian = graded;
    for (int x = 0; x < m_ && out.eulerian; ++x) {
        // One sweep computes mobius(x, -) for every y above x.
        std::vector<long long> mu(m_, 0);
        mu[x] = 1;
        for (int z : topo_) {
            if (z == x || !leq(x, z)) continue;
            long long sum = 0;
            for (int w = 0; w < m_; ++w)
                if (leq(x, w) && leq(w, z) && w != z) sum += mu[w];
            mu[z] = -sum;
        }
        for (int y = 0; y < m_; ++y) {
            if (!leq(x, y)) continue;
            const int len = interval_length(x, y);
            const long long expect = (len & 1) ? -1 : 1;
            if (mu[y] != expect) {
                out.eulerian = false;
                break;
            }
        }
    }
    return out;
}

namespace {

// Alternating chain count: sum over nonempty chains of (-1)^(size-1),
// minus one for the empty chain.
long long reduced_euler(const std::vector<int>& verts,
                        const std::vector<int>& topo,
                        const std::function<bool(int, int)>& less) {
    std::vector<int> order;
    for (int z : topo)
        if (std::find(verts.begin(), verts.end(), z) != verts.end())
            order.push_back(z);
    long long total = 0;
    std::vector<long long> gz;
    gz.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        long long sum = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (less(order[j], order[i])) sum += gz[j];
        gz[i] = 1 - sum;
        total += gz[i];
    }
    return total - 1;
}

}  // namespace

long long Poset::order_complex_euler() const {
    std::vector<int> verts;
    for (int z = 1; z < m_; ++z) verts.push_back(z);
    return reduced_euler(verts, topo_, [this](int a, int b) {
        return a != b && leq(a, b);
    });
}

long long Poset::order_complex_euler_open(int x, int y) const {
    if (!leq(x, y)) throw not_comparable();
    std::vector<int> verts;
    for (int z = 0; z < m_; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) verts.push_back(z);
    return reduced_euler(verts, topo_, [this](int a, int b) {
        return a != b && leq(a, b);
    });
}

}  // namespace positroid
