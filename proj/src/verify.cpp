#include "positroid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "positroid/enumerate.hpp"
#include "positroid/errors.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

Json VerificationReport::to_json() const {
    Json j;
    j["theorem"] = theorem;
    j["params"] = params;
    j["instances"] = instances;
    j["pass"] = pass();
    j["counterexamples"] = Json::array();
    for (const Json& c : counterexamples) j["counterexamples"].push_back(c);
    j["wall_ms"] = wall_ms;
    return j;
}

const std::vector<std::string>& verification_ids() {
    static const std::vector<std::string> ids = {
        "main-5.1",      "dasilva-5.2", "noncrossing-3.7",
        "closure-3.5",   "rotate-4.10", "restrict-4.12",
        "connected-4.13", "poset-6.6",  "isomorphism-6.13"};
    return ids;
}

namespace {

// Shards 0..count-1 over threads; counterexamples come back in index order
// so reports do not depend on the schedule.
void parallel_sweep(long long count,
                    const std::function<std::optional<Json>(long long)>& check,
                    VerificationReport& rep) {
    std::vector<std::pair<long long, Json>> found;
#pragma omp parallel
    {
        std::vector<std::pair<long long, Json>> local;
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < count; ++i)
            if (auto j = check(i)) local.emplace_back(i, *j);
#pragma omp critical
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, j] : found) rep.counterexamples.push_back(std::move(j));
    rep.instances += count;
}

std::vector<int> ranks_for(int n, std::optional<int> k_filter) {
    std::vector<int> ks;
    for (int k = 0; k <= n; ++k)
        if (!k_filter || *k_filter == k) ks.push_back(k);
    return ks;
}

VerificationReport verify_orientable_implies_positroid(int n_max,
                                                       std::optional<int> k_filter,
                                                       bool inject_fault) {
    VerificationReport rep;
    bool faulted = false;
    for (int n = 0; n <= n_max; ++n)
        for (int k : ranks_for(n, k_filter)) {
            const std::vector<Matroid> all = enumerate_matroids(n, k);
            const bool flip_first = inject_fault && !faulted && !all.empty();
            faulted = faulted || flip_first;
            parallel_sweep(
                static_cast<long long>(all.size()),
                [&](long long i) -> std::optional<Json> {
                    const Matroid& m = all[i];
                    if (!indicator_chirotope(m)) return std::nullopt;
                    PositroidVerdict v = is_positroid(m);
                    if (flip_first && i == 0) v.positive = !v.positive;
                    if (v.positive) return std::nullopt;
                    Json c;
                    c["matroid"] = matroid_to_json(m);
                    c["note"] = "positively orientable but not a positroid";
                    if (v.certificate) c["certificate"] = subset_to_json(*v.certificate);
                    return c;
                },
                rep);
        }
    return rep;
}

VerificationReport verify_dasilva_equivalence(int n_max, std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= n_max; ++n)
        for (int k : ranks_for(n, k_filter)) {
            const std::vector<Matroid> all = enumerate_matroids(n, k);
            parallel_sweep(
                static_cast<long long>(all.size()),
                [&](long long i) -> std::optional<Json> {
                    const Matroid& m = all[i];
                    const bool orientable = indicator_chirotope(m).has_value();
                    const DaSilvaCheck ds = da_silva_criterion(m);
                    if (orientable == ds.ok) return std::nullopt;
                    Json c;
                    c["matroid"] = matroid_to_json(m);
                    c["orientable"] = orientable;
                    c["da_silva"] = ds.ok;
                    if (ds.witness) {
                        c["circuit"] = subset_to_json(ds.witness->first);
                        c["cocircuit"] = subset_to_json(ds.witness->second);
                    }
                    return c;
                },
                rep);
        }
    return rep;
}

// Set partitions of [n] as restricted growth strings.
std::vector<std::vector<Mask>> set_partitions(int n) {
    std::vector<std::vector<Mask>> out;
    std::vector<int> block_of(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            std::vector<Mask> blocks(used, 0);
            for (int e = 0; e < n; ++e) blocks[block_of[e]] |= element_bit(e + 1);
            out.push_back(std::move(blocks));
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            block_of[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) return out;
    rec(0, 0);
    return out;
}

Matroid embed_matroid(const Matroid& m, Mask onto, int ambient) {
    const std::vector<int> targets = elements(onto);
    std::vector<Mask> bases;
    bases.reserve(m.bases().size());
    for (Mask b : m.bases()) {
        Mask nb = 0;
        for (int e : elements(b)) nb |= element_bit(targets[e - 1]);
        bases.push_back(nb);
    }
    return Matroid::unchecked(ambient, onto, std::move(bases));
}

VerificationReport verify_noncrossing_decomposition(int n_max,
                                                    std::optional<int> k_filter) {
    VerificationReport rep;

    // Forward: the component partition of every positroid is non-crossing.
    for (int n = 0; n <= n_max; ++n)
        for (int k : ranks_for(n, k_filter)) {
            const std::vector<Matroid> ps = enumerate_positroids(n, k);
            parallel_sweep(
                static_cast<long long>(ps.size()),
                [&](long long i) -> std::optional<Json> {
                    const PartitionCheck pc = component_partition_check(ps[i]);
                    if (pc.noncrossing) return std::nullopt;
                    Json c;
                    c["matroid"] = matroid_to_json(ps[i]);
                    c["blocks"] = Json::array();
                    for (Mask b : pc.blocks) c["blocks"].push_back(subset_to_json(b));
                    return c;
                },
                rep);
        }

    // Converse: direct sums of connected positroids along every
    // non-crossing partition are positroids. Ground sizes capped at 5 to
    // keep the product sweep at desk scale.
    const int conv_max = std::min(n_max, 5);
    std::vector<std::vector<Matroid>> connected_by_size(conv_max + 1);
    for (int s = 1; s <= conv_max; ++s)
        for (int k = 0; k <= s; ++k)
            for (const Matroid& m : enumerate_positroids(s, k))
                if (is_connected(m)) connected_by_size[s].push_back(m);

    for (int n = 1; n <= conv_max; ++n) {
        for (const std::vector<Mask>& blocks : set_partitions(n)) {
            bool noncrossing = true;
            for (std::size_t i = 0; i < blocks.size() && noncrossing; ++i)
                for (std::size_t j = i + 1; j < blocks.size(); ++j)
                    if (!is_noncrossing(blocks[i], blocks[j], n)) {
                        noncrossing = false;
                        break;
                    }
            if (!noncrossing) continue;

            // Odometer over the choice of a connected positroid per block.
            std::vector<std::size_t> pick(blocks.size(), 0);
            while (true) {
                Matroid sum = Matroid::unchecked(n, 0, {0});
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    const auto& pool = connected_by_size[popcount(blocks[b])];
                    sum = direct_sum(sum, embed_matroid(pool[pick[b]], blocks[b], n));
                }
                ++rep.instances;
                if (!is_positroid(sum).positive) {
                    Json c;
                    c["matroid"] = matroid_to_json(sum);
                    c["note"] = "non-crossing direct sum failed the positroid test";
                    Json bl = Json::array();
                    for (Mask b : blocks) bl.push_back(subset_to_json(b));
                    c["blocks"] = bl;
                    rep.counterexamples.push_back(c);
                }
                std::size_t pos = 0;
                while (pos < blocks.size() &&
                       ++pick[pos] == connected_by_size[popcount(blocks[pos])].size())
                    pick[pos++] = 0;
                if (pos == blocks.size()) break;
            }
        }
    }
    return rep;
}

VerificationReport verify_minor_closure(int n_max, std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= n_max; ++n)
        for (int k : ranks_for(n, k_filter)) {
            const std::vector<Matroid> ps = enumerate_positroids(n, k);
            parallel_sweep(
                static_cast<long long>(ps.size()),
                [&](long long i) -> std::optional<Json> {
                    const Matroid& m = ps[i];
                    Json bad = Json::array();
                    if (!is_positroid(reindexed(dual(m)).first).positive)
                        bad.push_back("dual");
                    for (Mask s : all_submasks(full_mask(n))) {
                        if (!is_positroid(reindexed(restriction(m, s)).first).positive)
                            bad.push_back(Json{{"restriction", subset_to_json(s)}});
                        if (!is_positroid(reindexed(contraction(m, s)).first).positive)
                            bad.push_back(Json{{"contraction", subset_to_json(s)}});
                    }
                    if (bad.empty()) return std::nullopt;
                    Json c;
                    c["matroid"] = matroid_to_json(m);
                    c["failed_minors"] = bad;
                    return c;
                },
                rep);
        }
    return rep;
}

// Chirotope-level campaigns sweep all 3^C(n,d) sign maps, so their ground
// size is capped at 5 regardless of the requested bound.
constexpr int kChirotopeSweepMax = 5;

VerificationReport verify_rotation_invariance(int n_max, std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= std::min(n_max, kChirotopeSweepMax); ++n)
        for (int d : ranks_for(n, k_filter)) {
            const std::vector<Chirotope> chis = enumerate_chirotopes(n, d);
            parallel_sweep(
                static_cast<long long>(chis.size()),
                [&](long long i) -> std::optional<Json> {
                    const Chirotope& chi = chis[i];
                    const bool expect = is_positively_orientable(chi);
                    for (int first = 1; first <= n; ++first) {
                        if (is_positively_orientable(rotate_order(chi, first)) !=
                            expect) {
                            Json c;
                            c["chirotope"] = chirotope_to_json(chi);
                            c["rotation"] = first;
                            c["orientable_before"] = expect;
                            return c;
                        }
                    }
                    return std::nullopt;
                },
                rep);
        }
    return rep;
}

VerificationReport verify_restriction_preservation(int n_max,
                                                   std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= std::min(n_max, kChirotopeSweepMax); ++n)
        for (int d : ranks_for(n, k_filter)) {
            const std::vector<Chirotope> chis = enumerate_chirotopes(n, d);
            parallel_sweep(
                static_cast<long long>(chis.size()),
                [&](long long i) -> std::optional<Json> {
                    const Chirotope& chi = chis[i];
                    if (!is_positively_orientable(chi)) return std::nullopt;
                    for (Mask s : all_submasks(full_mask(n))) {
                        if (!is_positively_orientable(om_restriction(chi, s))) {
                            Json c;
                            c["chirotope"] = chirotope_to_json(chi);
                            c["restricted_to"] = subset_to_json(s);
                            return c;
                        }
                    }
                    return std::nullopt;
                },
                rep);
        }
    return rep;
}

VerificationReport verify_connectivity_agreement(int n_max,
                                                 std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= std::min(n_max, kChirotopeSweepMax); ++n)
        for (int d : ranks_for(n, k_filter)) {
            const std::vector<Chirotope> chis = enumerate_chirotopes(n, d);
            parallel_sweep(
                static_cast<long long>(chis.size()),
                [&](long long i) -> std::optional<Json> {
                    const bool via_matroid = om_is_connected(chis[i]);
                    const bool via_circuits = om_is_connected_via_circuits(chis[i]);
                    if (via_matroid == via_circuits) return std::nullopt;
                    Json c;
                    c["chirotope"] = chirotope_to_json(chis[i]);
                    c["via_matroid"] = via_matroid;
                    c["via_signed_circuits"] = via_circuits;
                    return c;
                },
                rep);
        }
    return rep;
}

constexpr std::pair<int, int> kPosetPairs[] = {
    {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};

VerificationReport verify_poset_topology(int n_max, std::optional<int> k_filter) {
    VerificationReport rep;
    for (auto [k, n] : kPosetPairs) {
        if (n > n_max) continue;
        if (k_filter && *k_filter != k) continue;
        const MacphersonianPlus mp = build_macphersonian_plus(k, n);
        const Poset& p = mp.poset;
        ++rep.instances;

        Json issues = Json::array();
        const PosetDiagnostics diag = p.diagnostics();
        if (!diag.graded) issues.push_back("not graded");
        if (!diag.thin) issues.push_back("not thin");
        if (!diag.eulerian) issues.push_back("not eulerian");
        if (!mp.orders_coincide())
            issues.push_back("specialization differs from basis containment");

        // Unique maximum, and it must be the uniform one.
        int top = -1, maximal = 0;
        for (int x = 0; x < p.size(); ++x) {
            bool is_max = true;
            for (int y = 0; y < p.size(); ++y)
                if (y != x && p.leq(x, y)) is_max = false;
            if (is_max) {
                top = x;
                ++maximal;
            }
        }
        if (maximal != 1) issues.push_back("maximum is not unique");
        if (top >= 1 && !(mp.matroids[top - 1] == uniform_matroid(n, k)))
            issues.push_back("maximum is not the uniform matroid");
        if (top >= 0 && p.interval_length(0, top) != k * (n - k) + 1)
            issues.push_back("bottom-to-top length is not k(n-k)+1");

        // Sphere consistency for every lower interval, ball for the whole.
        for (int x = 1; x < p.size(); ++x) {
            const int len = p.interval_length(0, x);
            const long long expect = (len % 2 == 0) ? 1 : -1;  // (-1)^(len-2)
            if (p.order_complex_euler_open(0, x) != expect) {
                issues.push_back(Json{{"interval_to", p.label(x)},
                                      {"expected", expect},
                                      {"euler", p.order_complex_euler_open(0, x)}});
            }
        }
        if (p.order_complex_euler() != 0)
            issues.push_back(Json{{"whole_complex_euler", p.order_complex_euler()}});

        if (!issues.empty()) {
            Json c;
            c["k"] = k;
            c["n"] = n;
            c["issues"] = issues;
            rep.counterexamples.push_back(c);
        }
    }
    return rep;
}

VerificationReport verify_order_isomorphism(int n_max, std::optional<int> k_filter) {
    VerificationReport rep;
    for (int n = 0; n <= n_max; ++n)
        for (int k : ranks_for(n, k_filter)) {
            const MacphersonianPlus mp = build_macphersonian_plus(k, n);
            ++rep.instances;
            if (!mp.orders_coincide()) {
                Json c;
                c["k"] = k;
                c["n"] = n;
                c["note"] = "specialization and basis containment orders differ";
                rep.counterexamples.push_back(c);
            }
        }
    return rep;
}

}  // namespace

VerificationReport verify_equivalence_suite(int n_max) {
    VerificationReport rep;
    rep.theorem = "equivalence";
    rep.params["n_max"] = n_max;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            const std::vector<Matroid> all = enumerate_matroids(n, k);
            parallel_sweep(
                static_cast<long long>(all.size()),
                [&](long long i) -> std::optional<Json> {
                    const Matroid& m = all[i];
                    const bool a = indicator_chirotope(m).has_value();
                    const bool b = da_silva_criterion(m).ok;
                    const bool c = is_positroid(m).positive;
                    const bool d = is_positroid_gale(m).positive;
                    if (a == b && b == c && c == d) return std::nullopt;
                    Json j;
                    j["matroid"] = matroid_to_json(m);
                    j["indicator_chirotope"] = a;
                    j["da_silva"] = b;
                    j["interval_sweep"] = c;
                    j["gale_oracle"] = d;
                    return j;
                },
                rep);
        }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

VerificationReport run_verification(const std::string& id, int n_max,
                                    std::optional<int> k_filter, bool inject_fault) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (id == "main-5.1")
        rep = verify_orientable_implies_positroid(n_max, k_filter, inject_fault);
    else if (id == "dasilva-5.2")
        rep = verify_dasilva_equivalence(n_max, k_filter);
    else if (id == "noncrossing-3.7")
        rep = verify_noncrossing_decomposition(n_max, k_filter);
    else if (id == "closure-3.5")
        rep = verify_minor_closure(n_max, k_filter);
    else if (id == "rotate-4.10")
        rep = verify_rotation_invariance(n_max, k_filter);
    else if (id == "restrict-4.12")
        rep = verify_restriction_preservation(n_max, k_filter);
    else if (id == "connected-4.13")
        rep = verify_connectivity_agreement(n_max, k_filter);
    else if (id == "poset-6.6")
        rep = verify_poset_topology(n_max, k_filter);
    else if (id == "isomorphism-6.13")
        rep = verify_order_isomorphism(n_max, k_filter);
    else
        throw unknown_theorem(id);
    rep.theorem = id;
    rep.params["n_max"] = n_max;
    if (k_filter) rep.params["k"] = *k_filter;
    if (inject_fault) rep.params["inject_fault"] = true;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

}  // namespace positroid
