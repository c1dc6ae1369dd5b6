// Acceptance suite: one line per criterion, zero-tolerance (exact
// arithmetic, so a single counterexample fails the criterion).
#include <chrono>
#include <cstdio>
#include <string>

#include "positroid/enumerate.hpp"
#include "positroid/matrix.hpp"
#include "positroid/positroid.hpp"
#include "positroid/verify.hpp"

using namespace positroid;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool pass, long long instances,
            double wall_ms) {
    std::printf("%s  %d. %s (%lld instances, %.0f ms)\n", pass ? "PASS" : "FAIL",
                index, what.c_str(), instances, wall_ms);
    if (!pass) ++g_failures;
}

void report_campaign(int index, const std::string& what, const VerificationReport& r) {
    report(index, what, r.pass(), r.instances, r.wall_ms);
    if (!r.pass()) {
        for (const Json& c : r.counterexamples) {
            std::printf("      counterexample: %s\n", c.dump().c_str());
            break;  // the first is enough for the log
        }
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

std::uint64_t lcg(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
}

void criterion_counting() {
    const auto t0 = std::chrono::steady_clock::now();
    // Fixtures from the fixed-point-weighted permutation count.
    const long long frozen[] = {2, 5, 16, 65, 326};  // n = 1..5
    long long instances = 0;
    bool pass = true;
    for (int n = 1; n <= 5; ++n) {
        long long total = 0;
        for (int k = 0; k <= n; ++k)
            total += static_cast<long long>(enumerate_positroids(n, k).size());
        instances += total;
        const long long oracle = decorated_permutation_count(n);
        if (total != oracle || total != frozen[n - 1]) {
            pass = false;
            std::printf("      n=%d enumerated=%lld oracle=%lld frozen=%lld\n", n,
                        total, oracle, frozen[n - 1]);
        }
    }
    report(8, "positroid counts match the decorated-permutation oracle (n<=5)", pass,
           instances, ms_since(t0));
}

void criterion_realization() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    long long instances = 0;
    std::uint64_t state = 20140215;

    for (int d = 1; d <= 4; ++d)
        for (int n = d; n <= 8; ++n)
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<Rational> xs;
                Rational cur =
                    make_rational(static_cast<long>(lcg(state) % 11) - 5, 1);
                for (int i = 0; i < n; ++i) {
                    cur += make_rational(1 + static_cast<long>(lcg(state) % 20),
                                         1 + static_cast<long>(lcg(state) % 10));
                    xs.push_back(cur);
                }
                const RationalMatrix a = moment_curve_matrix(d, xs);
                ++instances;
                for (Mask cols : subsets_of_size(full_mask(n), d))
                    if (sign_of(maximal_minor(a, cols)) != 1) pass = false;
                if (!(matroid_of_matrix(a) == uniform_matroid(n, d))) pass = false;
            }

    // Every totally nonnegative matrix in the corpus realizes a positroid.
    std::vector<RationalMatrix> corpus;
    corpus.push_back(moment_curve_matrix(
        2, {Rational(0), Rational(1), Rational(2), Rational(7)}));
    corpus.push_back(moment_curve_matrix(
        4, {Rational(-2), Rational(0), make_rational(1, 2), Rational(3), Rational(5)}));
    {
        RationalMatrix blocks(2, 4);
        blocks.at(0, 0) = Rational(1);
        blocks.at(0, 1) = Rational(1);
        blocks.at(1, 2) = Rational(1);
        blocks.at(1, 3) = Rational(1);
        corpus.push_back(blocks);
    }
    {
        RationalMatrix tri(2, 2);
        tri.at(0, 0) = Rational(1);
        tri.at(1, 0) = Rational(-1);
        tri.at(1, 1) = Rational(1);
        corpus.push_back(tri);  // negative entry, still totally nonnegative
    }
    {
        RationalMatrix with_loop(1, 3);
        with_loop.at(0, 1) = Rational(1);
        with_loop.at(0, 2) = make_rational(3, 7);
        corpus.push_back(with_loop);
    }
    for (const RationalMatrix& a : corpus) {
        ++instances;
        if (!is_totally_nonnegative(a)) pass = false;
        if (!is_positroid(matroid_of_matrix(a)).positive) pass = false;
    }
    report(9, "moment-curve and corpus realizations check out exactly", pass,
           instances, ms_since(t0));
}

}  // namespace

int main() {
    std::printf("acceptance suite, exact arithmetic, zero tolerance\n");

    report_campaign(1, "every positively orientable matroid is a positroid (n<=6)",
                    run_verification("main-5.1", 6, std::nullopt));
    report_campaign(2, "indicator / da Silva / interval sweep / Gale agree (n<=6)",
                    verify_equivalence_suite(6));
    report_campaign(3, "positroids closed under dual, restriction, contraction (n<=5)",
                    run_verification("closure-3.5", 5, std::nullopt));
    report_campaign(4, "non-crossing decomposition, both directions (n<=6 / n<=5)",
                    run_verification("noncrossing-3.7", 6, std::nullopt));
    {
        VerificationReport rot = run_verification("rotate-4.10", 5, std::nullopt);
        VerificationReport res = run_verification("restrict-4.12", 5, std::nullopt);
        VerificationReport merged;
        merged.instances = rot.instances + res.instances;
        merged.wall_ms = rot.wall_ms + res.wall_ms;
        for (auto& c : rot.counterexamples) merged.counterexamples.push_back(c);
        for (auto& c : res.counterexamples) merged.counterexamples.push_back(c);
        report_campaign(5,
                        "positive orientability survives rotation and restriction "
                        "(n<=5)",
                        merged);
    }
    report_campaign(6, "matroid and signed-circuit connectivity agree (n<=5)",
                    run_verification("connected-4.13", 5, std::nullopt));
    report_campaign(7,
                    "specialization posets graded/thin/eulerian with sphere-and-ball "
                    "euler characteristics",
                    run_verification("poset-6.6", 5, std::nullopt));
    criterion_counting();
    criterion_realization();

    if (g_failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
}
