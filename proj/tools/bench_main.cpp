// Compares the OpenMP kernels against their serial references on inputs
// big enough to matter: the 3-term sign-condition sweep and the positroid
// subset sweep.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "positroid/chirotope.hpp"
#include "positroid/matroid.hpp"
#include "positroid/positroid.hpp"

using namespace positroid;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

void bench_gp(int n, int d, int reps) {
    std::vector<std::int8_t> signs(binom(n, d), 1);  // uniform: no violation
    double serial = 0, parallel = 0;
    bool any = false;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        any = any || find_gp_violation_serial(n, d, signs).has_value();
        serial += ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        any = any || find_gp_violation(n, d, signs).has_value();
        parallel += ms_since(t0);
    }
    std::cout << "gp-sweep        n=" << n << " d=" << d << "  serial "
              << serial / reps << " ms   parallel " << parallel / reps
              << " ms   speedup " << serial / parallel
              << (any ? "  (unexpected violation!)" : "") << "\n";
}

// Two uniform blocks glued side by side: plenty of non-bases, so the
// interval-bound sweep does real work on most subsets.
Matroid block_sum(int n) {
    const int half = n / 2;
    std::vector<Mask> bases;
    for (Mask a : subsets_of_size(full_mask(half), half / 2))
        for (Mask b : subsets_of_size(full_mask(n) & ~full_mask(half), (n - half) / 2))
            bases.push_back(a | b);
    return Matroid::unchecked(n, full_mask(n), std::move(bases));
}

void bench_positroid(int n, int reps) {
    const Matroid m = block_sum(n);
    double serial = 0, parallel = 0;
    bool ok = true;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        ok = ok && is_positroid_serial(m).positive;
        serial += ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        ok = ok && is_positroid(m).positive;
        parallel += ms_since(t0);
    }
    std::cout << "positroid-sweep n=" << n << " k=" << m.rank() << "  serial "
              << serial / reps << " ms   parallel " << parallel / reps
              << " ms   speedup " << serial / parallel
              << (ok ? "" : "  (unexpected verdict!)") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::atoi(argv[1]);
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    bench_gp(13, 5, reps);
    bench_gp(14, 6, reps);
    bench_positroid(14, reps);
    bench_positroid(16, reps);
    return 0;
}
