// Exhaustive verification campaigns over enumerated instances. Each one
// sweeps a parameter range, collects counterexamples with full witnesses,
// and reports deterministically regardless of sharding.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroid/json_io.hpp"

namespace positroid {

struct VerificationReport {
    std::string theorem;
    Json params = Json::object();
    long long instances = 0;
    std::vector<Json> counterexamples;
    double wall_ms = 0;

    bool pass() const { return counterexamples.empty(); }
    Json to_json() const;
};

// The theorem ids accepted by `verify`.
const std::vector<std::string>& verification_ids();

// Runs one campaign up to ground size n_max (rank restricted to *k_filter
// when given). `inject_fault` deliberately corrupts one verdict so the
// failure path of the harness can be exercised end to end.
VerificationReport run_verification(const std::string& id, int n_max,
                                    std::optional<int> k_filter,
                                    bool inject_fault = false);

// Four-route agreement per matroid: all-plus chirotope validity, the
// circuit/cocircuit criterion, the interval-bound sweep, and the
// necklace/Gale oracle must return the same verdict.
VerificationReport verify_equivalence_suite(int n_max);

}  // namespace positroid
