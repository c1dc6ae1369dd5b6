// Command-line front end: analyze one object, run exhaustive verification
// campaigns, enumerate matroid classes, or build the specialization poset.
// Exit codes: 0 pass, 1 counterexample or property failure, 2 input error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/json_io.hpp"
#include "positroid/matrix.hpp"
#include "positroid/positroid.hpp"
#include "positroid/verify.hpp"

namespace {

using positroid::Json;

int soft_ground_bound() {
    if (const char* env = std::getenv("POSITROID_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 6;
}

Json analyze_matroid(const positroid::Matroid& m) {
    using namespace positroid;
    Json out;
    out["n"] = m.n();
    out["rank"] = m.rank();
    out["bases_count"] = m.bases().size();

    Json cs = Json::array();
    for (Mask c : circuits(m)) cs.push_back(subset_to_json(c));
    out["circuits"] = cs;
    Json cos = Json::array();
    for (Mask c : cocircuits(m)) cos.push_back(subset_to_json(c));
    out["cocircuits"] = cos;

    const PartitionCheck pc = component_partition_check(m);
    Json blocks = Json::array();
    for (Mask b : pc.blocks) blocks.push_back(subset_to_json(b));
    out["components"] = blocks;
    out["components_noncrossing"] = pc.noncrossing;

    Json necklace = Json::array();
    for (Mask i : grassmann_necklace(m)) necklace.push_back(subset_to_json(i));
    out["grassmann_necklace"] = necklace;

    const PositroidVerdict pv = is_positroid(m);
    out["positroid"] = pv.positive;
    out["positroid_certificate"] =
        pv.certificate ? subset_to_json(*pv.certificate) : Json(nullptr);

    const DaSilvaCheck ds = da_silva_criterion(m);
    out["da_silva"] = ds.ok;
    if (ds.witness) {
        out["da_silva_witness"] = Json{{"circuit", subset_to_json(ds.witness->first)},
                                       {"cocircuit", subset_to_json(ds.witness->second)}};
    } else {
        out["da_silva_witness"] = Json(nullptr);
    }

    out["circular"] = is_circular(m);

    GpViolation gp{};
    if (auto chi = indicator_chirotope(m, &gp)) {
        out["positively_orientable"] = true;
        const auto a = positive_reorientation(*chi);
        out["reorientation"] = a ? subset_to_json(*a) : Json(nullptr);
    } else {
        out["positively_orientable"] = false;
        out["gp_witness"] = Json{{"v", Json::array({gp.v1, gp.v2, gp.v3, gp.v4})},
                                 {"ys", subset_to_json(gp.ys)}};
    }
    return out;
}

int cmd_analyze(const std::string& path) {
    using namespace positroid;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        std::cerr << "JSON parse failure: " << e.what() << "\n";
        return 2;
    }
    try {
        Json out;
        switch (detect_kind(j)) {
            case InputKind::matroid: {
                out = analyze_matroid(matroid_from_json(j));
                out["kind"] = "matroid";
                break;
            }
            case InputKind::chirotope: {
                const Chirotope chi = chirotope_from_json(j);
                out = analyze_matroid(chi.underlying_matroid());
                out["kind"] = "chirotope";
                const auto a = positive_reorientation(chi);
                out["positively_orientable"] = a.has_value();
                out["reorientation"] = a ? subset_to_json(*a) : Json(nullptr);
                Json scs = Json::array();
                for (const SignedSet& c : signed_circuits(chi))
                    scs.push_back(Json{{"positive", subset_to_json(c.pos)},
                                       {"negative", subset_to_json(c.neg)}});
                out["signed_circuits"] = scs;
                break;
            }
            case InputKind::matrix: {
                const RationalMatrix a = matrix_from_json(j);
                const Chirotope chi = chirotope_from_matrix(a);
                out = analyze_matroid(chi.underlying_matroid());
                out["kind"] = "matrix";
                out["totally_nonnegative"] = is_totally_nonnegative(a);
                out["chirotope"] = chirotope_to_json(chi);
                break;
            }
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const std::string& theorem, int n_max, std::optional<int> k,
               const std::string& out_path, bool inject_fault) {
    using namespace positroid;
    if (n_max > soft_ground_bound())
        std::cerr << "warning: n=" << n_max
                  << " exceeds the soft bound; this may take a very long time\n";
    VerificationReport rep;
    try {
        rep = run_verification(theorem, n_max, k, inject_fault);
    } catch (const unknown_theorem& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    const Json j = rep.to_json();
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cout << (rep.pass() ? "pass" : "FAIL") << " " << theorem << " ("
                  << rep.instances << " instances)\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_enumerate(const std::string& kind, int n, int k, bool count_only) {
    using namespace positroid;
    if (kind == "matroids" || kind == "positroids") {
        const auto all =
            kind == "matroids" ? enumerate_matroids(n, k) : enumerate_positroids(n, k);
        if (count_only) {
            std::cout << Json{{"kind", kind}, {"n", n}, {"k", k}, {"count", all.size()}}
                             .dump()
                      << "\n";
            return 0;
        }
        for (const Matroid& m : all) std::cout << matroid_to_json(m).dump() << "\n";
        return 0;
    }
    if (kind == "poms") {
        const auto all = enumerate_pom_matroids(n, k);
        if (count_only) {
            std::cout << Json{{"kind", kind}, {"n", n}, {"k", k}, {"count", all.size()}}
                             .dump()
                      << "\n";
            return 0;
        }
        for (const Matroid& m : all)
            std::cout << chirotope_to_json(*indicator_chirotope(m)).dump() << "\n";
        return 0;
    }
    std::cerr << "unknown kind: " << kind << " (want matroids|positroids|poms)\n";
    return 2;
}

int cmd_poset(int k, int n, bool check, const std::string& export_format,
              const std::string& out_path, bool reorientation_closed) {
    using namespace positroid;
    const MacphersonianPlus mp = reorientation_closed
                                     ? build_macphersonian_plus_reorientation_closed(k, n)
                                     : build_macphersonian_plus(k, n);
    int rc = 0;
    Json report;
    report["k"] = k;
    report["n"] = n;
    report["elements"] = mp.poset.size();
    if (check) {
        const PosetDiagnostics diag = mp.poset.diagnostics();
        report["graded"] = diag.graded;
        report["thin"] = diag.thin;
        report["eulerian"] = diag.eulerian;
        Json rv = Json::array();
        for (int c : diag.rank_vector) rv.push_back(c);
        report["rank_vector"] = rv;
        report["isomorphic_to_containment_order"] = mp.orders_coincide();
        if (!(diag.graded && diag.thin && diag.eulerian && mp.orders_coincide()))
            rc = 1;
    }
    std::ostream* sink = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        sink = &file;
    }
    if (export_format == "dot")
        *sink << poset_to_dot(mp.poset);
    else if (export_format == "json")
        *sink << poset_to_json(mp.poset).dump(2) << "\n";
    else if (!export_format.empty()) {
        std::cerr << "unknown export format: " << export_format << "\n";
        return 2;
    }
    // Keep a lone stdout export machine-readable: report moves to stderr.
    const bool exporting_to_stdout = !export_format.empty() && out_path.empty();
    (exporting_to_stdout ? std::cerr : std::cout) << report.dump(2) << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid / oriented matroid / positroid toolkit"};
    app.require_subcommand(1);

    int jobs = 0;

    std::string analyze_path;
    auto* analyze = app.add_subcommand("analyze", "analyze a matroid, chirotope or matrix JSON file");
    analyze->add_option("file", analyze_path, "input JSON file")->required();

    std::string theorem;
    int verify_n = 0;
    int verify_k = -1;
    std::string verify_out;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run an exhaustive verification campaign");
    verify->add_option("theorem", theorem, "one of: main-5.1 dasilva-5.2 noncrossing-3.7 closure-3.5 rotate-4.10 restrict-4.12 connected-4.13 poset-6.6 isomorphism-6.13")
        ->required();
    verify->add_option("--n", verify_n, "maximum ground set size")->required();
    verify->add_option("--k", verify_k, "restrict to one rank");
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->add_option("--jobs", jobs, "worker thread count");
    verify->add_flag("--inject-fault", inject_fault)->group("");  // harness self-test

    std::string enum_kind;
    int enum_n = 0, enum_k = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream canonical JSON objects, one per line");
    enumerate->add_option("kind", enum_kind, "matroids|positroids|poms")->required();
    enumerate->add_option("--n", enum_n, "ground set size")->required();
    enumerate->add_option("--k", enum_k, "rank")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count");

    int poset_k = 0, poset_n = 0;
    bool poset_check = false;
    std::string export_format, poset_out;
    bool reorientation_closed = false;
    auto* poset = app.add_subcommand("poset", "build the specialization poset with bottom adjoined");
    poset->add_option("k", poset_k, "rank")->required();
    poset->add_option("n", poset_n, "ground set size")->required();
    poset->add_flag("--check", poset_check, "run graded/thin/eulerian diagnostics");
    poset->add_option("--export", export_format, "dot|json");
    poset->add_option("--out", poset_out, "write the export here instead of stdout");
    poset->add_flag("--reorientation-closed", reorientation_closed)->group("");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (*analyze) return cmd_analyze(analyze_path);
        if (*verify)
            return cmd_verify(theorem, verify_n,
                              verify_k >= 0 ? std::optional<int>(verify_k) : std::nullopt,
                              verify_out, inject_fault);
        if (*enumerate) return cmd_enumerate(enum_kind, enum_n, enum_k, count_only);
        if (*poset)
            return cmd_poset(poset_k, poset_n, poset_check, export_format, poset_out,
                             reorientation_closed);
    } catch (const positroid::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
