// acceptance.cpp — the acceptance gate: one criterion per numbered block,
// every comparison exact (ExactScalar equality, tolerance zero), one
// PASS/FAIL line each. Exit status is the number of failed criteria.

#include "qca/example.hpp"

#include <chrono>
#include <cstdio>

using namespace qca;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count() /
           1000.0;
}

void verdict(int n, const std::string& what, bool ok, double secs,
             const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                secs, detail.empty() ? "" : (" — " + detail).c_str());
    if (!ok) ++failures;
}

struct SuiteRun {
    Report report;
    double secs;
};

SuiteRun run(const std::string& suite, const QuiverContext& ctx, const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Catalog cat(ctx);
    HallAlgebra alg(cat);
    Report r = run_suite(suite, cat, alg, cfg);
    return {std::move(r), seconds_since(t0)};
}

std::string tally(const Report& r) {
    return r.summary();
}

SuiteConfig config_for(const std::string& name, int cap, int total_cap = -1,
                       uint64_t seed = 1) {
    SuiteConfig cfg;
    cfg.cap = cap;
    cfg.total_cap = total_cap;
    cfg.seed = seed;
    cfg.nrandom = 200;
    cfg.context_name = name;
    return cfg;
}

} // namespace

int main() {
    const QuiverContext k2 = kronecker_context(2);
    const QuiverContext a2 = a2_valued_context(2);

    // 1. Kronecker reproduction at q0 = 2 and q0 = 3, each under 30 s.
    for (int q0 : {2, 3}) {
        auto t0 = std::chrono::steady_clock::now();
        ExampleResult res = kronecker_example(q0);
        double secs = seconds_since(t0);
        bool ok = res.report.ok() && res.report.skipped == 0 && res.report.instances >= 6 &&
                  secs < 30.0;
        verdict(1, "Kronecker worked example, q0=" + std::to_string(q0), ok, secs,
                tally(res.report));
    }

    // 2. Theorem suite for X_M X_N: every ordered pair with per-vertex dims <= 1,
    //    in K2 and the valued A2 context, both over F4.
    for (const auto& [name, ctx] : {std::pair<std::string, const QuiverContext&>{"K2", k2},
                                    {"A2", a2}}) {
        SuiteRun sr = run("thm-ddlz", ctx, config_for(name, 1));
        bool ok = sr.report.failed == 0 && sr.report.skipped == 0 &&
                  sr.report.instances > 0 && sr.secs < 300.0;
        verdict(2, "cluster multiplication X_M X_N, cap 1, " + name, ok, sr.secs,
                tally(sr.report));
    }

    // 3. Theorem suite for X_{P[1]} X_M: every M with per-vertex dims <= 2 and
    //    every indecomposable injective in K2.
    {
        SuiteRun sr = run("thm-dyggs", k2, config_for("K2", 2));
        bool ok = sr.report.failed == 0 && sr.report.skipped == 0 &&
                  sr.report.instances > 0 && sr.secs < 300.0;
        verdict(3, "multiplication with shifted projectives, cap 2, K2", ok, sr.secs,
                tally(sr.report));
    }

    // 4. Green's formula for all class quadruples of total vertex-field
    //    dimension <= 2 in K2 at q0 = 2.
    {
        SuiteRun sr = run("green", k2, config_for("K2", 2, 2));
        bool ok = sr.report.failed == 0 && sr.report.skipped == 0 &&
                  sr.report.instances > 0 && sr.secs < 300.0;
        verdict(4, "Green's formula, total dim <= 2, K2", ok, sr.secs, tally(sr.report));
    }

    // 5./6. psi homomorphism and factorization on all decorated pairs with
    //    module parts <= 1 per vertex and single-entry shift multisets.
    for (const auto& [name, ctx] : {std::pair<std::string, const QuiverContext&>{"K2", k2},
                                    {"A2", a2}}) {
        SuiteRun hom = run("psi-hom", ctx, config_for(name, 1));
        verdict(5, "psi is an algebra homomorphism, " + name,
                hom.report.failed == 0 && hom.report.skipped == 0 && hom.report.instances > 0,
                hom.secs, tally(hom.report));
        SuiteRun fac = run("psi-factor", ctx, config_for(name, 1));
        verdict(6, "psi factors through Delta and the integration maps, " + name,
                fac.report.failed == 0 && fac.report.skipped == 0 && fac.report.instances > 0,
                fac.secs, tally(fac.report));
    }

    // 7. Relation suites: the eight generator relations, their torus forms,
    //    and the two corollaries on hypothesis-satisfying instances.
    for (const auto& [name, ctx] : {std::pair<std::string, const QuiverContext&>{"K2", k2},
                                    {"A2", a2}}) {
        SuiteRun p41 = run("prop41", ctx, config_for(name, 1));
        SuiteRun cfgs = run("hallcfgs", ctx, config_for(name, 1));
        SuiteRun c410 = run("cor410", ctx, config_for(name, 1));
        SuiteRun c411 = run("cor411", ctx, config_for(name, 1));
        bool ok = p41.report.failed == 0 && p41.report.skipped == 0 &&
                  cfgs.report.failed == 0 && cfgs.report.skipped == 0 &&
                  c410.report.failed == 0 && c410.report.passed > 0 &&
                  c411.report.failed == 0 && c411.report.skipped == 0;
        verdict(7, "generator relation suites, " + name, ok,
                p41.secs + cfgs.secs + c410.secs + c411.secs,
                tally(p41.report) + "; " + tally(cfgs.report) + "; " + tally(c410.report) +
                    "; " + tally(c411.report));
    }

    // 8. Counting cross-checks: class partition of Ext, AR formula, Hall
    //    associativity, split-sum identity, orbit-stabilizer consistency.
    for (const auto& [name, ctx] : {std::pair<std::string, const QuiverContext&>{"K2", k2},
                                    {"A2", a2}}) {
        SuiteRun cnt = run("counting", ctx, config_for(name, 1));
        SuiteRun assoc = run("hall-assoc", ctx, config_for(name, 1));
        SuiteRun split = run("split-sum", ctx, config_for(name, 1));
        // orbit-stabilizer consistency is asserted inside every classify call;
        // drive it explicitly across the dims the other suites touched
        bool orbits_ok = true;
        try {
            Catalog cat(ctx);
            cat.classes_up_to({2, 2});
        } catch (const std::exception&) {
            orbits_ok = false;
        }
        bool ok = cnt.report.failed == 0 && cnt.report.skipped == 0 &&
                  assoc.report.failed == 0 && assoc.report.passed > 0 &&
                  split.report.failed == 0 && split.report.skipped == 0 && orbits_ok;
        verdict(8, "counting cross-checks, " + name, ok, cnt.secs + assoc.secs + split.secs,
                tally(cnt.report) + "; " + tally(assoc.report) + "; " + tally(split.report));
    }

    // 9. Matrix-identity suites on 200 random vectors per context, plus the
    //    stratification exponent identity on actual strata.
    for (const auto& [name, ctx] : {std::pair<std::string, const QuiverContext&>{"K2", k2},
                                    {"A2", a2}}) {
        SuiteRun mat = run("matrix", ctx, config_for(name, 1, -1, 2026));
        SuiteRun l73 = run("lemma73", ctx, config_for(name, 1));
        bool ok = mat.report.failed == 0 && mat.report.skipped == 0 &&
                  mat.report.instances >= 200 && l73.report.failed == 0 &&
                  l73.report.skipped == 0;
        verdict(9, "matrix identity suites, " + name, ok, mat.secs + l73.secs,
                tally(mat.report) + "; " + tally(l73.report));
    }

    // 10. Determinism: two full runs with the same seed produce identical
    //     reports.
    {
        auto t0 = std::chrono::steady_clock::now();
        auto run_full = [&]() {
            nlohmann::json all = nlohmann::json::array();
            Catalog cat(k2);
            HallAlgebra alg(cat);
            for (const std::string& s : suite_names())
                all.push_back(run_suite(s, cat, alg, config_for("K2", 1, -1, 42)).to_json());
            return all.dump();
        };
        std::string first = run_full();
        std::string second = run_full();
        verdict(10, "determinism of the full suite", first == second, seconds_since(t0),
                "report bytes " + std::to_string(first.size()));
    }

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criterion group(s) FAILED\n", failures);
    return failures;
}
