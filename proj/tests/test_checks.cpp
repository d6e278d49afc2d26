#include "qca/example.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qca;

namespace {
void run_all(QuiverContext ctx, const std::string& name) {
    Catalog cat(ctx);
    HallAlgebra alg(cat);
    SuiteConfig cfg;
    cfg.cap = 1;
    cfg.nrandom = 50;
    cfg.context_name = name;
    for (const std::string& s : suite_names()) {
        Report r = run_suite(s, cat, alg, cfg);
        INFO(r.summary());
        INFO(r.counterexamples.dump(2));
        CHECK(r.failed == 0);
        CHECK(r.instances > 0);
        CHECK(r.passed > 0);
    }
}
} // namespace

TEST_CASE("all suites pass at cap 1 in the Kronecker context") {
    run_all(kronecker_context(2), "kronecker-q2");
}

TEST_CASE("all suites pass at cap 1 in the valued A2 context") {
    run_all(a2_valued_context(2), "a2-q2");
}

TEST_CASE("kronecker example verifies at q0 = 2 and 3") {
    for (int q0 : {2, 3}) {
        ExampleResult res = kronecker_example(q0);
        INFO(res.report.counterexamples.dump(2));
        CHECK(res.report.failed == 0);
        CHECK(res.report.instances >= 6);
    }
}

TEST_CASE("suite reports are well-formed JSON with the exit contract") {
    Catalog cat(kronecker_context(2));
    HallAlgebra alg(cat);
    SuiteConfig cfg;
    cfg.cap = 1;
    cfg.nrandom = 5;
    Report r = run_suite("matrix", cat, alg, cfg);
    auto j = r.to_json();
    CHECK(j.at("suite") == "matrix");
    CHECK(j.at("failed").get<long>() == 0);
    CHECK(j.at("instances").get<long>() ==
          j.at("passed").get<long>() + j.at("failed").get<long>() + j.at("skipped").get<long>());
    CHECK(r.ok());
}

TEST_CASE("unknown suite name is a usage error") {
    Catalog cat(kronecker_context(2));
    HallAlgebra alg(cat);
    CHECK_THROWS_AS(run_suite("nope", cat, alg, SuiteConfig{}), std::invalid_argument);
}

TEST_CASE("catalog cache roundtrip") {
    QuiverContext k2 = kronecker_context(2);
    Catalog cat(k2);
    cat.classes_up_to({1, 1});
    for (ClassId id : cat.classes_of_dim({1, 1})) cat.aut_order(id);
    cat.tau(cat.simple_class(1)); // registers the (3,2) class and a tau link
    nlohmann::json j = cat.to_cache_json();

    Catalog fresh(k2);
    REQUIRE(fresh.load_cache_json(j));
    CHECK(fresh.dim_classified({1, 1}));
    REQUIRE(fresh.classes_of_dim({1, 1}).size() == 6);
    for (int ord = 0; ord < 6; ++ord) {
        ClassId a = cat.class_by_ordinal({1, 1}, ord);
        ClassId b = fresh.class_by_ordinal({1, 1}, ord);
        CHECK(cat.aut_order(a) == fresh.aut_order(b));
        CHECK(rep_encode(cat.rec(a).canonical) == rep_encode(fresh.rec(b).canonical));
    }
    // the loaded tau link resolves without recomputing the presentation
    CHECK(fresh.rec(fresh.tau(fresh.simple_class(1))).dim == DimVec{3, 2});
    // a different context or bounds invalidates the cache
    Catalog other(kronecker_context(3));
    CHECK_FALSE(other.load_cache_json(j));
    Bounds small;
    small.hom_space = 1024;
    Catalog tighter(k2, small);
    CHECK_FALSE(tighter.load_cache_json(j));
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
    QuiverContext k2 = kronecker_context(2);
    SuiteConfig cfg;
    cfg.cap = 1;
    cfg.seed = 7;
    cfg.nrandom = 20;
    auto once = [&]() {
        Catalog cat(k2);
        HallAlgebra alg(cat);
        nlohmann::json out = nlohmann::json::array();
        for (const std::string& s : {std::string("matrix"), std::string("counting"),
                                     std::string("thm-ddlz")})
            out.push_back(run_suite(s, cat, alg, cfg).to_json());
        return out.dump();
    };
    CHECK(once() == once());
}
