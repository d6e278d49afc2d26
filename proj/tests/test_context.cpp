#include "qca/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qca;

namespace {
DimVec rnd_vec(std::mt19937_64& rng, int m, int lo = -6, int hi = 6) {
    DimVec v(m);
    for (int i = 0; i < m; ++i) v[i] = lo + static_cast<int>(rng() % (hi - lo + 1));
    return v;
}
} // namespace

TEST_CASE("Kronecker context matrices match the worked example") {
    QuiverContext k2 = kronecker_context(2);
    CHECK(k2.Rp == IntMatrix{{0, 2}, {0, 0}});
    CHECK(k2.R == IntMatrix{{0, 0}, {2, 0}});
    CHECK(k2.E == IntMatrix{{1, -2}, {0, 1}});
    CHECK(k2.B == IntMatrix{{0, 2}, {-2, 0}});
    CHECK(k2.ED == IntMatrix{{2, -4}, {0, 2}});
}

TEST_CASE("euler form values in K2") {
    QuiverContext k2 = kronecker_context(2);
    DimVec e1 = k2.unit_vec(1), e2 = k2.unit_vec(2);
    CHECK(k2.euler(e1, e2) == -4);
    CHECK(k2.euler(e1, e1) == 2);
    // <e2,e1> = d*(dim Hom(S2,S1) - dim Ext1(S2,S1)) = 0 by acyclicity
    CHECK(k2.euler(e2, e1) == 0);
    CHECK(k2.sym(e1, e2) == -4);
    CHECK(k2.sym(e2, e1) == k2.sym(e1, e2));
    CHECK(k2.sym(e1, e1) == 2 * k2.euler(e1, e1));
}

TEST_CASE("star maps in K2") {
    QuiverContext k2 = kronecker_context(2);
    CHECK(k2.star_left(k2.unit_vec(1)) == DimVec{1, 0});
    CHECK(k2.star_left(k2.unit_vec(2)) == DimVec{-2, 1});
    CHECK(k2.star_right(k2.unit_vec(1)) == DimVec{1, -2});
    CHECK(k2.star_left(k2.zero_vec()) == k2.zero_vec());
}

TEST_CASE("lambda form in K2") {
    QuiverContext k2 = kronecker_context(2);
    DimVec e1 = k2.unit_vec(1), e2 = k2.unit_vec(2);
    CHECK(k2.lambda_form(e1, e2) == 1);
    CHECK(k2.lambda_form(e1, e1) == 0);
    // hand oracle: Lambda(E'e1, E'e2) = (1,-2)^T Lambda (0,1) = 1
    CHECK(k2.lambda_form(k2.star_right(e1), k2.star_right(e2)) == 1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        DimVec a = rnd_vec(rng, 2), b = rnd_vec(rng, 2);
        CHECK(k2.lambda_form(a, b) == -k2.lambda_form(b, a));
    }
}

TEST_CASE("coxeter transform") {
    QuiverContext k2 = kronecker_context(2);
    // hand oracle: -E^{-1}E' = [[3,-2],[2,-1]]
    CHECK(k2.Cox == IntMatrix{{3, -2}, {2, -1}});
    CHECK(k2.coxeter(k2.unit_vec(1)) == DimVec{3, 2});
    std::mt19937_64 rng(11);
    for (const QuiverContext& c : {kronecker_context(2), a2_valued_context(2)})
        for (int i = 0; i < 100; ++i) {
            DimVec x = rnd_vec(rng, c.m), y = rnd_vec(rng, c.m);
            CHECK(c.euler(x, c.coxeter(y)) == -c.euler(y, x));
            CHECK(c.star_left(c.coxeter(y)) == dim_neg(c.star_right(y)));
        }
}

TEST_CASE("Lemma 4.2 identities on random pairs") {
    std::mt19937_64 rng(99);
    for (const QuiverContext& c : {kronecker_context(2), a2_valued_context(3)}) {
        auto Bv = [&](const DimVec& x) {
            DimVec y(c.m, 0);
            for (int i = 0; i < c.m; ++i) {
                long s = 0;
                for (int j = 0; j < c.m; ++j) s += c.B[i][j] * x[j];
                y[i] = static_cast<int>(s);
            }
            return y;
        };
        for (int i = 0; i < 200; ++i) {
            DimVec a = rnd_vec(rng, c.m), b = rnd_vec(rng, c.m);
            CHECK(c.lambda_form(Bv(a), c.star_left(b)) == c.euler(a, b));
            CHECK(c.lambda_form(Bv(a), c.star_right(b)) == c.euler(b, a));
            CHECK(c.lambda_form(Bv(a), Bv(b)) == c.euler(b, a) - c.euler(a, b));
            CHECK(c.lambda_form(c.star_right(a), c.star_right(b)) ==
                  c.lambda_form(c.star_left(a), c.star_left(b)));
        }
    }
}

TEST_CASE("validation rejects bad contexts") {
    nlohmann::json good = kronecker_context(2).to_json();

    nlohmann::json bad_lambda = good;
    bad_lambda["lambda"] = {{0, 2}, {-2, 0}}; // Lambda(-B) = diag(4,4) != diag(2,2)
    CHECK_THROWS_AS(QuiverContext::from_json(bad_lambda), ContextError);

    nlohmann::json skew = good;
    skew["lambda"] = {{0, 1}, {1, 0}};
    CHECK_THROWS_WITH(QuiverContext::from_json(skew),
                      Catch::Matchers::ContainsSubstring("skew"));

    nlohmann::json cyclic = good;
    cyclic["arrows"].push_back({{"from", 2}, {"to", 1}, {"mult", 2}});
    CHECK_THROWS_WITH(QuiverContext::from_json(cyclic),
                      Catch::Matchers::ContainsSubstring("acyclic"));
}

TEST_CASE("non-uniform valuations load as symbolic-only") {
    // a B2-type pattern: valuations (1,2), doubled arrow, Lambda(-B) = diag(1,2)
    nlohmann::json j = {
        {"m", 2}, {"n", 2}, {"q0", 2}, {"valuations", {1, 2}},
        {"arrows", {{{"from", 1}, {"to", 2}, {"mult", 2}}}},
        {"lambda", {{0, 1}, {-1, 0}}},
    };
    QuiverContext b2 = QuiverContext::from_json(j);
    CHECK_FALSE(b2.uniform_valued);
    CHECK_FALSE(b2.counting_ready());
    CHECK(b2.R == IntMatrix{{0, 0}, {1, 0}}); // r_21 = d_1 r'_12 / d_2
    CHECK_THROWS_AS(b2.d(), ContextError);
    CHECK_THROWS_AS(Catalog(b2), ContextError); // counting layer refuses
    // matrix layer still works
    CHECK(b2.euler(b2.unit_vec(1), b2.unit_vec(1)) == 1);
}

TEST_CASE("unsupported base prime is rejected at load") {
    nlohmann::json j = kronecker_context(2).to_json();
    j["q0"] = 4;
    CHECK_THROWS_WITH(QuiverContext::from_json(j),
                      Catch::Matchers::ContainsSubstring("q0"));
}

TEST_CASE("context hash is stable and sensitive") {
    QuiverContext a = kronecker_context(2), b = kronecker_context(2);
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != kronecker_context(3).hash());
    CHECK(a.hash() != a2_valued_context(2).hash());
}

TEST_CASE("paths enumeration") {
    QuiverContext k2 = kronecker_context(2);
    CHECK(k2.paths(0, 0).size() == 1); // trivial path
    CHECK(k2.paths(0, 1).size() == 2); // the two arrows
    CHECK(k2.paths(1, 0).empty());
}
