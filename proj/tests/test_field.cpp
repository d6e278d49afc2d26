#include "qca/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qca;

TEST_CASE("F4 and F9 construct and behave") {
    const GaloisField& f4 = GaloisField::get(2, 2);
    CHECK(f4.size() == 4);
    // characteristic 2: x + x = 0
    for (int x = 0; x < 4; ++x) CHECK(f4.add(x, x) == 0);
    // multiplicative group has order 3
    for (int x = 1; x < 4; ++x) CHECK(f4.mul(f4.mul(x, x), x) == 1);

    const GaloisField& f9 = GaloisField::get(3, 2);
    CHECK(f9.size() == 9);
    for (int x = 1; x < 9; ++x) {
        int p = 1;
        for (int i = 0; i < 8; ++i) p = f9.mul(p, x);
        CHECK(p == 1); // x^8 = 1
    }
    CHECK_THROWS_AS(GaloisField(2, 9), std::invalid_argument); // 512 > 343
}

TEST_CASE("rref, rank, kernel, solve") {
    const GaloisField& F = GaloisField::get(2, 2);
    Mat m(2, 3);
    // rows (1, a, a+1) and (0, 1, a) over F4 with a the table element 2
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 2;
    CHECK(mat_rank(F, m) == 2);
    Mat k = kernel_basis(F, m);
    CHECK(k.cols == 1);
    // m * k == 0
    Mat prod = mat_mul(F, m, k);
    CHECK(prod.is_zero());
    std::vector<FElem> b = {1, 2}, x;
    REQUIRE(mat_solve(F, m, b, x));
    for (int i = 0; i < 2; ++i) {
        FElem acc = 0;
        for (int j = 0; j < 3; ++j) acc = F.axpy(acc, m.at(i, j), x[j]);
        CHECK(acc == b[i]);
    }
    CHECK(mat_invertible(F, Mat::eye(3)));
    CHECK_FALSE(mat_invertible(F, Mat(2, 2)));
}

TEST_CASE("subspace enumeration matches gaussian binomials") {
    const GaloisField& F = GaloisField::get(2, 2);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            auto subs = subspaces(F, n, k);
            CHECK(static_cast<long long>(subs.size()) == subspace_count(4, n, k));
            for (const auto& s : subs) CHECK(mat_rank(F, s) == k);
        }
    // all enumerated subspaces of F4^2, dim 1: 5 of them, pairwise distinct
    auto subs = subspaces(F, 2, 1);
    CHECK(subs.size() == 5);
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(subs[i] == subs[j]);
}
