#include "qca/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qca;

TEST_CASE("vpow basics") {
    CHECK(ExactScalar::vpow(0, 2) == ExactScalar(1));
    CHECK(ExactScalar::vpow(2, 2) == ExactScalar(2));
    // oracle by hand from v^2 = q0: v^{-3} = 1/(2*sqrt 2) = sqrt(2)/4
    CHECK(ExactScalar::vpow(-3, 2) == ExactScalar(0, Rational(1, 4), 2));
    CHECK(ExactScalar::vpow(5, 3) == ExactScalar(0, 9, 3));
    CHECK(ExactScalar::vpow(-1, 2) == ExactScalar(0, Rational(1, 2), 2));
}

TEST_CASE("qpow basics") {
    CHECK(ExactScalar::qpow(1, 3) == ExactScalar(3));
    CHECK(ExactScalar::qpow(-1, 2) == ExactScalar(Rational(1, 2)));
    CHECK(ExactScalar::qpow(2, 5) == ExactScalar(25));
    CHECK(ExactScalar::qpow(0, 7) == ExactScalar(1));
}

TEST_CASE("vpow multiplicativity on the full window") {
    for (int q0 : {2, 3, 5, 7})
        for (long j = -64; j <= 64; j += 7)
            for (long k = -64; k <= 64; k += 5) {
                CAPTURE(q0, j, k);
                CHECK(ExactScalar::vpow(j, q0) * ExactScalar::vpow(k, q0) ==
                      ExactScalar::vpow(j + k, q0));
            }
    // inverses
    for (long k = -64; k <= 64; ++k)
        CHECK(ExactScalar::vpow(k, 2) * ExactScalar::vpow(-k, 2) == ExactScalar(1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    auto rnd = [&]() {
        Rational a(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
        Rational b(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
        return ExactScalar(a, b, 2);
    };
    for (int i = 0; i < 10000; ++i) {
        ExactScalar x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == ExactScalar(1));
    }
}

TEST_CASE("uniqueness of the (a,b) representation") {
    // sqrt(q0) irrational for prime q0, so a + b sqrt(q0) = 0 iff a = b = 0
    ExactScalar x(3, -2, 2), y(3, -2, 2);
    CHECK(x == y);
    CHECK(x - y == ExactScalar(0));
    CHECK(ExactScalar(1, 1, 2) != ExactScalar(1, 0, 2));
}

TEST_CASE("mixing base primes is rejected") {
    ExactScalar a = ExactScalar::vpow(1, 2);
    ExactScalar b = ExactScalar::vpow(1, 3);
    CHECK_THROWS_AS(a * b, std::logic_error);
}

TEST_CASE("rendering") {
    CHECK(ExactScalar::vpow(-3, 2).to_string() == "v^-3");
    CHECK(ExactScalar::vpow(1, 2).to_string() == "v");
    CHECK(ExactScalar(2).to_string() == "2");
    CHECK(ExactScalar(Rational(1, 4)).to_string() == "1/4");
    CHECK(ExactScalar(1, 1, 2).to_string() == "1 + 1*sqrt(2)");
    long k = 0;
    CHECK(ExactScalar::vpow(7, 5).as_v_power(k));
    CHECK(k == 7);
}
