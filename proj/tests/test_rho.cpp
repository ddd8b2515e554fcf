#include <catch2/catch_amalgamated.hpp>

#include "a2b4/rho.hpp"

using namespace a2b4;

TEST_CASE("rho_mult fixtures") {
    CHECK(rho_mult(1) == 1);
    CHECK(rho_mult(25) == 2);
    CHECK(rho_mult(9) == 0);
    CHECK(rho_mult(4) == 0);
    CHECK(rho_mult(50) == 2);
    CHECK(rho_mult(2) == 1);
    CHECK(rho_mult(5) == 2);
}

TEST_CASE("rho_pair fixtures") {
    CHECK(rho_pair(1, 5) == 2);
    CHECK(rho_pair(1, 3) == 0);
    CHECK(rho_pair(2, 4) == 2);
    CHECK(rho_pair(3, 9) == 3);
    CHECK(rho_pair(0, 5) == 1);
}

TEST_CASE("rho_pair_oracle fixtures") {
    CHECK(rho_pair_oracle(0, 1) == 1);
    CHECK(rho_pair_oracle(1, 5) == 2);
    CHECK(rho_pair_oracle(7, 13) == 2);
    CHECK_THROWS_AS(rho_pair_oracle(1, 2000000), std::invalid_argument);
}

TEST_CASE("closed formula matches oracle on a dense grid") {
    for (u64 d = 1; d <= 120; ++d)
        for (u64 b = 0; b <= 60; ++b)
            REQUIRE(rho_pair((long long)b, d) == rho_pair_oracle(b, d));
}

TEST_CASE("rho_pair depends only on b mod d") {
    for (u64 d = 1; d <= 60; ++d)
        for (long long b = -30; b <= 30; ++b)
            REQUIRE(rho_pair(b, d) == rho_pair(((b % (long long)d) + (long long)d) % (long long)d, d));
}

TEST_CASE("rho_pair multiplicative in coprime moduli") {
    for (u64 d = 1; d <= 100; ++d)
        for (u64 e = d + 1; e <= 100; ++e) {
            if (std::gcd(d, e) != 1) continue;
            for (u64 b : {0ull, 1ull, 2ull, 13ull})
                REQUIRE(rho_pair((long long)b, d * e) ==
                        rho_pair((long long)b, d) * rho_pair((long long)b, e));
        }
}
