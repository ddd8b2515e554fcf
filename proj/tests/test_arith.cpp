#include <catch2/catch_amalgamated.hpp>

#include "a2b4/arith.hpp"

using namespace a2b4;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());

    auto f = factorize(360);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<u64, int>{2, 3});
    CHECK(f.factors[1] == std::pair<u64, int>{3, 2});
    CHECK(f.factors[2] == std::pair<u64, int>{5, 1});

    u64 mersenne = (1ull << 61) - 1;
    REQUIRE(is_prime_u64(mersenne));
    auto m = factorize(mersenne);
    REQUIRE(m.factors.size() == 1);
    CHECK(m.factors[0] == std::pair<u64, int>{mersenne, 1});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize semiprimes with large factors") {
    u64 p = 1000003, q = 1000033;
    auto f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[1].first == q);
}

TEST_CASE("table fixtures") {
    ArithTables t = build_tables(100);
    CHECK(t.mobius[6] == 1);
    CHECK(t.mobius[4] == 0);
    CHECK(t.mobius[30] == -1);
    CHECK(t.mangoldt_prime[8] == 2);
    CHECK(t.mangoldt(8) == std::log(2.0));
    CHECK(t.mangoldt(6) == 0.0);

    // psi(100) by direct summation over prime powers
    double psi = 0;
    for (u64 n = 2; n <= 100; ++n) psi += t.mangoldt(n);
    CHECK(psi == Catch::Approx(94.045).margin(0.001));
}

TEST_CASE("tables reject oversized allocations") {
    CHECK_THROWS_AS(build_tables(1ull << 40), std::invalid_argument);
}

TEST_CASE("quartic decomposition fixtures") {
    auto q = quartic_decompose(360);
    CHECK(q.d1 == 10);
    CHECK(q.d3 == 6);
    CHECK(q.d4 == 1);
    CHECK(q.d1star == 5);

    auto q16 = quartic_decompose(16);
    CHECK(q16.d1 == 1);
    CHECK(q16.d3 == 1);
    CHECK(q16.d4 == 2);

    auto q48 = quartic_decompose(48);
    CHECK(q48.d1 == 3);
    CHECK(q48.d3 == 1);
    CHECK(q48.d4 == 2);
}

TEST_CASE("chi4") {
    CHECK(chi4(5) == 1);
    CHECK(chi4(3) == -1);
    CHECK(chi4(2) == 0);
    CHECK(chi4(-1) == -1);
    CHECK(chi4(-3) == 1);
}

TEST_CASE("arith_values fixtures") {
    auto v1 = arith_values(factorize(1));
    CHECK(v1.phi == 1);
    CHECK(v1.tau == 1);
    CHECK(v1.tau5 == 1);
    CHECK(v1.mu == 1);

    auto v12 = arith_values(factorize(12));
    CHECK(v12.phi == 4);
    CHECK(v12.tau == 6);
    CHECK(v12.mu == 0);

    CHECK(arith_values(factorize(7)).tau5 == 5);
    CHECK(arith_values(factorize(49)).tau5 == 15);
}

TEST_CASE("factorize agrees with sieved tables up to 1e5") {
    ArithTables t = build_tables(100000);
    for (u64 n = 1; n <= 100000; ++n) {
        auto f = factorize(n);
        REQUIRE(f.reconstruct() == n);
        auto v = arith_values(f);
        CHECK((int)t.mobius[n] == v.mu);
    }
    // spot-check phi/tau against direct counts on a smaller range
    for (u64 n = 1; n <= 500; ++n) {
        u64 phi = 0, tau_d = 0;
        for (u64 k = 1; k <= n; ++k) {
            if (std::gcd(k, n) == 1) ++phi;
            if (n % k == 0) ++tau_d;
        }
        auto v = arith_values(factorize(n));
        CHECK(v.phi == phi);
        CHECK(v.tau == tau_d);
    }
}

TEST_CASE("quartic decomposition round-trips up to 1e6") {
    for (u64 d = 1; d <= 1000000; ++d) {
        auto q = quartic_decompose(d);
        REQUIRE(q.d1 * q.d3 * q.d3 * q.d4 * q.d4 * q.d4 * q.d4 == d);
    }
    // squarefree parts (mu != 0), denser check on a smaller range
    for (u64 d = 1; d <= 5000; ++d) {
        auto q = quartic_decompose(d);
        CHECK(mobius(q.d1) != 0);
        CHECK(mobius(q.d3) != 0);
        CHECK(q.d1star == q.d1 / std::gcd(q.d1, (u64)2));
    }
}

TEST_CASE("Mangoldt partial sums agree with independent prime-power sum") {
    ArithTables t = build_tables(10000);
    std::vector<double> direct(10001, 0.0);
    for (u64 p = 2; p <= 10000; ++p) {
        if (!t.is_prime(p)) continue;
        for (u64 pk = p; pk <= 10000; pk *= p) {
            direct[pk] = std::log((double)p);
            if (pk > 10000 / p) break;
        }
    }
    double acc_t = 0, acc_d = 0, prev = -1;
    for (u64 n = 1; n <= 10000; ++n) {
        acc_t += t.mangoldt(n);
        acc_d += direct[n];
        REQUIRE(acc_t == Catch::Approx(acc_d).epsilon(1e-12));
        REQUIRE(acc_t >= prev);
        prev = acc_t;
    }
}

TEST_CASE("divisors helper") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
}
