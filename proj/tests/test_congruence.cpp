#include <catch2/catch_amalgamated.hpp>

#include "a2b4/congruence.hpp"

using namespace a2b4;

TEST_CASE("chen_search fixtures") {
    // smallest p = 3 mod 4 with 2^{l+4} - p prime
    auto d1 = chen_search(1);
    CHECK(d1.M == 32);
    CHECK(d1.p == 3);
    CHECK(d1.cofactor == std::vector<u64>{29});

    auto d3 = chen_search(3);
    CHECK(d3.M == 128);
    CHECK(d3.p == 19);
    CHECK(d3.cofactor == std::vector<u64>{109});

    auto d5 = chen_search(5);
    CHECK(d5.M == 512);
    CHECK(d5.p == 3);
    CHECK(d5.cofactor == std::vector<u64>{509});

    CHECK_THROWS_AS(chen_search(0), std::invalid_argument);
    CHECK_THROWS_AS(chen_search(41), std::invalid_argument);
}

TEST_CASE("chen_search with semiprime cofactors") {
    for (u64 ell = 1; ell <= 10; ++ell) {
        auto d = chen_search(ell, true);
        CHECK(d.p + d.cofactor_product() == d.M);
        CHECK(d.p % 4 == 3);
        CHECK(is_prime_u64(d.p));
        for (u64 q : d.cofactor) CHECK(is_prime_u64(q));
        if (d.cofactor.size() == 2) CHECK(d.cofactor[0] != d.cofactor[1]);
        // the semiprime-allowed p never exceeds the prime-only p
        CHECK(d.p <= chen_search(ell, false).p);
    }
}

TEST_CASE("frey_invariants fixtures") {
    auto f = frey_invariants(19, 109, 3);
    CHECK(f.min_discriminant == (u64)(8 * 19 * 109) * (8 * 19 * 109));
    CHECK(f.conductor == 4142);
    CHECK(f.v2_disc == 6);
    CHECK(f.v2_disc % 3 == 0);

    auto g = frey_invariants(19, 13, 1);
    CHECK(g.min_discriminant == 244036);
    CHECK(g.conductor == 494);

    auto h = frey_invariants(3, 509, 5);
    CHECK(h.v2_disc == 10);

    CHECK_THROWS_AS(frey_invariants(19, 109, 2), std::invalid_argument);  // p+q != 2^6
    CHECK_THROWS_AS(frey_invariants(13, 19, 1), std::invalid_argument);   // 13 = 1 mod 4
}

TEST_CASE("trace_of_frobenius fixtures") {
    CHECK(trace_of_frobenius({0, 0, 1}, 5) == 0);   // y^2 = x^3 + 1, supersingular at 5
    CHECK(trace_of_frobenius({0, 1, 0}, 3) == 0);   // y^2 = x^3 + x
    CHECK(trace_of_frobenius({0, 0, 1}, 7) == -4);  // 13 points affine -> a_7

    // Hasse bound at p = 101
    long long a = trace_of_frobenius({1, 2, 3}, 101);
    CHECK(a * a <= 4 * 101);

    // bad reduction rejected: disc(y^2 = x^3 + x) = -64, v_2 > 0
    CHECK_THROWS_AS(trace_of_frobenius({0, 1, 0}, 2), std::invalid_argument);
    // singular curve rejected
    CHECK_THROWS_AS(trace_of_frobenius({0, 0, 0}, 5), std::invalid_argument);
}

TEST_CASE("CM curve y^2 = x^3 - x has a_p = 0 for p = 3 mod 4") {
    ArithTables t = build_tables(1000);
    for (u64 p = 3; p <= 1000; ++p) {
        if (!t.is_prime(p) || p % 4 != 3) continue;
        if (p == 2) continue;
        CurveQ c{0, -1, 0};
        __int128 disc = c.discriminant();
        if (disc % (__int128)p == 0) continue;
        REQUIRE(trace_of_frobenius(c, p) == 0);
    }
}

TEST_CASE("degree_lower_bound fixtures") {
    CHECK(degree_lower_bound(11, 2) == 2);
    CHECK(degree_lower_bound(5, 2) == 1);
    CHECK(degree_lower_bound(1009, 5) == 3);
    CHECK_THROWS_AS(degree_lower_bound(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(degree_lower_bound(11, 4), std::invalid_argument);
}

TEST_CASE("degree_lower_bound monotone in ell, matches the base-2 form") {
    u64 prev = 0;
    for (u64 ell : {5ull, 7ull, 11ull, 101ull, 1009ull, 10007ull, 1000003ull}) {
        u64 d = degree_lower_bound(ell, 2);
        CHECK(d >= prev);
        prev = d;
        u64 direct = (u64)std::ceil(std::log((double)ell) / std::log(3.0 + 2.0 * std::sqrt(2.0)) - 1e-12);
        CHECK(d == direct);
    }
}

TEST_CASE("ogg_numerator fixtures") {
    CHECK(ogg_numerator(11, 13) == 35);
    CHECK(ogg_numerator(5, 7) == 4);
    CHECK(ogg_numerator(3, 5) == 1);
    CHECK_THROWS_AS(ogg_numerator(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(ogg_numerator(2, 7), std::invalid_argument);
}

TEST_CASE("eisenstein_level_search fixtures") {
    CHECK(eisenstein_level_search(5, 1).q == 11);
    CHECK(eisenstein_level_search(11, 1).q == 23);
    auto e = eisenstein_level_search(7, 2);
    CHECK(e.p == 3);
    CHECK(e.q == 13);
    // l | (p-1)(q+1), l divides neither p-1 nor q-1
    CHECK((e.p - 1) * (e.q + 1) % 7 == 0);
    CHECK((e.p - 1) % 7 != 0);
    CHECK((e.q - 1) % 7 != 0);
    CHECK_THROWS_AS(eisenstein_level_search(4, 1), std::invalid_argument);
}

TEST_CASE("quartic_solution_search fixtures") {
    // ell = 0: no valid solution below 10 (2 and 5 excluded)
    CHECK(quartic_solution_search(0, 10).empty());
    auto v0 = quartic_solution_search(0, 50);
    REQUIRE(!v0.empty());
    CHECK(v0.front().p == 17);  // 1 + 16 = 17 and 16 + 1 = 17

    auto has = [](const std::vector<QuarticSolution>& v, u64 A, u64 B, u64 p) {
        for (auto& s : v)
            if (s.A == A && s.B == B && s.p == p) return true;
        return false;
    };
    CHECK(has(quartic_solution_search(1, 100), 3, 2, 17));
    CHECK(has(quartic_solution_search(2, 400), 1, 18, 13));

    for (auto& s : quartic_solution_search(1, 200)) {
        CHECK((u64)(s.A * s.A * s.A * s.A) + s.B * s.B == 5 * s.p);
        CHECK(is_prime_u64(s.p));
        CHECK(s.p % 5 != 0);
    }
}

TEST_CASE("qcurve_construct fixtures") {
    auto r = qcurve_construct(3, 2, 1, 17);
    CHECK(r.a2 == 12);
    CHECK(r.a4 == GaussianInt(18, 4));
    CHECK(r.discriminant == GaussianInt(9, 2) * (512 * 85));

    auto r2 = qcurve_construct(1, 18, 2, 13);
    CHECK(r2.a4 == GaussianInt(2, 36));
    CHECK(r2.discriminant == GaussianInt(1, 18) * (512 * 325));

    // (A^2 + iB)(A^2 - iB) = 5^l p in the Gaussian integers
    GaussianInt core(9, 2);
    CHECK(core * core.conj() == GaussianInt(85, 0));

    CHECK_THROWS_AS(qcurve_construct(3, 2, 1, 19), std::invalid_argument);
}

TEST_CASE("gaussian integer arithmetic") {
    GaussianInt a(3, 4), b(1, -2);
    CHECK(a * b == GaussianInt(11, -2));
    CHECK(a.norm() == 25);
    CHECK(a.conj() == GaussianInt(3, -4));
    CHECK((a + b) == GaussianInt(4, 2));
    CHECK(a.str() == "3+4i");
    CHECK(GaussianInt(0, -1).str() == "0-1i");
}
