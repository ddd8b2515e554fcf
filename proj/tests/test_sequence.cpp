#include <catch2/catch_amalgamated.hpp>

#include "a2b4/sequence.hpp"

using namespace a2b4;

TEST_CASE("tally fixtures") {
    SequenceTally t1 = tally(1, 1);
    CHECK(t1.counts[1] == 4);

    SequenceTally t5 = tally(5, 1);
    CHECK(t5.counts[1] == 4);

    // obstructed modulus: nothing on n coprime to 3
    SequenceTally t3 = tally(3, 100);
    for (u64 n = 1; n <= 100; ++n) CHECK(t3.counts[n] == 0);
}

TEST_CASE("tally n <= 10 profile at c = 1") {
    SequenceTally t = tally(1, 10);
    std::vector<std::uint32_t> expect(11, 0);
    expect[1] = 4; expect[2] = 4; expect[4] = 2; expect[5] = 4; expect[9] = 2; expect[10] = 4;
    for (u64 n = 1; n <= 10; ++n) CHECK(t.counts[n] == expect[n]);
}

TEST_CASE("tally matches brute-force lattice count") {
    u64 c = 5, x = 200;
    SequenceTally t = tally(c, x);
    for (u64 n = 1; n <= x; ++n) {
        if (std::gcd(n, c) != 1) { REQUIRE(t.counts[n] == 0); continue; }
        u64 direct = 0;
        long long cn = (long long)(c * n);
        for (long long s = -1000; s <= 1000; ++s)
            for (long long tt = -10; tt <= 10; ++tt)
                if (s * s + tt * tt * tt * tt == cn) ++direct;
        REQUIRE(t.counts[n] == direct);
    }
}

TEST_CASE("tally is deterministic across thread counts") {
    SequenceTally a = tally(5, 2000, 1000000000ull, 1);
    SequenceTally b = tally(5, 2000, 1000000000ull, 4);
    REQUIRE(a.counts == b.counts);
}

TEST_CASE("tally budget enforcement") {
    CHECK_THROWS_AS(tally(1000, 10000000, 1000000), std::invalid_argument);
}

TEST_CASE("congruence sums") {
    SequenceTally t = tally(1, 10);
    CHECK(congruence_sum(t, 1, 10) == 20);
    CHECK(congruence_sum(t, 2, 10) == 10);
    SequenceTally t6 = tally(6, 100);
    CHECK(congruence_sum(t6, 2) == 0);  // gcd(d, c) > 1
}

TEST_CASE("model fixtures") {
    SequenceTally t = tally(1, 100);
    CHECK(model_count(100, 1, 1) == Rat((long long)t.total()));
    CHECK(model_count(10, 1, 2) == Rat(10));
    // M_3 vs A_3 at x=100: small discrepancy only
    double m3 = model_count(100, 1, 3).to_double();
    double a3 = (double)congruence_sum(tally(1, 100), 3);
    CHECK(std::fabs(m3 - a3) < 10.0);
    CHECK(model_count(100, 6, 2).is_zero());  // gcd(c, d) > 1
}

TEST_CASE("remainder profile") {
    RemainderProfile p0 = remainder_profile(100, 1, 1);
    CHECK(p0.total_abs == 0.0);
    RemainderProfile p = remainder_profile(10000, 1, 21);
    CHECK(std::isfinite(p.total_abs));
    for (auto& e : p.table) CHECK(e.d != 8);  // 8 = 2^3 not cubefree
    CHECK_THROWS_AS(remainder_profile(100, 1, 1000), std::invalid_argument);
}

TEST_CASE("Lambda-weighted sums") {
    ArithTables tables = build_tables(10000);
    SequenceTally t1 = tally(1, 1);
    CHECK(lambda_sum_weighted(t1, tables) == 0.0);

    // n <= 10 profile: counts 4,4,2,4,2,4 at n = 1,2,4,5,9,10
    SequenceTally t10 = tally(1, 10);
    double expect = 4 * std::log(2.0)      // n=2
                  + 2 * std::log(2.0)      // n=4
                  + 4 * std::log(5.0)      // n=5
                  + 2 * std::log(3.0);     // n=9
    CHECK(lambda_sum_weighted(t10, tables) == Catch::Approx(expect).epsilon(1e-12));

    SequenceTally t3 = tally(3, 10000);
    CHECK(lambda_sum_weighted(t3, tables) == 0.0);
}

TEST_CASE("positive-convention Lambda sums") {
    ArithTables tables = build_tables(10000);
    CHECK(lambda_sum_positive(1, 10, tables) == Catch::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(lambda_sum_positive(1, 1, tables) == 0.0);
    // 3^4 + 2^2 = 85 = 5*17 contributes log 17
    double s = lambda_sum_positive(5, 20, tables);
    double without17 = lambda_sum_positive(5, 16, tables);
    CHECK(s - without17 == Catch::Approx(std::log(17.0)).epsilon(1e-12));
}

TEST_CASE("factor-4 bridge at small scale") {
    ArithTables tables = build_tables(10000);
    for (u64 c : {1ull, 2ull, 5ull}) {
        SequenceTally t = tally(c, 10000);
        double w = lambda_sum_weighted(t, tables);
        double pos = lambda_sum_positive(c, 10000, tables, 1000000000ull, true);
        double bound = boundary_lambda_bound(c, 10000, tables);
        CHECK(std::fabs(w - 4.0 * pos) <= bound + 1e-6);
    }
}

TEST_CASE("beta coefficients") {
    CHECK(beta_coefficient(1, 100) == 1);
    CHECK(beta_coefficient(6, 2) == 0);
    CHECK(beta_coefficient(6, 6) == 0);
    CHECK(beta_coefficient(30, 5) == -2);  // mu over divisors 1,2,3,5
}

TEST_CASE("bilinear diagnostic") {
    ArithTables tables = build_tables(10000);
    SieveParams p;
    p.N = 20000;  // N >= x: empty sum
    CHECK(bilinear_diagnostic(10000, 1, p, tables) == 0.0);
    p.N = 100;
    p.K = 10;
    p.P = 5;
    double v = bilinear_diagnostic(10000, 1, p, tables);
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
}

TEST_CASE("hypothesis audit at x = 1e4") {
    ArithTables tables = build_tables(10000);
    AuditReport rep = hypothesis_audit(10000, 1, tables);
    // the sqrt lower-bound ratio grows like x^{3/8} / (log x)^2, still < 1 here
    REQUIRE(rep.count("lower_bound_sqrt"));
    CHECK(rep["lower_bound_sqrt"].status == "fail");
    REQUIRE(rep.count("lower_bound_l2"));
    CHECK(rep["lower_bound_l2"].measured > 1.0);
    REQUIRE(rep.count("g_log_log_spread"));
    CHECK(rep["g_log_log_spread"].measured < 0.05);
    REQUIRE(rep.count("divisor_bound_max"));
    CHECK(rep["divisor_bound_max"].status == "report");
    CHECK_THROWS_AS(hypothesis_audit(50, 1, tables), std::invalid_argument);
}

TEST_CASE("audit lower bounds clear 1 at x = 1e7") {
    ArithTables tables = build_tables(10000000);
    AuditReport rep = hypothesis_audit(10000000, 1, tables);
    CHECK(rep["lower_bound_sqrt"].measured > 1.0);
    CHECK(rep["lower_bound_sqrt"].status == "pass");
    CHECK(rep["lower_bound_l2"].measured > 1.0);
    CHECK(rep["lower_bound_l2"].status == "pass");
}
