// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <cstdio>

#include "a2b4/suites.hpp"

int main() {
    using namespace a2b4::suites;
    std::vector<a2b4::CheckResult> results = {
        rho_oracle_equivalence(),   // 1
        g_dual_evaluation(),        // 2a
        g_h_multiplicativity(),     // 2b
        h_prime_laws(),             // 3
        G_zero_locus(),             // 4
        G_bounds(),                 // 5
        main_term_desk_scale(),     // 6
        exactness_anchors(),        // 7
        remainder_growth(),         // 8
        sieve_constant(),           // 9
        prime_sums(),               // 10
        obstructed_moduli(),        // 11
        congruence_lab(),           // 12
    };
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failures;
    }
    if (failures) std::printf("%d criterion check(s) failed\n", failures);
    return failures ? 1 : 0;
}
