// Command-line front end: constants, tallies, audits, prime listings,
// congruence constructions, and the named verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "a2b4/congruence.hpp"
#include "a2b4/sequence.hpp"
#include "a2b4/singular.hpp"
#include "a2b4/suites.hpp"

using json = nlohmann::ordered_json;
using namespace a2b4;

namespace {

constexpr const char* kVersion = "a2b4lab 1.0.0";

// floats serialize with 12 significant digits, rationals as "num/den"
json num(double v) { return json::parse(suites::fmt(v)); }

json report_header(const json& params) {
    json j;
    j["version"] = kVersion;
    j["params"] = params;
    j["calibration"] = {{"remainder_ratio_bound", suites::kRemainderRatioBound},
                        {"audit_L_default", "(log x)^2"}};
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

int run_verify(const std::string& suite, u64 budget) {
    a2b4::Suite results;
    if (suite == "rho") results = suites::run_rho();
    else if (suite == "g") results = suites::run_g();
    else if (suite == "G") results = suites::run_G();
    else if (suite == "sequence") results = suites::run_sequence(budget);
    else if (suite == "sieve") results = suites::run_sieve(budget);
    else if (suite == "congruence") results = suites::run_congruence();
    else if (suite == "all") results = suites::run_all(budget);
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 1;
    }
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale laboratory for primes of the form (a^2 + b^4)/c"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    unsigned threads = 1;
    u64 budget = 1000000000ull;
    app.add_option("--threads", threads, "worker threads for enumerations")->capture_default_str();
    app.add_option("--budget", budget, "enumeration budget (max c*x)")->capture_default_str();

    // constant --c
    auto* cmd_const = app.add_subcommand("constant", "singular-series constants for a modulus");
    u64 const_c = 1;
    std::string const_fmt = "json";
    cmd_const->add_option("--c", const_c, "modulus c")->required();
    cmd_const->add_option("--format", const_fmt, "json|table")->capture_default_str();

    // tally --c --x --out
    auto* cmd_tally = app.add_subcommand("tally", "write the weighted counts a(c)_n as CSV");
    u64 tally_c = 1, tally_x = 1000;
    std::string tally_out;
    cmd_tally->add_option("--c", tally_c)->required();
    cmd_tally->add_option("--x", tally_x)->required();
    cmd_tally->add_option("--out", tally_out, "output CSV path")->required();

    // audit --c --x [--D --K --N --P]
    auto* cmd_audit = app.add_subcommand("audit", "sieve-hypothesis audit as JSON");
    u64 audit_c = 1, audit_x = 10000, audit_D = 0, audit_K = 1, audit_N = 0, audit_P = 2;
    std::string audit_out;
    cmd_audit->add_option("--c", audit_c)->required();
    cmd_audit->add_option("--x", audit_x)->required();
    cmd_audit->add_option("--D", audit_D, "also run the cubefree remainder profile up to D");
    cmd_audit->add_option("--K", audit_K);
    cmd_audit->add_option("--N", audit_N, "also run the bilinear diagnostic at this N");
    cmd_audit->add_option("--P", audit_P);
    cmd_audit->add_option("--out", audit_out);

    // primes --c --x
    auto* cmd_primes = app.add_subcommand("primes", "list prime n with a(c)_n > 0, ascending");
    u64 primes_c = 1, primes_x = 1000;
    cmd_primes->add_option("--c", primes_c)->required();
    cmd_primes->add_option("--x", primes_x)->required();

    // congruence subcommands
    auto* cmd_cong = app.add_subcommand("congruence", "congruence constructions");
    cmd_cong->require_subcommand(1);
    auto* cg_chen = cmd_cong->add_subcommand("chen", "decompose 2^{ell+4}");
    u64 chen_ell = 1;
    bool chen_semi = false;
    cg_chen->add_option("--ell", chen_ell)->required();
    cg_chen->add_flag("--semiprime", chen_semi, "allow a product of two distinct primes");
    auto* cg_frey = cmd_cong->add_subcommand("frey", "Frey curve invariants");
    u64 frey_p = 0, frey_q = 0, frey_ell = 0;
    cg_frey->add_option("--p", frey_p)->required();
    cg_frey->add_option("--q", frey_q)->required();
    cg_frey->add_option("--ell", frey_ell)->required();
    auto* cg_trace = cmd_cong->add_subcommand("trace", "trace of Frobenius by point count");
    long long tr_a2 = 0, tr_a4 = 0, tr_a6 = 0;
    u64 tr_p = 0;
    cg_trace->add_option("--a2", tr_a2)->required();
    cg_trace->add_option("--a4", tr_a4)->required();
    cg_trace->add_option("--a6", tr_a6)->required();
    cg_trace->add_option("--p", tr_p)->required();
    auto* cg_deg = cmd_cong->add_subcommand("degree", "coefficient-field degree lower bound");
    u64 deg_ell = 0, deg_q = 2;
    cg_deg->add_option("--ell", deg_ell)->required();
    cg_deg->add_option("--q", deg_q)->capture_default_str();
    auto* cg_ogg = cmd_cong->add_subcommand("ogg", "numerator of (p-1)(q+1)/24");
    u64 ogg_p = 0, ogg_q = 0;
    cg_ogg->add_option("--p", ogg_p)->required();
    cg_ogg->add_option("--q", ogg_q)->required();
    auto* cg_quartic = cmd_cong->add_subcommand("quartic", "solutions of A^4 + B^2 = 5^ell p");
    u64 qu_ell = 0, qu_bound = 100;
    cg_quartic->add_option("--ell", qu_ell)->required();
    cg_quartic->add_option("--bound", qu_bound)->required();
    auto* cg_qcurve = cmd_cong->add_subcommand("qcurve", "Q-curve data for a quartic solution");
    u64 qc_A = 0, qc_B = 0, qc_ell = 0, qc_p = 0;
    cg_qcurve->add_option("--A", qc_A)->required();
    cg_qcurve->add_option("--B", qc_B)->required();
    cg_qcurve->add_option("--ell", qc_ell)->required();
    cg_qcurve->add_option("--p", qc_p)->required();

    // verify <suite>
    auto* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string verify_suite = "all";
    cmd_verify->add_option("suite", verify_suite, "rho|g|G|sequence|sieve|congruence|all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_const) {
            MainTermModel m = main_term_coefficient(const_c);
            if (const_fmt == "table") {
                std::printf("%-12s %s\n", "c", std::to_string(const_c).c_str());
                std::printf("%-12s %s\n", "G(c)", m.G_c.str().c_str());
                std::printf("%-12s %.12g\n", "H(c)", big_H(const_c));
                std::printf("%-12s %.12g\n", "kappa", m.kappa_value);
                std::printf("%-12s %.12g\n", "coefficient", m.coefficient);
            } else {
                json j = report_header({{"c", const_c}});
                j["G"] = m.G_c.str();
                j["H"] = num(big_H(const_c));
                j["kappa"] = num(m.kappa_value);
                j["coefficient"] = num(m.coefficient);
                emit(j, "");
            }
            return 0;
        }
        if (*cmd_tally) {
            SequenceTally t = tally(tally_c, tally_x, budget, threads);
            std::ofstream f(tally_out);
            if (!f) throw std::runtime_error("cannot open " + tally_out);
            f << "n,a_n\n";
            for (u64 n = 1; n <= t.x; ++n) f << n << "," << t.counts[n] << "\n";
            return 0;
        }
        if (*cmd_audit) {
            ArithTables tables = build_tables(std::max<u64>(audit_x, 10000));
            AuditReport rep = hypothesis_audit(audit_x, audit_c, tables, budget);
            json j = report_header({{"c", audit_c},
                                    {"x", audit_x},
                                    {"D", audit_D},
                                    {"K", audit_K},
                                    {"N", audit_N},
                                    {"P", audit_P},
                                    {"L", "(log x)^2"}});
            json checks;
            for (const auto& [name, e] : rep)
                checks[name] = {{"measured", num(e.measured)}, {"reference", num(e.reference)}, {"status", e.status}};
            if (audit_D > 0) {
                RemainderProfile prof = remainder_profile(audit_x, audit_c, audit_D, budget);
                double scale = std::pow((double)audit_D, 0.25) * std::pow((double)audit_x, 9.0 / 16.0);
                checks["remainder_cubefree_sum"] = {{"measured", num(prof.total_abs)},
                                                    {"reference", num(scale)},
                                                    {"status", "report"}};
            }
            if (audit_N > 0) {
                SieveParams p;
                p.D = audit_D;
                p.K = audit_K;
                p.N = audit_N;
                p.P = audit_P;
                double v = bilinear_diagnostic(audit_x, audit_c, p, tables, budget);
                double L = std::log((double)audit_x) * std::log((double)audit_x);
                SequenceTally t = tally(audit_c, audit_x, budget, threads);
                checks["bilinear_form"] = {{"measured", num(v)},
                                           {"reference", num((double)t.total() / (L * L * L * L))},
                                           {"status", "report"}};
            }
            j["checks"] = checks;
            emit(j, audit_out);
            return 0;
        }
        if (*cmd_primes) {
            SequenceTally t = tally(primes_c, primes_x, budget, threads);
            ArithTables tables = build_tables(primes_x < 2 ? 2 : primes_x);
            for (u64 n = 2; n <= t.x; ++n)
                if (t.counts[n] > 0 && tables.is_prime(n)) std::printf("%llu\n", (unsigned long long)n);
            return 0;
        }
        if (*cmd_cong) {
            json j;
            if (*cg_chen) {
                ChenDecomposition d = chen_search(chen_ell, chen_semi);
                j = report_header({{"ell", chen_ell}, {"semiprime", chen_semi}});
                j["M"] = d.M;
                j["p"] = d.p;
                j["cofactor"] = d.cofactor;
            } else if (*cg_frey) {
                FreyRecord f = frey_invariants(frey_p, frey_q, frey_ell);
                j = report_header({{"p", frey_p}, {"q", frey_q}, {"ell", frey_ell}});
                j["min_discriminant"] = f.min_discriminant;
                j["conductor"] = f.conductor;
                j["v2_disc"] = f.v2_disc;
            } else if (*cg_trace) {
                long long ap = trace_of_frobenius({tr_a2, tr_a4, tr_a6}, tr_p);
                j = report_header({{"a2", tr_a2}, {"a4", tr_a4}, {"a6", tr_a6}, {"p", tr_p}});
                j["a_p"] = ap;
            } else if (*cg_deg) {
                j = report_header({{"ell", deg_ell}, {"q", deg_q}});
                j["degree_lower_bound"] = degree_lower_bound(deg_ell, deg_q);
            } else if (*cg_ogg) {
                j = report_header({{"p", ogg_p}, {"q", ogg_q}});
                j["numerator"] = ogg_numerator(ogg_p, ogg_q);
            } else if (*cg_quartic) {
                auto v = quartic_solution_search(qu_ell, qu_bound);
                j = report_header({{"ell", qu_ell}, {"bound", qu_bound}});
                json arr = json::array();
                for (auto& s : v) arr.push_back({{"A", s.A}, {"B", s.B}, {"p", s.p}});
                j["solutions"] = arr;
            } else if (*cg_qcurve) {
                QCurveRecord r = qcurve_construct(qc_A, qc_B, qc_ell, qc_p);
                j = report_header({{"A", qc_A}, {"B", qc_B}, {"ell", qc_ell}, {"p", qc_p}});
                j["a2"] = r.a2;
                j["a4"] = r.a4.str();
                j["discriminant"] = r.discriminant.str();
            }
            emit(j, "");
            return 0;
        }
        if (*cmd_verify) return run_verify(verify_suite, budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow risk: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
