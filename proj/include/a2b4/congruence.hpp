#pragma once

// Congruence constructions: Chen/Goldbach decompositions of 2^{l+4},
// Frey curve invariants, trace-of-Frobenius point counts, coefficient-
// field degree lower bounds, Eisenstein level searches, and Q-curves
// from A^4 + B^2 = 5^l p.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "a2b4/arith.hpp"
#include "a2b4/gaussian.hpp"

namespace a2b4 {

// ---------------------------------------------------------------------------
// Chen / Goldbach decompositions of 2^{l+4}
// ---------------------------------------------------------------------------

struct ChenDecomposition {
    u64 ell = 0;
    u64 M = 0;                  // 2^{l+4}
    u64 p = 0;                  // prime, p = 3 mod 4
    std::vector<u64> cofactor;  // q, or {q, r} with q != r

    u64 cofactor_product() const {
        u64 v = 1;
        for (u64 q : cofactor) v *= q;
        return v;
    }
};

// "pseudo-prime" cofactor: a prime, or a product of two distinct primes.
inline bool is_valid_cofactor(u64 m, bool allow_semiprime, std::vector<u64>& parts) {
    parts.clear();
    if (is_prime_u64(m)) { parts.push_back(m); return true; }
    if (!allow_semiprime) return false;
    auto f = factorize(m);
    if (f.factors.size() == 2 && f.factors[0].second == 1 && f.factors[1].second == 1) {
        parts.push_back(f.factors[0].first);
        parts.push_back(f.factors[1].first);
        return true;
    }
    return false;
}

// Smallest p = 3 mod 4 with 2^{l+4} - p prime (or a product of two
// distinct primes when the flag is set).
inline ChenDecomposition chen_search(u64 ell, bool allow_semiprime = false) {
    if (ell == 0 || ell > 40) throw std::invalid_argument("chen_search: need 1 <= ell <= 40");
    u64 M = 1ull << (ell + 4);
    std::vector<u64> parts;
    for (u64 p = 3; p < M; p += 4) {
        if (!is_prime_u64(p)) continue;
        if (is_valid_cofactor(M - p, allow_semiprime, parts)) {
            ChenDecomposition d;
            d.ell = ell;
            d.M = M;
            d.p = p;
            d.cofactor = parts;
            return d;
        }
    }
    throw std::runtime_error("chen_search: exhausted primes below 2^" + std::to_string(ell + 4));
}

// ---------------------------------------------------------------------------
// Frey curve y^2 = x (x - p) (x + 2^{l+4})
// ---------------------------------------------------------------------------

struct FreyRecord {
    u64 p = 0, q = 0, ell = 0;
    u64 min_discriminant = 0;  // (2^l p q)^2
    u64 conductor = 0;         // 2 p q
    u64 v2_disc = 0;           // 2 l
};

inline FreyRecord frey_invariants(u64 p, u64 q, u64 ell) {
    if (!is_prime_u64(p) || !is_prime_u64(q)) throw std::invalid_argument("frey_invariants: p, q must be prime");
    if (p % 4 != 3) throw std::invalid_argument("frey_invariants: p must be 3 mod 4");
    if (p % 2 == 0 || q % 2 == 0) throw std::invalid_argument("frey_invariants: p*q must be odd");
    if (ell == 0 || ell + 4 >= 63) throw std::invalid_argument("frey_invariants: ell out of range");
    if (p + q != (1ull << (ell + 4)))
        throw std::invalid_argument("frey_invariants: p + q != 2^(ell+4)");
    FreyRecord r;
    r.p = p;
    r.q = q;
    r.ell = ell;
    u64 root = (1ull << ell) * p * q;
    r.min_discriminant = root * root;
    r.conductor = 2 * p * q;
    r.v2_disc = 2 * ell;
    return r;
}

// ---------------------------------------------------------------------------
// Trace of Frobenius by point counting
// ---------------------------------------------------------------------------

struct CurveQ {
    long long a2 = 0, a4 = 0, a6 = 0;  // y^2 = x^3 + a2 x^2 + a4 x + a6

    // discriminant of the Weierstrass model (a1 = a3 = 0)
    __int128 discriminant() const {
        __int128 b2 = 4 * (__int128)a2;
        __int128 b4 = 2 * (__int128)a4;
        __int128 b6 = 4 * (__int128)a6;
        __int128 b8 = 4 * (__int128)a2 * a6 - (__int128)a4 * a4;
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    }
};

// a_p = - sum_{x mod p} legendre(x^3 + a2 x^2 + a4 x + a6, p); Hasse bound checked.
inline long long trace_of_frobenius(const CurveQ& curve, u64 p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("trace_of_frobenius: p must be prime");
    if (p > 1000000) throw std::invalid_argument("trace_of_frobenius: p above the point-count bound");
    __int128 disc = curve.discriminant();
    if (disc == 0) throw std::invalid_argument("trace_of_frobenius: singular curve");
    {
        __int128 d = disc < 0 ? -disc : disc;
        int vp = 0;
        while (d % (__int128)p == 0) { d /= (__int128)p; ++vp; }
        if (vp > 0)
            throw std::invalid_argument("trace_of_frobenius: bad reduction, v_p(disc) = " + std::to_string(vp));
    }
    // quadratic-residue table (p is odd here: this model always has bad reduction at 2)
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (u64 s = 1; s <= (p - 1) / 2; ++s) chi[mulmod_u64(s, s, p)] = 1;
    auto red = [&](long long v) { long long r = v % (long long)p; return (u64)(r < 0 ? r + (long long)p : r); };
    u64 A2 = red(curve.a2), A4 = red(curve.a4), A6 = red(curve.a6);
    long long sum = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 f = (mulmod_u64(mulmod_u64(x, x, p), (x + A2) % p, p) + mulmod_u64(A4, x, p) + A6) % p;
        sum += chi[f];
    }
    long long ap = -sum;
    if ((double)ap * ap > 4.0 * (double)p + 1e-9)
        throw std::runtime_error("trace_of_frobenius: Hasse bound violated");
    return ap;
}

// ---------------------------------------------------------------------------
// Degree lower bounds from the congruences a_q = +-(1+q) mod lambda
// ---------------------------------------------------------------------------

// Least degree compatible with l | Norm(a_q -+ (1+q)) when every conjugate of
// a_q is bounded by 2 sqrt(q): ceil(ln l / (2 ln(1 + sqrt(q)))). For q = 2 the
// base is (1 + sqrt 2)^2 = 3 + 2 sqrt 2.
inline u64 degree_lower_bound(u64 ell, u64 q) {
    if (ell < 5) throw std::invalid_argument("degree_lower_bound: ell must be >= 5");
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw std::invalid_argument("degree_lower_bound: q must be in {2,3,5,7}");
    double ratio = std::log((double)ell) / (2.0 * std::log(1.0 + std::sqrt((double)q)));
    return (u64)std::ceil(ratio - 1e-12);
}

// ---------------------------------------------------------------------------
// Ogg cuspidal-divisor order: numerator of (p-1)(q+1)/24
// ---------------------------------------------------------------------------

inline u64 ogg_numerator(u64 p, u64 q) {
    if (p == q) throw std::invalid_argument("ogg_numerator: p and q must be distinct");
    if (p % 2 == 0 || q % 2 == 0 || !is_prime_u64(p) || !is_prime_u64(q))
        throw std::invalid_argument("ogg_numerator: p, q must be odd primes");
    u64 num = (p - 1) * (q + 1);
    u64 g = std::gcd(num, (u64)24);
    return num / g;
}

// ---------------------------------------------------------------------------
// Eisenstein level searches (Dirichlet progressions)
// ---------------------------------------------------------------------------

struct EisensteinLevel {
    u64 p = 0;  // set when t = 2
    u64 q = 0;  // the N = 1 mod l prime (t = 1) or the q = -1 mod l prime (t = 2)
};

inline EisensteinLevel eisenstein_level_search(u64 ell, int t) {
    if (ell < 5 || !is_prime_u64(ell)) throw std::invalid_argument("eisenstein_level_search: ell must be a prime >= 5");
    u64 cap = 1000000ull * ell;
    EisensteinLevel out;
    if (t == 1) {
        for (u64 n = ell + 1; n <= cap; n += ell)
            if (is_prime_u64(n)) { out.q = n; return out; }
        throw std::runtime_error("eisenstein_level_search: cap reached for N = 1 mod l");
    }
    if (t != 2) throw std::invalid_argument("eisenstein_level_search: t must be 1 or 2");
    for (u64 n = ell - 1; n <= cap; n += ell)
        if (is_prime_u64(n)) { out.q = n; break; }
    if (out.q == 0) throw std::runtime_error("eisenstein_level_search: cap reached for q = -1 mod l");
    for (u64 p = 3; p <= cap; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (p % ell == 1) continue;
        if (p == out.q) continue;
        out.p = p;
        return out;
    }
    throw std::runtime_error("eisenstein_level_search: cap reached for p");
}

// ---------------------------------------------------------------------------
// A^4 + B^2 = 5^l p and the attached Q-curve
// ---------------------------------------------------------------------------

struct QuarticSolution {
    u64 A = 0, B = 0, p = 0;
};

// All (A, B) with A^4 + B^2 <= 5^l bound, A^4 + B^2 = 5^l p, p an odd prime
// other than 5 (and other than l), with v_5 exactly l; ascending by p.
inline std::vector<QuarticSolution> quartic_solution_search(u64 ell, u64 bound) {
    if (bound == 0) throw std::invalid_argument("quartic_solution_search: bound must be positive");
    u128 five_l = 1;
    for (u64 i = 0; i < ell; ++i) {
        five_l *= 5;
        if (five_l > (u128)1 << 62) throw std::invalid_argument("quartic_solution_search: 5^ell too large");
    }
    u128 cap128 = five_l * bound;
    if (cap128 > (u128)1 << 62) throw std::invalid_argument("quartic_solution_search: 5^ell * bound exceeds 64-bit range");
    u64 cap = (u64)cap128, f = (u64)five_l;
    std::vector<QuarticSolution> out;
    for (u64 A = 1; A * A * A * A <= cap; ++A) {
        u64 A4 = A * A * A * A;
        u64 Bmax = isqrt_u64(cap - A4);
        for (u64 B = 1; B <= Bmax; ++B) {
            u64 v = A4 + B * B;
            if (v % f) continue;
            u64 m = v / f;
            if (m % 5 == 0) continue;  // v_5 exactly ell
            if (m == 2 || m == 5 || m == ell) continue;
            if (m < 3 || !is_prime_u64(m)) continue;
            out.push_back({A, B, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuarticSolution& a, const QuarticSolution& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.A != b.A) return a.A < b.A;
        return a.B < b.B;
    });
    return out;
}

struct QCurveRecord {
    u64 A = 0, B = 0, ell = 0, p = 0;
    long long a2 = 0;           // 4A
    GaussianInt a4;             // 2(A^2 + iB)
    GaussianInt discriminant;   // 512 (A^2 + iB) 5^l p
};

// y^2 = x^3 + 4A x^2 + 2(A^2 + iB) x over Q(i). The discriminant is computed
// from the stated product and from the cubic formula 16 a4^2 (a2^2 - 4 a4);
// the two must agree.
inline QCurveRecord qcurve_construct(u64 A, u64 B, u64 ell, u64 p) {
    if (A == 0 || B == 0) throw std::invalid_argument("qcurve_construct: A, B must be positive");
    u128 five_l = 1;
    for (u64 i = 0; i < ell; ++i) five_l *= 5;
    u128 lhs = (u128)A * A * A * A + (u128)B * B;
    if (lhs != five_l * p) throw std::invalid_argument("qcurve_construct: A^4 + B^2 != 5^ell * p");
    QCurveRecord r;
    r.A = A;
    r.B = B;
    r.ell = ell;
    r.p = p;
    r.a2 = 4 * (long long)A;
    GaussianInt core((long long)(A * A), (long long)B);  // A^2 + iB
    r.a4 = core * 2;
    r.discriminant = core * (long long)((u64)(five_l * p)) * 512;
    GaussianInt cubic = (r.a4 * r.a4) *
                        (GaussianInt(r.a2 * r.a2, 0) - r.a4 * 4) * 16;
    if (cubic != r.discriminant)
        throw std::runtime_error("qcurve_construct: discriminant identity failed");
    return r;
}

}  // namespace a2b4
