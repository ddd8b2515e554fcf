#pragma once

// Shared arithmetic primitives: sieved tables, 64-bit factorization,
// classical multiplicative functions, and the d = d1*d3^2*d4^4 split
// of a modulus used throughout the local-density machinery.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace a2b4 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Deterministic 64-bit primality (Miller-Rabin, fixed witness set).
// ---------------------------------------------------------------------------

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Valid for all n < 2^64 with the witness set {2,3,5,7,11,13,17,19,23,29,31,37}.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // (prime, exponent), primes increasing

    u64 reconstruct() const {
        u64 v = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
};

namespace detail {

// Brent's cycle variant of Pollard rho; n must be odd composite, not a prime power of 2.
inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 x0 = 2, c = 1;
    while (true) {
        u64 x = x0, y = x0, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
        ++x0;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::vector<u64> primes;
    // strip small factors first, hand the rest to rho
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], (int)(j - i));
        i = j;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Sieved tables: smallest prime factor, mu, and prime-power marks for Lambda.
// ---------------------------------------------------------------------------

struct ArithTables {
    u64 limit = 0;
    std::vector<std::uint32_t> smallest_prime_factor;  // spf[n], n <= limit
    std::vector<std::int8_t> mobius;                   // mu(n)
    std::vector<std::uint32_t> mangoldt_prime;         // p if n = p^k, else 0

    bool is_prime(u64 n) const { return n >= 2 && smallest_prime_factor[n] == n; }

    // Lambda(n) = log p exactly when n = p^k.
    double mangoldt(u64 n) const {
        std::uint32_t p = mangoldt_prime[n];
        return p ? std::log((double)p) : 0.0;
    }

    std::vector<u64> primes() const {
        std::vector<u64> ps;
        for (u64 n = 2; n <= limit; ++n)
            if (is_prime(n)) ps.push_back(n);
        return ps;
    }
};

inline ArithTables build_tables(u64 limit, u64 memory_bound = (1ull << 33)) {
    if (limit == 0) throw std::invalid_argument("build_tables: limit must be positive");
    u64 bytes = (limit + 1) * (sizeof(std::uint32_t) * 2 + 1);
    if (bytes > memory_bound)
        throw std::invalid_argument("build_tables: limit " + std::to_string(limit) +
                                    " needs " + std::to_string(bytes) + " bytes, over the bound");
    ArithTables t;
    t.limit = limit;
    t.smallest_prime_factor.assign(limit + 1, 0);
    t.mobius.assign(limit + 1, 0);
    t.mangoldt_prime.assign(limit + 1, 0);
    auto& spf = t.smallest_prime_factor;
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (u64 j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = (std::uint32_t)i;
        }
    }
    if (limit >= 1) t.mobius[1] = 1;
    for (u64 n = 2; n <= limit; ++n) {
        u64 p = spf[n], m = n / p;
        t.mobius[n] = (m % p == 0) ? 0 : (std::int8_t)(-t.mobius[m]);
        // n = p^k iff n/p is 1 or itself a power of p
        if (m == 1 || t.mangoldt_prime[m] == p) t.mangoldt_prime[n] = (std::uint32_t)p;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Quartic decomposition d = d1 * d3^2 * d4^4, d1 and d3 squarefree.
// ---------------------------------------------------------------------------

struct QuarticDecomposition {
    u64 d1 = 1, d3 = 1, d4 = 1, d1star = 1;
    u64 d2() const { return d3 * d4 * d4; }
};

inline QuarticDecomposition quartic_decompose_factored(const Factorization& f) {
    QuarticDecomposition q;
    for (auto [p, e] : f.factors) {
        int e4 = e / 4, r = e % 4;
        int e3 = r / 2, e1 = r % 2;
        if (e1) q.d1 *= p;
        for (int i = 0; i < e3; ++i) q.d3 *= p;
        for (int i = 0; i < e4; ++i) q.d4 *= p;
    }
    q.d1star = q.d1 / std::gcd(q.d1, (u64)2);
    return q;
}

inline QuarticDecomposition quartic_decompose(u64 d) {
    return quartic_decompose_factored(factorize(d));
}

// ---------------------------------------------------------------------------
// Classical functions
// ---------------------------------------------------------------------------

// Character of conductor 4.
inline int chi4(long long n) {
    long long r = n % 4;
    if (r < 0) r += 4;
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

struct ArithValues {
    u64 phi = 1;
    u64 tau = 1;
    u64 tau5 = 1;  // tau5(p^e) = C(e+4, 4)
    int mu = 1;
};

inline ArithValues arith_values(const Factorization& f) {
    ArithValues v;
    for (auto [p, e] : f.factors) {
        u64 pe1 = 1;
        for (int i = 0; i < e - 1; ++i) pe1 *= p;
        v.phi *= pe1 * (p - 1);
        v.tau *= (u64)(e + 1);
        v.tau5 *= (u64)(e + 1) * (e + 2) * (e + 3) * (e + 4) / 24;
        v.mu = (e > 1) ? 0 : -v.mu;
    }
    return v;
}

inline u64 euler_phi(u64 n) { return arith_values(factorize(n)).phi; }
inline u64 tau(u64 n) { return arith_values(factorize(n)).tau; }
inline int mobius(u64 n) { return arith_values(factorize(n)).mu; }

inline bool is_cubefree(const Factorization& f) {
    for (auto [p, e] : f.factors)
        if (e > 2) return false;
    return true;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds{1};
    for (auto [p, e] : factorize(n).factors) {
        size_t sz = ds.size();
        u64 pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline u64 isqrt_u64(u64 n) {
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace a2b4
