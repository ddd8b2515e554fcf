#pragma once

// Local density rho(b;d) = #{alpha mod d : alpha^2 + b^2 = 0 mod d},
// via the closed formula rho(b;d) = b2 * rho((d1*.d2/(b1.b2))^2) with
// b2 = (b, d2), b1 = (b/b2, d1*), and via a brute-force oracle.

#include <numeric>
#include <stdexcept>

#include "a2b4/arith.hpp"

namespace a2b4 {

// Multiplicative rho with rho(p^a) = 1 + chi4(p), except rho(m) = 0 when 4 | m.
inline u64 rho_mult(u64 m) {
    if (m == 0) throw std::invalid_argument("rho_mult: m must be positive");
    if (m % 4 == 0) return 0;
    u64 r = 1;
    for (auto [p, e] : factorize(m).factors) {
        int f = 1 + chi4((long long)p);
        if (f == 0) return 0;
        r *= (u64)f;
    }
    return r;
}

// rho(m^2) without forming m^2: zero when m is even (4 | m^2).
inline u64 rho_of_square(u64 m) {
    if (m == 0) throw std::invalid_argument("rho_of_square: m must be positive");
    if (m % 2 == 0) return 0;
    u64 r = 1;
    for (auto [p, e] : factorize(m).factors) {
        int f = 1 + chi4((long long)p);
        if (f == 0) return 0;
        r *= (u64)f;
    }
    return r;
}

// Closed formula. b is reduced mod d first; gcd(0, n) = n makes b = 0 work.
inline u64 rho_pair(long long b_in, u64 d) {
    if (d == 0) throw std::invalid_argument("rho_pair: d must be positive");
    long long b = b_in % (long long)d;
    if (b < 0) b += (long long)d;
    auto q = quartic_decompose(d);
    u64 d2 = q.d2();
    u64 b2 = std::gcd((u64)b, d2);
    u64 b1 = std::gcd((u64)b / b2, q.d1star);
    return b2 * rho_of_square(q.d1star * d2 / (b1 * b2));
}

// Literal count over alpha in [0, d).
inline u64 rho_pair_oracle(u64 b, u64 d) {
    if (d == 0) throw std::invalid_argument("rho_pair_oracle: d must be positive");
    if (d > 1000000) throw std::invalid_argument("rho_pair_oracle: d too large for the O(d) loop");
    u64 b2 = (u64)((u128)b * b % d);
    u64 count = 0;
    for (u64 a = 0; a < d; ++a)
        if (((u128)a * a + b2) % d == 0) ++count;
    return count;
}

}  // namespace a2b4
