#pragma once

// Exact evaluation of the multiplicative density g, its companion h,
// the aggregates G(c) and H(c), the lattice constant
// kappa = int_0^1 sqrt(1 - t^4) dt, the sieve constant 4/pi, and the
// main-term coefficient (4/pi) kappa G(c) c^{3/4}.

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "a2b4/arith.hpp"
#include "a2b4/rational.hpp"
#include "a2b4/rho.hpp"

namespace a2b4 {

// ---------------------------------------------------------------------------
// g and h from their defining divisor sums over (nu4 | d4, nu3 | d3, nu1 | d1*).
// ---------------------------------------------------------------------------

namespace detail {

// Shared triple loop; the two functions differ only in the summand weight.
template <class Weight>
Rat gh_divisor_sum(u64 d, Weight weight) {
    auto q = quartic_decompose(d);
    u64 base = q.d1star * q.d3 * q.d4;
    Rat total(0);
    for (u64 nu4 : divisors(q.d4)) {
        for (u64 nu3 : divisors(q.d3)) {
            if (std::gcd(nu3, q.d4 / nu4) != 1) continue;
            u64 w3 = std::gcd(nu3, q.d1star);
            for (u64 nu1 : divisors(q.d1star / w3)) {
                if (std::gcd(nu1, q.d3 * q.d4 / (nu3 * nu4)) != 1) continue;
                u64 delta = base / (w3 * nu1 * nu3 * nu4);
                u64 rho2 = rho_of_square(delta);
                if (rho2 == 0) continue;
                total += weight(nu4, nu3, w3, delta, rho2);
            }
        }
    }
    return total / Rat((long long)d);
}

}  // namespace detail

// g(d) as its defining sum.
inline Rat g_sum(u64 d) {
    if (d == 0) throw std::invalid_argument("g_sum: d must be positive");
    auto q = quartic_decompose(d);
    u64 base = q.d1star * q.d3 * q.d4;
    return detail::gh_divisor_sum(d, [base](u64 nu4, u64 nu3, u64 w3, u64 delta, u64 rho2) {
        u64 num = nu4 * nu4 * nu3 * w3 * rho2 * euler_phi(delta);
        return Rat((int128)num, (int128)base);
    });
}

// h(d) as its defining sum.
inline Rat h_sum(u64 d) {
    if (d == 0) throw std::invalid_argument("h_sum: d must be positive");
    return detail::gh_divisor_sum(d, [](u64 nu4, u64 nu3, u64 w3, u64 delta, u64 rho2) {
        return Rat((long long)(nu4 * nu4 * nu3 * rho2 * tau(delta)));
    });
}

// ---------------------------------------------------------------------------
// Closed form of g at prime powers:
//   g(2^{4a+r}) = 1 / 2^{3a+r}
//   g(p^{4a+r}) = (1+chi4(p))(1-1/p)(p^a-1)/((p-1) p^{4a+r}) + g_r(p)/p^{3a+r}
// with g_r the 4-way case table on r.
// ---------------------------------------------------------------------------

inline Rat g_residue_factor(u64 p, int r) {
    // g_r(p), r in {0,1,2,3}, p odd
    Rat one(1), invp((int128)1, (int128)p);
    switch (r) {
        case 0: return one;
        case 1: return one + Rat(chi4((long long)p)) * (one - invp);
        case 2:
        case 3: return one + Rat(1 + chi4((long long)p)) * (one - invp);
        default: throw std::invalid_argument("g_residue_factor: r out of range");
    }
}

inline Rat g_closed_prime_power(u64 p, int e) {
    int a = e / 4, r = e % 4;
    if (p == 2) {
        int128 den = (int128)1 << (3 * a + r);
        return Rat((int128)1, den);
    }
    int128 p4ar = 1;
    for (int i = 0; i < e; ++i) p4ar *= (int128)p;
    int128 p3ar = 1;
    for (int i = 0; i < 3 * a + r; ++i) p3ar *= (int128)p;
    int128 pa = 1;
    for (int i = 0; i < a; ++i) pa *= (int128)p;
    Rat first = Rat((int128)(1 + chi4((long long)p)), 1) *
                Rat((int128)(p - 1), (int128)p) *
                Rat(pa - 1, (int128)(p - 1)) / Rat(p4ar, 1);
    Rat second = g_residue_factor(p, r) / Rat(p3ar, 1);
    return first + second;
}

inline Rat g_closed(u64 d) {
    if (d == 0) throw std::invalid_argument("g_closed: d must be positive");
    Rat r(1);
    for (auto [p, e] : factorize(d).factors) r *= g_closed_prime_power(p, e);
    return r;
}

// h on cubefree arguments via h(p)p = 1 + 2 rho(p), h(p^2)p^2 = p + 2 rho(p)
// for odd p; at p = 2 the divisor sum gives h(2) = h(4) = 1/2 instead.
// General arguments fall back to the divisor sum.
inline Rat h_value(u64 d) {
    auto f = factorize(d);
    if (!is_cubefree(f)) return h_sum(d);
    Rat r(1);
    for (auto [p, e] : f.factors) {
        if (p == 2) {
            r *= Rat(1, 2);
            continue;
        }
        u64 rp = rho_mult(p);
        if (e == 1)
            r *= Rat((int128)(1 + 2 * rp), (int128)p);
        else
            r *= Rat((int128)(p + 2 * rp), (int128)p * (int128)p);
    }
    return r;
}

// ---------------------------------------------------------------------------
// G(c) and H(c)
// ---------------------------------------------------------------------------

// Moebius-sum form: G(c) = sum_{k|c} mu(k) g(ck).
inline Rat big_G_moebius(u64 c) {
    Rat total(0);
    for (u64 k : divisors(c)) {
        int mu = mobius(k);
        if (mu == 0) continue;
        total += Rat(mu) * g_closed(c * k);
    }
    return total;
}

// Product form: G(c) = prod_{p|c} (g(p^{v_p(c)}) - g(p^{v_p(c)+1})).
inline Rat big_G_product(u64 c) {
    Rat total(1);
    for (auto [p, e] : factorize(c).factors)
        total *= g_closed_prime_power(p, e) - g_closed_prime_power(p, e + 1);
    return total;
}

// Both forms, required to agree.
inline Rat big_G(u64 c) {
    if (c == 0) throw std::invalid_argument("big_G: c must be positive");
    Rat m = big_G_moebius(c), pr = big_G_product(c);
    if (m != pr) throw std::runtime_error("big_G: Moebius and product forms disagree at c=" + std::to_string(c));
    return m;
}

// Rational part of H(c), i.e. H(c)/sqrt(c) = sum_{k|c} h(ck).
inline Rat big_H_rational(u64 c) {
    Rat total(0);
    for (u64 k : divisors(c)) total += h_sum(c * k);
    return total;
}

inline double big_H(u64 c) {
    if (c == 0) throw std::invalid_argument("big_H: c must be positive");
    return std::sqrt((double)c) * big_H_rational(c).to_double();
}

// ---------------------------------------------------------------------------
// kappa = int_0^1 sqrt(1 - t^4) dt = Gamma(1/4)^2 / (6 sqrt(2 pi))
// ---------------------------------------------------------------------------

inline double kappa_gamma_form() {
    double g = std::tgamma(0.25);
    return g * g / (6.0 * std::sqrt(2.0 * M_PI));
}

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) throw std::runtime_error("kappa: quadrature failed to converge");
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace detail

// Quadrature after the substitution t = 1 - u^2, which removes the
// square-root behavior of the integrand's derivative at t = 1.
inline double kappa(double tolerance = 1e-9) {
    if (tolerance < 1e-12) throw std::invalid_argument("kappa: tolerance below 1e-12");
    std::function<double(double)> f = [](double u) {
        double t = 1.0 - u * u;
        double inner = 1.0 - t * t * t * t;
        if (inner < 0) inner = 0;
        return 2.0 * u * std::sqrt(inner);
    };
    double fa = f(0.0), fb = f(1.0), fm = f(0.5);
    double whole = (1.0 / 6.0) * (fa + 4.0 * fm + fb);
    double value = detail::adaptive_simpson(f, 0.0, 1.0, fa, fm, fb, whole, tolerance, 60);
    if (std::abs(value - kappa_gamma_form()) > 100 * tolerance + 1e-9)
        throw std::runtime_error("kappa: quadrature disagrees with Gamma expression");
    return value;
}

// g at primes, used by the Euler product and by the hypothesis audits.
inline double g_at_prime_double(u64 p) {
    if (p == 2) return 0.5;
    // (1 + chi4(p)(1 - 1/p)) / p
    return (1.0 + chi4((long long)p) * (1.0 - 1.0 / (double)p)) / (double)p;
}

// Partial product prod_{p<=y} (1 - g(p)) (1 - 1/p)^{-1}; converges to
// L(1,chi4)^{-1} = 4/pi.
inline double sieve_constant_partial(u64 y) {
    if (y < 2) throw std::invalid_argument("sieve_constant_partial: y must be >= 2");
    std::vector<bool> comp(y + 1, false);
    double prod = 1.0;
    for (u64 p = 2; p <= y; ++p) {
        if (comp[p]) continue;
        for (u64 j = p * p; j <= y; j += p) comp[j] = true;
        prod *= (1.0 - g_at_prime_double(p)) / (1.0 - 1.0 / (double)p);
    }
    return prod;
}

// ---------------------------------------------------------------------------
// Main-term coefficient of the Lambda-weighted sum: (4/pi) kappa G(c) c^{3/4}.
// ---------------------------------------------------------------------------

struct MainTermModel {
    u64 c = 1;
    Rat G_c;
    double kappa_value = 0;
    double coefficient = 0;  // (4/pi) kappa G(c) c^{3/4}
};

inline MainTermModel main_term_coefficient(u64 c) {
    MainTermModel m;
    m.c = c;
    m.G_c = big_G(c);
    m.kappa_value = kappa(1e-10);
    m.coefficient = m.G_c.is_zero()
                        ? 0.0
                        : (4.0 / M_PI) * m.kappa_value * m.G_c.to_double() * std::pow((double)c, 0.75);
    return m;
}

}  // namespace a2b4
