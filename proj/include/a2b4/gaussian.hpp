#pragma once

// Exact arithmetic in the Gaussian integers, enough for the Q-curve
// coefficient and discriminant identities. Multiplications are
// overflow-checked; desk-scale inputs stay far inside 64 bits.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace a2b4 {

namespace detail {

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GaussianInt: multiply overflow");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GaussianInt: add overflow");
    return r;
}

}  // namespace detail

struct GaussianInt {
    long long re = 0;
    long long im = 0;

    GaussianInt() = default;
    GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    GaussianInt operator+(const GaussianInt& o) const {
        return {detail::checked_add(re, o.re), detail::checked_add(im, o.im)};
    }
    GaussianInt operator-(const GaussianInt& o) const {
        return {detail::checked_add(re, -o.re), detail::checked_add(im, -o.im)};
    }
    GaussianInt operator*(const GaussianInt& o) const {
        long long r = detail::checked_add(detail::checked_mul(re, o.re),
                                          -detail::checked_mul(im, o.im));
        long long i = detail::checked_add(detail::checked_mul(re, o.im),
                                          detail::checked_mul(im, o.re));
        return {r, i};
    }
    GaussianInt operator*(long long k) const {
        return {detail::checked_mul(re, k), detail::checked_mul(im, k)};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    GaussianInt conj() const { return {re, -im}; }

    unsigned __int128 norm() const {
        return (unsigned __int128)((__int128)re * re + (__int128)im * im);
    }

    std::string str() const {
        if (im == 0) return std::to_string(re);
        std::string s = std::to_string(re);
        s += (im < 0) ? "-" : "+";
        s += std::to_string(im < 0 ? -im : im) + "i";
        return s;
    }
};

}  // namespace a2b4
