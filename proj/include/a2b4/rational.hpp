#pragma once

// Exact rational arithmetic on 128-bit integers. Values of the
// multiplicative functions g, h and the constants G(c), H(c)/sqrt(c)
// stay well within this range at desk scale (denominators <= d^3).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace a2b4 {

using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { int128 t = a % b; a = b; b = t; }
    return a;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u) { s.insert(s.begin(), char('0' + (int)(u % 10))); u /= 10; }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

// Rational number in lowest terms, denominator > 0.
struct Rat {
    int128 num = 0;
    int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(int128 n, int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::invalid_argument("Rat: division by zero");
        return Rat(num * o.den, den * o.num);
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    bool is_zero() const { return num == 0; }
    double to_double() const { return (double)num / (double)den; }
    long double to_long_double() const { return (long double)num / (long double)den; }

    // "num/den" (or just "num" when integral), the fixture serialization.
    std::string str() const {
        if (den == 1) return int128_to_string(num);
        return int128_to_string(num) + "/" + int128_to_string(den);
    }
};

}  // namespace a2b4
