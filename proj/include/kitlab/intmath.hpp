// Exact integer and modular arithmetic primitives shared across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace kitlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int mod_norm(long long v, int d) {
    long long r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

inline int mod_norm(const BigInt& v, int d) {
    BigInt r = v % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo m; throws if gcd(a,m) != 1.
inline int mod_inverse(int a, int m) {
    long long x, y;
    long long g = ext_gcd(mod_norm(a, m), m, x, y);
    if (g != 1 && g != -1)
        throw std::invalid_argument("mod_inverse: element is not a unit");
    return mod_norm(x, m);
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r = 1, b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1UL;
    }
    return r;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace kitlab
