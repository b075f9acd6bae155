#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace concord {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

[[noreturn]] inline void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

// Quotient with remainder minimized in absolute value.
inline Int div_nearest(const Int& a, const Int& b) {
    Int q = a / b, r = a - q * b;
    if (abs_int(r) * 2 > abs_int(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

// Quotient rounded toward minus infinity.
inline Int div_floor(const Int& a, const Int& b) {
    Int q = a / b, r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - div_floor(a, b) * b; }

struct XGcd {
    Int g, s, t;  // g = gcd >= 0, s*a + t*b = g
};

inline XGcd xgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

// x mod 1 represented in [0, 1).
inline Rat mod1(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    return Rat(mod_floor(n, d), d);
}

}  // namespace concord
