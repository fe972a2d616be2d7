#ifndef POLYSCHUR_INT128_HPP
#define POLYSCHUR_INT128_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "polyschur/errors.hpp"

namespace polyschur {

// Polynomial values reach magnitude ~n^(d^2) inside the constructions
// (p evaluated near p(n)/2), which leaves 64 bits long before the interesting
// range.  All value arithmetic is 128-bit with explicit overflow checks.
using Int = __int128;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("128-bit overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("128-bit overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("128-bit overflow in multiplication");
    return r;
}

// base^exp with exp >= 0, checked.
Int checked_pow(Int base, long long exp);

inline Int abs_int(Int v) { return v < 0 ? checked_sub(0, v) : v; }

// Ceiling of a/b for b > 0.
inline Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

std::string to_string(Int v);

// Parses an optionally signed decimal integer; the whole string must be
// consumed.  Throws ParseError (column relative to the start of `s`).
Int parse_int(std::string_view s, int line = 1, int column = 1);

inline long long to_int64(Int v, const char* what = "value") {
    if (v > INT64_MAX || v < INT64_MIN)
        throw Overflow(std::string(what) + " does not fit 64 bits: " + to_string(v));
    return static_cast<long long>(v);
}

}  // namespace polyschur

#endif
