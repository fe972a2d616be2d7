#include "polyschur/int128.hpp"

#include <algorithm>
#include <cctype>

namespace polyschur {

Int checked_pow(Int base, long long exp) {
    if (exp < 0) throw PreconditionViolated("negative exponent");
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, b);
        exp >>= 1;
        if (exp > 0) b = checked_mul(b, b);
    }
    return r;
}

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits from the absolute value without negating INT128_MIN.
    unsigned __int128 u = neg ? (~static_cast<unsigned __int128>(v) + 1)
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int parse_int(std::string_view s, int line, int column) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size())
        throw ParseError("expected an integer", line, column + static_cast<int>(i));
    Int value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("invalid character in integer", line, column + static_cast<int>(i));
        value = checked_add(checked_mul(value, 10), s[i] - '0');
    }
    return neg ? checked_sub(0, value) : value;
}

}  // namespace polyschur
