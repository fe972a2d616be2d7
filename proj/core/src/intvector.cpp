#include "polyschur/intvector.hpp"

namespace polyschur {

Int dot(const IntVector& u, const IntVector& v) {
    const IntVector& small = u.support_size() <= v.support_size() ? u : v;
    const IntVector& large = u.support_size() <= v.support_size() ? v : u;
    Int acc = 0;
    for (const auto& [i, val] : small.entries()) {
        Int other = large.get(i);
        if (other != 0) acc = checked_add(acc, checked_mul(val, other));
    }
    return acc;
}

Int dot_id_power(const IntVector& v, long long power) {
    Int acc = 0;
    for (const auto& [i, val] : v.entries())
        acc = checked_add(acc, checked_mul(val, checked_pow(i, power)));
    return acc;
}

IntVector vector_b(long long t, long long s) {
    if (t < 1 || s < 1) throw PreconditionViolated("vector_b needs t >= 1 and s >= 1");
    IntVector b;
    Int binom = 1;  // binom(t, j), built incrementally
    for (long long j = 1; j <= t; ++j) {
        binom = checked_mul(binom, t - j + 1) / j;
        b.set(j * s, (j % 2 == 0) ? binom : checked_sub(0, binom));
    }
    return b;
}

IntVector m_vector(const Polynomial& p, long long k, long long len) {
    if (len < 1) throw PreconditionViolated("m_vector needs len >= 1");
    IntVector m;
    for (long long s = 1; s <= len; ++s) m.set(s, difference_m(p, k, s));
    return m;
}

}  // namespace polyschur
