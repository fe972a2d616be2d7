#include "polyschur/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polyschur {

Polynomial::Polynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2)
        throw PreconditionViolated("polynomial must have degree >= 1");
    if (coeffs_.back() <= 0)
        throw PreconditionViolated("polynomial must have a positive leading coefficient");
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<long long> coeffs;
    std::istringstream in{std::string(text)};
    std::string tok;
    int col = 1;
    while (in >> tok) {
        coeffs.push_back(to_int64(parse_int(tok, 1, col), "coefficient"));
        col += static_cast<int>(tok.size()) + 1;
    }
    if (coeffs.empty()) throw ParseError("empty polynomial", 1, 1);
    return Polynomial(std::move(coeffs));
}

Int Polynomial::norm() const {
    Int n = degree();
    for (long long c : coeffs_) n = checked_add(n, c < 0 ? -c : c);
    return n;
}

std::string Polynomial::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

Int eval(const Polynomial& p, Int z) {
    const auto& a = p.coeffs();
    Int acc = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        acc = checked_add(checked_mul(acc, z), static_cast<Int>(a[i]));
    return acc;
}

bool is_odd_polynomial(const Polynomial& p) {
    return (eval(p, 0) % 2 != 0) && (eval(p, 1) % 2 != 0);
}

Int difference_m(const Polynomial& p, long long k, long long s) {
    return checked_sub(eval(p, checked_add(k, s)), eval(p, k));
}

namespace {

// Binomial coefficients are small here (r <= degree), but stay checked.
Int binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    Int acc = 1;
    for (long long i = 1; i <= r; ++i)
        acc = checked_mul(acc, n - r + i) / i;
    return acc;
}

// Coefficients of the forward difference p(t+1) - p(t), degree d-1.
std::vector<Int> difference_coeffs(const Polynomial& p) {
    const auto& a = p.coeffs();
    long long d = p.degree();
    std::vector<Int> delta(static_cast<std::size_t>(d), 0);
    for (long long j = 0; j < d; ++j)
        for (long long r = j + 1; r <= d; ++r)
            delta[j] = checked_add(delta[j], checked_mul(a[r], binomial(r, j)));
    return delta;
}

Int eval_coeffs(const std::vector<Int>& c, Int z) {
    Int acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = checked_add(checked_mul(acc, z), c[i]);
    return acc;
}

}  // namespace

bool strictly_increasing_on(const Polynomial& p, long long lo, long long hi) {
    if (hi <= lo) return true;
    std::vector<Int> delta = difference_coeffs(p);
    Int lead = delta.back();  // = d * a_d > 0
    // Cauchy bound: every real root of delta has |x| <= 1 + max|c_i|/lead,
    // so delta > 0 at all real points beyond it.
    Int maxc = 0;
    for (std::size_t i = 0; i + 1 < delta.size(); ++i)
        maxc = std::max(maxc, abs_int(delta[i]));
    Int bound = checked_add(2, maxc / lead);
    long long check_to = hi - 1;
    if (bound < check_to) check_to = to_int64(bound);
    for (long long t = lo; t <= check_to; ++t)
        if (eval_coeffs(delta, t) <= 0) return false;
    return true;
}

namespace {

void require_increasing(const Polynomial& p, long long k) {
    if (k < 1) throw PreconditionViolated("k must be >= 1");
    if (!strictly_increasing_on(p, 1, 4 * k))
        throw PreconditionViolated("p is not strictly increasing on [1, 4k]");
}

}  // namespace

long long last_below(const Polynomial& p, long long k, Int bound) {
    require_increasing(p, k);
    long long limit = 4 * k;
    if (eval(p, 1) >= bound) return 0;
    if (eval(p, limit) < bound)
        throw DegenerateRange("the landmark would exceed the verified range [1, 4k]");
    long long lo = 1, hi = limit;  // p(lo) < bound <= p(hi)
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (eval(p, mid) < bound ? lo : hi) = mid;
    }
    return lo;
}

long long first_at_least(const Polynomial& p, long long k, Int bound) {
    return last_below(p, k, bound) + 1;
}

long long landmark_k0(const Polynomial& p, long long k) {
    Int pk = eval(p, k);
    Int m1 = difference_m(p, k, 1);
    long long k0 = last_below(p, k, checked_sub(checked_mul(2, pk), checked_mul(4, m1)));
    if (k0 == 0) throw DegenerateRange("no t >= 1 satisfies p(t) < 2p(k) - 4m1");
    return k0;
}

Landmarks landmarks(const Polynomial& p, long long k, long long q) {
    if (q < 1) throw PreconditionViolated("q must be >= 1");
    require_increasing(p, k);

    Landmarks lm;
    lm.k = k;
    lm.k2 = k / q;
    Int pk = eval(p, k);
    lm.m1 = difference_m(p, k, 1);

    // p(t) < p(k)/2 over the integers is p(t) < ceil(p(k)/2).
    lm.k1 = last_below(p, k, ceil_div(pk, 2));
    if (lm.k1 == 0) throw DegenerateRange("no t >= 1 satisfies p(t) < p(k)/2");

    lm.k0 = landmark_k0(p, k);
    lm.m_prime = first_at_least(p, k, checked_mul(4, lm.m1));
    return lm;
}

}  // namespace polyschur
