#ifndef POLYSCHUR_POLYNOMIAL_HPP
#define POLYSCHUR_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "polyschur/int128.hpp"

namespace polyschur {

// Integer polynomial with degree >= 1 and positive leading coefficient,
// stored constant term first.  Trailing zero coefficients are trimmed on
// construction so degree() always names the true leading term.
class Polynomial {
   public:
    explicit Polynomial(std::vector<long long> coeffs);

    // Text format: coefficients constant-first, space separated ("0 0 1" is z^2).
    static Polynomial parse(std::string_view text);

    const std::vector<long long>& coeffs() const { return coeffs_; }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    long long leading() const { return coeffs_.back(); }

    // d + sum of |a_i|.
    Int norm() const;

    std::string to_text() const;

   private:
    std::vector<long long> coeffs_;
};

// Exact Horner evaluation; throws Overflow rather than wrapping.
Int eval(const Polynomial& p, Int z);

// True iff p attains only odd values on the integers.  The parity of p(z)
// depends only on the parity of z, so p(0) and p(1) decide.
bool is_odd_polynomial(const Polynomial& p);

// p(k+s) - p(k).
Int difference_m(const Polynomial& p, long long k, long long s);

// True iff p(t) < p(t+1) for every integer t in [lo, hi-1].  Exact: the
// forward difference has positive leading coefficient, so only integers up
// to its Cauchy root bound need explicit checking.
bool strictly_increasing_on(const Polynomial& p, long long lo, long long hi);

struct Landmarks {
    long long k;
    Int m1;             // p(k+1) - p(k)
    long long k0;       // max t with p(t) < 2 p(k) - 4 m1
    long long k1;       // max t with 2 p(t) < p(k)
    long long k2;       // floor(k / q)
    long long m_prime;  // min t with p(t) >= 4 m1
};

// All maxima/minima are located by monotone bisection over t in [1, 4k];
// requires p strictly increasing there and refuses to answer otherwise.
// Throws DegenerateRange when a defining inequality has no solution in range
// or would be satisfied at the range end (the true landmark would lie beyond
// the verified-monotone window).
Landmarks landmarks(const Polynomial& p, long long k, long long q);

// The k0 landmark alone (q plays no role in it).
long long landmark_k0(const Polynomial& p, long long k);

// Largest t in [1, 4k] with p(t) < bound, for p strictly increasing on
// [1, 4k] (checked).  Returns 0 when no t qualifies; throws DegenerateRange
// when even t = 4k qualifies, since the true maximum would lie beyond the
// verified window.
long long last_below(const Polynomial& p, long long k, Int bound);

// Smallest t in [1, 4k] with p(t) >= bound (same monotonicity contract).
long long first_at_least(const Polynomial& p, long long k, Int bound);

}  // namespace polyschur

#endif
