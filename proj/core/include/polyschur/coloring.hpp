#ifndef POLYSCHUR_COLORING_HPP
#define POLYSCHUR_COLORING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "polyschur/bitvector.hpp"
#include "polyschur/polynomial.hpp"

namespace polyschur {

// Bit-packed 2-coloring of a contiguous integer interval [lo, hi], lo >= 1.
// A set bit means color +1.  Colorings are immutable after construction;
// the *_flipped / swapped / restricted helpers return copies, which keeps
// sharing with the parallel counter safe.
class Coloring {
   public:
    Coloring(long long lo, long long hi, BitVector bits);
    static Coloring constant(long long lo, long long hi, int color);

    long long lo() const { return lo_; }
    long long hi() const { return hi_; }
    long long size() const { return hi_ - lo_ + 1; }
    bool contains(long long i) const { return i >= lo_ && i <= hi_; }

    int color(long long i) const {
        if (!contains(i)) throw RangeError("index " + std::to_string(i) + " outside coloring domain");
        return bits_.get(static_cast<std::size_t>(i - lo_)) ? +1 : -1;
    }
    bool is_plus(long long i) const { return color(i) > 0; }

    const BitVector& bits() const { return bits_; }

    Coloring with_flipped(long long i) const;
    Coloring swapped() const { return Coloring(lo_, hi_, bits_.complemented()); }
    Coloring restricted(long long lo2, long long hi2) const;

    bool operator==(const Coloring& o) const = default;

   private:
    long long lo_;
    long long hi_;
    BitVector bits_;
};

// +1 exactly on the odd numbers.
Coloring parity_coloring(long long lo, long long hi);

struct AvoiderBounds {
    Int m;  // ceil(p(n)/2): first -1 element
    Int h;  // ceil(p(m)/2): one past the last element
};

// Thresholds of the solution-free construction, without materializing it.
AvoiderBounds interval_avoider_bounds(const Polynomial& p, long long n);

// The solution-free coloring of [n, H-1] with H = ceil(p(M)/2),
// M = ceil(p(n)/2): [n, M-1] is +1 and [M, H-1] is -1.  Ceiling thresholds
// keep the strict inequalities p(n) > x+y and p(M) > x+y valid without any
// parity assumption on p.  max_elements guards against materializing
// astronomically long intervals (H grows like n^(d^2)).
Coloring interval_avoider(const Polynomial& p, long long n,
                          long long max_elements = 1LL << 28);

struct FewSolutionsThresholds {
    long long a;  // min x >= 1 with p(x) > 2n
    long long b;  // min x >= 1 with p(x) > 2a
};

FewSolutionsThresholds few_solutions_thresholds(const Polynomial& p, long long n);

// Coloring of [1, n]: [1, b-1] and [a, n] get +1, [b, a-1] gets -1.
// Every monochromatic solution has z <= b-1 and min(x, y) <= b-1, so the
// total count is O(b^2).
Coloring few_solutions_coloring(const Polynomial& p, long long n);

struct Switch {
    long long k;
    bool positive;  // color(k) = +1, color(k+1) = -1
    bool operator==(const Switch&) const = default;
};

// All k in [lo, hi-1] with color(k) != color(k+1), ascending.
std::vector<Switch> switches(const Coloring& c);

// True iff every element of [k+1, k0] has color -1, with k0 the landmark of
// (p, k).  Requires k to be a positive switch of c and [k+1, k0] inside the
// domain.  Note the definition follows this paper: nothing is required of
// [k/2, k], unlike the earlier variant in the literature.
bool is_isolated(const Coloring& c, const Polynomial& p, long long k);

// Run-length text format: first line "lo hi", second line signed run tokens,
// e.g. "+40 -1200" for 40 elements of +1 followed by 1200 of -1.  Runs must
// sum to hi-lo+1.
std::string encode(const Coloring& c);
Coloring decode(std::string_view text);

}  // namespace polyschur

#endif
