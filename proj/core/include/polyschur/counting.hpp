#ifndef POLYSCHUR_COUNTING_HPP
#define POLYSCHUR_COUNTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polyschur/coloring.hpp"

namespace polyschur {

// Ordered monochromatic triple: x + y = p(z) with equal colors.
// (x,y,z) and (y,x,z) are distinct solutions.
using Witness = std::tuple<long long, long long, long long>;

struct SolutionReport {
    std::uint64_t total = 0;
    std::map<long long, std::uint64_t> per_z;  // only nonzero counts
    std::optional<std::vector<Witness>> witnesses;
};

struct CountOptions {
    bool exclude_diagonal = false;  // drop x = y = z triples (those with 2z = p(z))
    int workers = 1;                // count_fast may split the z range
};

// Reference counter: plain loop over z then x.  This is the oracle the fast
// path is checked against.
SolutionReport count_naive(const Coloring& c, const Polynomial& p, CountOptions opts = {});

// Same totals via one shifted AND + popcount per z: the number of x with
// color(x) = color(p(z)-x) = c is a correlation between the color bitmap and
// its reflection about p(z), O(|domain|/64) per z.  The reflected copy is
// built once per call.
SolutionReport count_fast(const Coloring& c, const Polynomial& p, CountOptions opts = {});

// Ordered solution count for a single z (naive inner loop).
std::uint64_t count_for_z_naive(const Coloring& c, const Polynomial& p, long long z);

// Up to `limit` witnesses in lexicographic (z, x) order.
std::vector<Witness> enumerate_solutions(const Coloring& c, const Polynomial& p,
                                         std::uint64_t limit);

// Pair (a, b) with b = a + m_s(k), color(a) = +1, color(b) = -1 and
// color(k+s) = -1, certifying solutions against the positive switch k.
struct BadPair {
    long long a;
    long long b;
    long long s;
    long long k;
    bool operator==(const BadPair&) const = default;
};

// All bad pairs with s in [1, s_max].  k must be a positive switch of c
// (NotASwitch otherwise); s values whose k+s or increment leave the domain
// contribute nothing.  Pairs are ordered by (s, a).
std::vector<BadPair> find_bad_pairs(const Coloring& c, const Polynomial& p, long long k,
                                    long long s_max);

// The constructive map from a bad pair to a monochromatic solution:
// (a, p(k)-a, k) when p(k)-a has color +1, else (b, p(k)-a, k+s).
// Disjoint pairs yield distinct solutions.
Witness solution_from_bad_pair(const Coloring& c, const Polynomial& p, const BadPair& pair);

// Structured-text serialization: "total N", one "z <z> <count>" line per
// nonzero z, one "witness <x> <y> <z>" line per witness.
std::string report_to_text(const SolutionReport& r);
std::string report_to_csv(const SolutionReport& r);

}  // namespace polyschur

#endif
