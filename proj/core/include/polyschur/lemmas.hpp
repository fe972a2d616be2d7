#ifndef POLYSCHUR_LEMMAS_HPP
#define POLYSCHUR_LEMMAS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polyschur/coloring.hpp"
#include "polyschur/intvector.hpp"

namespace polyschur {

// Exact inner product with the vector of increments (m_1(k), m_2(k), ...),
// evaluated lazily on the support of v.
Int dot_with_m(const Polynomial& p, long long k, const IntVector& v);

// Greedy digit expansion over a sequence c_1 < c_2 < ... < c_m with
// c_{i+1} < t * c_i and target <= t * c_m: returns digits b_i in [0, t-1]
// with |sum b_i c_i - target| <= c_1.  Throws PreconditionViolated naming
// the first failing index when the sequence does not qualify.
std::vector<long long> greedy_combination(const std::vector<Int>& c_seq, long long t,
                                          Int target);

struct MbExpansionReport {
    long long t = 0;
    std::map<long long, Int> c_prime;                      // c'(t, j) = id^j . b^{t,1}, j in [t, d]
    std::map<std::pair<long long, long long>, Int> h;      // h[{r, i}] = a_r binom(r,i) c'(t, r-i)
    long long cases_checked = 0;
};

// Verifies the k-ary expansion of m^k . b^{t,s} against the double sum with
// coefficients h_{r,i}, exactly, for every (s, k) in the given sample; also
// asserts h_{d,d-t} != 0 and (for t <= d-1) h_{d,d-t-1} != 0.  Throws
// MismatchError carrying the first failing (s, k).
MbExpansionReport mb_expansion_check(const Polynomial& p, long long t,
                                     const std::vector<long long>& s_values,
                                     const std::vector<long long>& k_values);

struct EstimationResult {
    IntVector v;
    Int target = 0;
    Int achieved = 0;        // dot(v, m^k)
    Int error = 0;           // |achieved - target|
    Int smallest_block = 0;  // c_1 of the ladder, the greedy error bound
    long long blocks = 0;
    long long max_support_exponent = 0;  // largest j with an index t*2^j used
};

// Builds an integer vector v with entries in [-ell, ell], support inside
// { t * 2^j : t in [d-1], 1 <= j <= q + (1/2) log2 k }, and
// |dot(v, m^k) - target| <= ell.  The ladder of building blocks
// +-(b^{t,2^(q(i+1))} - 2^(qt) b^{t,2^(qi)}) is validated at runtime: every
// monotonicity/ratio/coverage condition the construction relies on is
// checked exactly and HierarchyViolated is thrown when (k, q, ell) do not
// realize it.
EstimationResult estimation_vector(const Polynomial& p, long long k, Int ell, long long q,
                                   Int target);

// Exact minimum of |sum c_i m_i(k)| over nonzero integer vectors in
// [-k/q, k/q]^t, by exhaustive enumeration (half the box, by sign symmetry).
Int independence_margin(const Polynomial& p, long long k, long long t, long long q,
                        std::uint64_t budget = 20'000'000);

// Concrete stand-in for the proposition's asymptotic hierarchy: the margin
// bound is asserted only for parameters passing this.
bool independence_hierarchy_ok(const Polynomial& p, long long k, long long t, long long q);

struct PrefixInequalityReport {
    bool hypothesis_ok = false;
    long long failing_index = 0;  // 1-based; 0 when the hypothesis holds
    bool conclusion_checked = false;
    bool conclusion_ok = false;
    double sum = 0;
    double bound = 0;  // 2 m (1 + log2 n)
};

// Checks sum_{j<=i} j x_j <= (i-1) m for all i, and only then asserts
// sum x_j <= 2m(1 + log2 n).
PrefixInequalityReport prefix_inequality_check(const std::vector<double>& xs, double m);

struct SumDecompositionReport {
    bool a1 = false, a2 = false, a3 = false;
    long long a1_witness = 0, a2_witness = 0, a3_witness = 0;  // first failing a; 0 = none
    bool conclusions_checked = false;
    bool plus_ok = false, minus_ok = false;
    long long counterexample = 0;  // number missing a representation; 0 = none
};

// Verifies hypotheses A1-A3 on a coloring of [n, Q-n] (n = c.lo(), m odd,
// Q >= 2n+4m) and, when they hold, exhaustively confirms that every number
// in [Q+m+1, 2Q-2n-2m] is a sum of two +1 elements and every number in
// [2n+2m, Q-1] a sum of two -1 elements.
SumDecompositionReport sum_decomposition_check(const Coloring& c, long long m, Int big_q);

struct SwitchStructureReport {
    long long k = 0;
    long long k0 = 0;       // clamped to k when the defining inequality is empty
    long long m_prime = 0;
    long long n_prime = 0;  // max(c.lo(), m_prime)
    Int m1 = 0;
    // Hypotheses standing in for the lemma's "k sufficiently large":
    bool covers_lemma_domain = false;  // c extends to p(k) - lo
    bool m1_odd = false;
    bool sum_size_ok = false;          // p(k) >= 2 n' + 4 m1
    bool m1_at_least_n_prime = false;  // m1 >= n'
    bool m2_exceeds_m1 = false;        // m_2(k) > m_1(k)
    bool hypotheses_ok = false;
    // Conclusions (always evaluated where the domain allows):
    bool neg_checkable = false;  // [k+1, k0] inside the domain
    bool neg_interval_ok = false;
    bool pos_interval_ok = false;  // [n', k] all +1 (inside the domain by construction)
};

// Structure of a solution-free coloring around a positive switch k:
// [k+1, k0] must be all -1 and [max(lo, m'(k)), k] all +1.  The coloring
// must be solution-free and k a positive switch (PreconditionViolated
// otherwise).  Conclusions are reported together with the concrete
// hypotheses under which the lemma guarantees them; a conclusion failing
// while all hypotheses hold would contradict the lemma.
SwitchStructureReport verify_switch_structure(const Coloring& c, const Polynomial& p,
                                              long long k);

}  // namespace polyschur

#endif
