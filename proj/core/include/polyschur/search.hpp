#ifndef POLYSCHUR_SEARCH_HPP
#define POLYSCHUR_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyschur/counting.hpp"

namespace polyschur {

struct SearchResult {
    std::uint64_t best_count = 0;
    std::optional<Coloring> best_coloring;
    std::uint64_t nodes_explored = 0;
    bool exact = false;
};

// Exact minimum solution count over all 2-colorings of [1, n], by DFS in
// increasing element order with branch-and-bound: a triple is charged as
// soon as its largest coordinate is assigned, and a branch dies when the
// charged count reaches the best complete coloring so far.  The color of 1
// is fixed to +1 (counts are swap-invariant).  Throws CapExceeded above cap.
SearchResult min_solutions_exact(const Polynomial& p, long long n, long long cap = 26);

struct AnnealParams {
    std::uint64_t iterations = 30'000;
    double t0 = 2.0;
    double cooling = 0.9995;   // geometric, per iteration
    double shift_prob = 0.3;   // probability of a boundary-shift proposal
};

// Heuristic upper bound for the minimum count on [1, n]: Metropolis over
// single-element flips and boundary shifts, seeded with the few-solutions
// construction when it is defined.  A flip's count delta touches only the
// triples containing the flipped element, so it is recomputed from the bit
// vectors in O(|domain|/64 + #feasible z).  Deterministic for a fixed seed;
// the reported count is re-verified against the full counter before return.
SearchResult min_solutions_anneal(const Polynomial& p, long long n, std::uint64_t seed,
                                  const AnnealParams& params = {});

struct FrontierResult {
    long long n = 0;
    long long f_exact = 0;  // largest hi reached; n-1 when even [n, n] fails
    bool cap_reached = false;
    bool complete = false;  // exhaustion proved no coloring of [n, f_exact+1] is free
    std::uint64_t nodes = 0;
    std::optional<Coloring> witness;  // solution-free coloring of [n, f_exact]
};

// Longest interval [n, hi] admitting a solution-free coloring, by
// incremental DFS: elements are colored in increasing order and a branch is
// cut the moment a triple with all coordinates assigned goes monochromatic.
// Stops at `cap` or when the node budget runs out (complete = false then).
FrontierResult longest_free_interval_exact(const Polynomial& p, long long n, long long cap,
                                           std::uint64_t node_budget = 50'000'000);

struct BoundBudget {
    long long exhaustive_cap = 26;
    std::uint64_t seed = 1;
    AnnealParams anneal;
    long long coloring_elements = 1LL << 28;  // avoider materialization guard
};

struct BoundReportRow {
    long long n = 0;
    std::optional<Int> f_construct;             // H - 1 of the avoider
    std::optional<std::uint64_t> g_exact;       // within the exhaustive cap
    std::optional<std::uint64_t> g_anneal;
    std::optional<std::uint64_t> g_construct;   // count of the few-solutions coloring
};

struct BoundReport {
    std::vector<BoundReportRow> rows;
    std::optional<double> fit_exponent;  // LS slope of log g_construct vs log n
};

BoundReport bound_report(const Polynomial& p, const std::vector<long long>& n_values,
                         const BoundBudget& budget = {});

// CSV with header n,f_construct,g_exact,g_anneal,g_construct,fit_exponent;
// the (global) fitted exponent is repeated on every row.
std::string bound_report_csv(const BoundReport& report);

}  // namespace polyschur

#endif
