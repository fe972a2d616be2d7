// Acceptance suite: one pass/fail line per criterion, exit 1 if any hard
// criterion fails.  Criterion 10 (the fast/naive speed ratio) is soft: the
// measured ratio is reported but does not affect the exit code.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyschur/counting.hpp"
#include "polyschur/grid.hpp"
#include "polyschur/lemmas.hpp"
#include "polyschur/search.hpp"

using namespace polyschur;

namespace {

const Polynomial kSquare({0, 0, 1});
const Polynomial kSquarePlus({0, 1, 1});   // z^2 + z
const Polynomial kTwoSquare({0, 0, 2});    // 2 z^2
const Polynomial kCube({0, 0, 0, 1});

struct Outcome {
    bool pass;
    std::string detail;
};

Coloring random_coloring(long long lo, long long n, std::mt19937_64& rng) {
    BitVector bits(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        if (rng() & 1) bits.set(static_cast<std::size_t>(i), true);
    return Coloring(lo, lo + n - 1, std::move(bits));
}

// --- 1. count_fast == count_naive on random instances ----------------------

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20250810);
    int instances = 0;
    for (int trial = 0; trial < 520; ++trial) {
        long long n = 1 + static_cast<long long>(rng() % 2048);
        long long lo = 1 + static_cast<long long>(rng() % 64);
        Coloring c = random_coloring(lo, n, rng);
        long long d = 1 + static_cast<long long>(rng() % 4);
        std::vector<long long> coeffs(static_cast<std::size_t>(d) + 1);
        for (auto& cf : coeffs) cf = static_cast<long long>(rng() % 9) - 4;
        coeffs.back() = 1 + static_cast<long long>(rng() % 3);
        Polynomial p(std::move(coeffs));
        SolutionReport naive = count_naive(c, p);
        SolutionReport fast = count_fast(c, p);
        if (naive.total != fast.total || naive.per_z != fast.per_z)
            return {false, "mismatch on instance " + std::to_string(trial)};
        ++instances;
    }
    return {true, std::to_string(instances) + " random instances, totals and per-z equal"};
}

// --- 2. avoider construction counts exactly zero ---------------------------

Outcome construction_exactness() {
    const long long size_budget = 200'000'000;  // elements; z^3 outgrows any budget fast
    std::mt19937_64 rng(2);
    int verified = 0, skipped_size = 0, undefined = 0;
    std::string skip_note;
    for (const Polynomial* p : {&kSquare, &kSquarePlus, &kTwoSquare, &kCube}) {
        for (long long n = 3; n <= 40; ++n) {
            AvoiderBounds ab{};
            try {
                ab = interval_avoider_bounds(*p, n);
            } catch (const DegenerateRange&) {
                ++undefined;
                continue;
            }
            if (checked_sub(ab.h, n) > size_budget) {
                ++skipped_size;
                if (skip_note.empty())
                    skip_note = " (first skip: poly " + p->to_text() + " at n=" +
                                std::to_string(n) + ", " + to_string(checked_sub(ab.h, n)) +
                                " elements)";
                continue;
            }
            Coloring c = interval_avoider(*p, n, size_budget);
            SolutionReport fast = count_fast(c, *p);
            if (fast.total != 0)
                return {false, "avoider has " + std::to_string(fast.total) +
                                   " solutions for poly " + p->to_text() +
                                   ", n=" + std::to_string(n)};
            if (c.size() <= 200'000) {
                if (count_naive(c, *p).total != 0)
                    return {false, "naive disagrees on poly " + p->to_text() +
                                       ", n=" + std::to_string(n)};
            } else {
                for (int probe = 0; probe < 40; ++probe) {
                    long long z = c.lo() + static_cast<long long>(
                                               rng() % static_cast<std::uint64_t>(c.size()));
                    std::uint64_t nz = count_for_z_naive(c, *p, z);
                    auto it = fast.per_z.find(z);
                    std::uint64_t fz = it == fast.per_z.end() ? 0 : it->second;
                    if (nz != fz || nz != 0)
                        return {false, "sampled naive mismatch at z=" + std::to_string(z)};
                }
            }
            ++verified;
        }
    }
    return {true, std::to_string(verified) + " (poly, n) instances exactly zero, " +
                      std::to_string(undefined) + " undefined, " +
                      std::to_string(skipped_size) + " over the size budget" + skip_note};
}

// --- 3. exponent of the few-solutions counts --------------------------------

Outcome exponent_fit() {
    std::vector<double> xs, ys;
    std::string counts;
    for (long long n : {100LL, 1'000LL, 10'000LL, 100'000LL}) {
        Coloring c = few_solutions_coloring(kSquare, n);
        std::uint64_t total = count_fast(c, kSquare).total;
        if (total == 0) return {false, "zero count at n=" + std::to_string(n)};
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(total)));
        counts += " g(" + std::to_string(n) + ")=" + std::to_string(total);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= 4;
    my /= 4;
    double cov = 0, var = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cov += (xs[i] - mx) * (ys[i] - my);
        var += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = cov / var;
    char buf[64];
    std::snprintf(buf, sizeof buf, "slope %.4f (target 0.5, window [0.3, 0.7]);", slope);
    return {slope >= 0.3 && slope <= 0.7, buf + counts};
}

// --- 4. exhaustive minima match a plain 2^n oracle ---------------------------

std::uint64_t plain_min(const Polynomial& p, long long n) {
    std::vector<std::array<int, 3>> triples;
    for (long long z = 1; z <= n; ++z) {
        Int s = eval(p, z);
        if (s < 2 || s > 2 * n) continue;
        for (long long x = std::max(1LL, static_cast<long long>(s) - n);
             x <= std::min(n, static_cast<long long>(s) - 1); ++x)
            triples.push_back({static_cast<int>(x), static_cast<int>(s - x),
                               static_cast<int>(z)});
    }
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::uint64_t count = 0;
        for (const auto& t : triples) {
            bool cx = (mask >> (t[0] - 1)) & 1, cy = (mask >> (t[1] - 1)) & 1,
                 cz = (mask >> (t[2] - 1)) & 1;
            if (cx == cy && cy == cz) ++count;
        }
        best = std::min(best, count);
    }
    return best;
}

Outcome exhaustive_minima() {
    for (long long n = 1; n <= 20; ++n) {
        std::uint64_t oracle = plain_min(kSquare, n);
        std::uint64_t engine = min_solutions_exact(kSquare, n).best_count;
        if (oracle != engine)
            return {false, "n=" + std::to_string(n) + ": oracle " + std::to_string(oracle) +
                               " vs engine " + std::to_string(engine)};
        if (n == 4 && engine != 1) return {false, "n=4 minimum is not 1"};
    }
    return {true, "n in [1,20] matches the 2^n enumeration; g(4) = 1"};
}

// --- 5. bad pairs construct distinct monochromatic solutions ----------------

Outcome bad_pair_construction() {
    std::mt19937_64 rng(5);
    int colorings_used = 0, solutions_checked = 0, families = 0;
    while (colorings_used < 110) {
        Coloring c = random_coloring(1, 620, rng);
        const long long k_lo = 8, k_hi = 24;
        long long k = 0;
        for (long long cand = k_lo; cand <= k_hi; ++cand)
            if (c.color(cand) == +1 && c.color(cand + 1) == -1) {
                k = cand;
                break;
            }
        if (k == 0) continue;
        std::vector<BadPair> pairs = find_bad_pairs(c, kSquare, k, 4);
        if (pairs.empty()) continue;
        ++colorings_used;

        std::set<long long> used;
        std::vector<BadPair> disjoint;
        for (const auto& bp : pairs)
            if (!used.count(bp.a) && !used.count(bp.b)) {
                used.insert(bp.a);
                used.insert(bp.b);
                disjoint.push_back(bp);
            }
        std::set<Witness> outputs;
        std::size_t mapped = 0;
        for (const auto& bp : disjoint) {
            Witness w{};
            try {
                w = solution_from_bad_pair(c, kSquare, bp);
            } catch (const RangeError&) {
                continue;  // partner p(k)-a fell outside the finite domain
            }
            ++mapped;
            auto [x, y, z] = w;
            bool ok = c.contains(x) && c.contains(y) && c.contains(z) &&
                      static_cast<Int>(x) + y == eval(kSquare, z) &&
                      c.color(x) == c.color(y) && c.color(y) == c.color(z);
            if (!ok) return {false, "invalid witness from a bad pair"};
            outputs.insert(w);
            ++solutions_checked;
        }
        if (outputs.size() != mapped)
            return {false, "disjoint pairs produced colliding solutions"};
        if (mapped > 0) ++families;
    }
    return {true, std::to_string(colorings_used) + " colorings, " +
                      std::to_string(solutions_checked) +
                      " solutions verified, distinctness held in " +
                      std::to_string(families) + " families"};
}

// --- 6. grid lemma -----------------------------------------------------------

bool grid_path_valid(const GridInstance& g, const std::vector<GridVertex>& path) {
    if (path.empty() || path.front() != GridVertex{0, 0} ||
        path.back() != GridVertex{g.n, g.n})
        return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto [a, b] = path[i];
        if (a < 0 || a > g.n || b < 0 || b > g.n || std::llabs(a - b) > g.m) return false;
        if (g.forbidden.count(path[i])) return false;
        if (i + 1 < path.size()) {
            auto [cc, d] = path[i + 1];
            if (!((cc == a + 1 && d == b) || (cc == a && d == b + 1))) return false;
        }
    }
    return true;
}

Outcome grid_lemma() {
    // Hand fixtures first.
    GridPathResult empty_z = grid_avoid_path({4, 2, {}}, 1);
    if (!empty_z.found || empty_z.path.size() != 9)
        return {false, "empty-Z fixture did not produce an 8-step path"};
    if (grid_avoid_path({4, 2, {{0, 1}, {1, 0}}}, 1).found)
        return {false, "blocked level-1 fixture found a path"};

    std::mt19937_64 rng(6);
    const long long n = 1000, m = 100, ell = 5;
    for (int trial = 0; trial < 100; ++trial) {
        GridInstance g{n, m, {}};
        while (g.forbidden.size() < 10) {
            long long s = 2 * m + static_cast<long long>(rng() % (2 * n - 4 * m));
            long long ilo = std::max({0LL, s - n, (s - m + 1) / 2});
            long long ihi = std::min({n, s, (s + m) / 2});
            long long i =
                ilo + static_cast<long long>(rng() % static_cast<std::uint64_t>(ihi - ilo + 1));
            g.forbidden.insert({i, s - i});
        }
        GridPathResult r = grid_avoid_path(g, ell);
        if (!r.g1_held || !r.g2_held) return {false, "random instance violated G1/G2"};
        if (!r.found) return {false, "no path on a G1-G2 instance, trial " +
                                         std::to_string(trial)};
        if (!grid_path_valid(g, r.path))
            return {false, "invalid path on trial " + std::to_string(trial)};
    }
    return {true, "100 random G1-G2 instances at n=1000, m=100 all yield valid paths"};
}

// --- 7. algebraic identities --------------------------------------------------

Outcome algebraic_identities() {
    for (long long t = 1; t <= 6; ++t)
        for (long long s = 1; s <= 20; ++s) {
            for (long long i = 1; i < t; ++i)
                if (dot_id_power(vector_b(t, s), i) != 0)
                    return {false, "dot-zero identity failed"};
            for (long long i = t; i <= 6; ++i)
                if (dot_id_power(vector_b(t, s), i) !=
                    checked_mul(dot_id_power(vector_b(t, 1), i), checked_pow(s, i)))
                    return {false, "scaling identity failed"};
        }

    std::vector<long long> s_values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<long long> k_values{10, 100, 1000};
    long long cases = 0;
    try {
        for (long long a2 = 1; a2 <= 5; ++a2)
            for (long long a1 = -5; a1 <= 5; ++a1)
                for (long long a0 = -5; a0 <= 5; ++a0)
                    for (long long t = 1; t <= 2; ++t)
                        cases += mb_expansion_check(Polynomial({a0, a1, a2}), t, s_values,
                                                    k_values)
                                     .cases_checked;
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            long long d = 3 + static_cast<long long>(rng() % 3);
            std::vector<long long> coeffs(static_cast<std::size_t>(d) + 1);
            for (auto& c : coeffs) c = static_cast<long long>(rng() % 11) - 5;
            coeffs.back() = 1 + static_cast<long long>(rng() % 5);
            Polynomial p(std::move(coeffs));
            for (long long t = 1; t <= d; ++t)
                cases += mb_expansion_check(p, t, s_values, k_values).cases_checked;
        }
    } catch (const MismatchError& e) {
        return {false, std::string("binomial equality mismatch: ") + e.what()};
    }
    return {true, "dot-zero and scaling sweeps exact; " + std::to_string(cases) +
                      " binomial-equality cases exact"};
}

// --- 8. estimation lemma -------------------------------------------------------

Outcome estimation_lemma() {
    const long long k = 1'000'000, q = 2, d = 3;
    const Int ell = 32'768;
    std::mt19937_64 rng(8);
    Int cap = checked_mul(q, checked_pow(k, d - 1));
    for (int trial = 0; trial < 50; ++trial) {
        // Random target spread across the magnitudes up to q k^(d-1).
        Int target = 1 + static_cast<long long>(rng() % 1'000'000);
        for (int scale = static_cast<int>(rng() % 3); scale > 0; --scale)
            target = checked_mul(target, 1'000);
        if (target > cap) target = cap - static_cast<long long>(rng() % 1'000'000);
        EstimationResult r;
        try {
            r = estimation_vector(kCube, k, ell, q, target);
        } catch (const Error& e) {
            return {false, std::string("estimation failed on trial ") +
                               std::to_string(trial) + ": " + e.what()};
        }
        if (r.error > ell) return {false, "error above ell"};
        if (r.v.max_abs() > ell) return {false, "entry magnitude above ell"};
        if (dot_with_m(kCube, k, r.v) != r.achieved) return {false, "dot mismatch"};
        // Independent support check: every index is t * 2^j with t <= d-1
        // and 2^(2(j-q)) <= k.
        for (const auto& [idx, val] : r.v.entries()) {
            bool ok = false;
            for (long long j = 1; (idx >> j) >= 1 && !ok; ++j)
                if ((idx >> j) << j == idx && (idx >> j) <= d - 1 &&
                    (j <= q || checked_pow(2, 2 * (j - q)) <= k))
                    ok = true;
            if (!ok) return {false, "support index " + std::to_string(idx) + " off-pattern"};
        }
    }
    return {true, "50 random targets at k=10^6, q=2, ell=32768: support, magnitude and "
                  "+-ell contracts all hold"};
}

// --- 9. structure lemma on frontier witnesses ---------------------------------

Outcome structure_lemma() {
    int witnesses = 0, switches_checked = 0, hypotheses_met = 0;
    for (long long n = 3; n <= 6; ++n) {
        FrontierResult fr = longest_free_interval_exact(kSquare, n, 10'000, 40'000'000);
        if (!fr.witness) continue;
        ++witnesses;
        const Coloring& w = *fr.witness;
        if (count_fast(w, kSquare).total != 0)
            return {false, "frontier witness is not solution-free at n=" + std::to_string(n)};
        for (const auto& sw : switches(w)) {
            if (!sw.positive) continue;
            Int pk = eval(kSquare, sw.k);
            long long dom_hi = static_cast<long long>(pk) - n;
            if (dom_hi > w.hi() || dom_hi < sw.k + 1) continue;
            Coloring restricted = w.restricted(n, dom_hi);
            if (count_fast(restricted, kSquare).total != 0) continue;
            ++switches_checked;
            SwitchStructureReport rep = verify_switch_structure(restricted, kSquare, sw.k);
            if (rep.hypotheses_ok) {
                ++hypotheses_met;
                if (!rep.neg_interval_ok || !rep.pos_interval_ok)
                    return {false, "lemma conclusion failed with hypotheses met at n=" +
                                       std::to_string(n) + ", k=" + std::to_string(sw.k)};
            }
        }
    }
    return {true, std::to_string(witnesses) + " witnesses, " +
                      std::to_string(switches_checked) + " in-range positive switches, " +
                      std::to_string(hypotheses_met) +
                      " with hypotheses met; all conclusions held"};
}

// --- 10. performance (soft) ----------------------------------------------------

Outcome performance(double& ratio_out) {
    std::mt19937_64 rng(10);
    Coloring c = random_coloring(1, 1'000'000, rng);
    auto time_ms = [](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(stop - start).count();
    };
    SolutionReport fast_rep, naive_rep;
    double fast_ms = 1e300;
    for (int rep = 0; rep < 3; ++rep)
        fast_ms = std::min(fast_ms, time_ms([&] { fast_rep = count_fast(c, kSquare); }));
    double naive_ms = time_ms([&] { naive_rep = count_naive(c, kSquare); });
    if (fast_rep.total != naive_rep.total) return {false, "counters disagree at 10^6"};
    double ratio = naive_ms / fast_ms;
    ratio_out = ratio;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "naive %.1f ms / fast %.1f ms = %.1fx (threshold 10x) at |domain| = 10^6",
                  naive_ms, fast_ms, ratio);
    return {ratio >= 10.0, buf};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*fn)();
        bool soft;
    };
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence count_fast == count_naive", oracle_equivalence, false},
        {2, "avoider construction counts exactly zero", construction_exactness, false},
        {3, "few-solutions exponent fit", exponent_fit, false},
        {4, "exhaustive minima vs plain enumeration", exhaustive_minima, false},
        {5, "bad pairs yield distinct monochromatic solutions", bad_pair_construction, false},
        {6, "grid lemma paths under G1-G2", grid_lemma, false},
        {7, "algebraic identities exact", algebraic_identities, false},
        {8, "estimation lemma contracts", estimation_lemma, false},
        {9, "switch structure on solution-free colorings", structure_lemma, false},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.fn();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("[%s] criterion %d: %s — %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) all_pass = false;
    }

    double ratio = 0;
    auto start = std::chrono::steady_clock::now();
    Outcome perf = performance(ratio);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion 10 (soft): count_fast speedup — %s (%.1fs)\n",
                perf.pass ? "PASS" : "SOFT-FAIL", perf.detail.c_str(), secs);

    std::printf("%s\n", all_pass ? "acceptance: all hard criteria PASS"
                                 : "acceptance: FAILURES above");
    return all_pass ? 0 : 1;
}
