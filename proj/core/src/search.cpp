#include "polyschur/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polyschur {

namespace {

// Constraint triple with x <= y; ordered solutions are restored by the
// weight (2 unless x == y).  A triple becomes decidable once its largest
// coordinate is colored, which is what makes increasing-order DFS work.
struct Triple {
    long long x, y, z;
    int weight;
};

std::vector<std::vector<Triple>> triples_by_max(const Polynomial& p, long long lo,
                                                long long hi) {
    std::vector<std::vector<Triple>> by_max(static_cast<std::size_t>(hi - lo + 1));
    for (long long z = lo; z <= hi; ++z) {
        Int s = eval(p, z);
        if (s < 2 * lo || s > 2 * hi) continue;
        long long xlo = std::max(lo, static_cast<long long>(s - hi));
        long long xhi = std::min(hi, static_cast<long long>(s / 2));
        for (long long x = xlo; x <= xhi; ++x) {
            long long y = static_cast<long long>(s) - x;
            long long maxc = std::max(y, z);
            by_max[maxc - lo].push_back({x, y, z, x == y ? 1 : 2});
        }
    }
    return by_max;
}

std::uint64_t coloring_count(const Coloring& c, const Polynomial& p) {
    return count_fast(c, p).total;
}

Coloring coloring_from_signs(long long lo, const std::vector<std::int8_t>& colors,
                             long long hi) {
    BitVector bits(static_cast<std::size_t>(hi - lo + 1));
    for (long long i = lo; i <= hi; ++i)
        bits.set(static_cast<std::size_t>(i - lo), colors[i - lo] > 0);
    return Coloring(lo, hi, std::move(bits));
}

struct ExactSearcher {
    const std::vector<std::vector<Triple>>& by_max;
    long long n;
    std::vector<std::int8_t> colors;
    std::uint64_t best;
    std::vector<std::int8_t> best_colors;
    std::uint64_t nodes = 0;

    void dfs(long long i, std::uint64_t forced) {
        if (forced >= best) return;
        if (i > n) {
            best = forced;
            best_colors = colors;
            return;
        }
        for (int c : {+1, -1}) {
            if (i == 1 && c < 0) break;  // swap symmetry
            colors[i - 1] = static_cast<std::int8_t>(c);
            ++nodes;
            std::uint64_t add = 0;
            for (const Triple& t : by_max[i - 1])
                if (colors[t.x - 1] == colors[t.y - 1] && colors[t.y - 1] == colors[t.z - 1])
                    add += t.weight;
            dfs(i + 1, forced + add);
        }
        colors[i - 1] = 0;
    }
};

}  // namespace

SearchResult min_solutions_exact(const Polynomial& p, long long n, long long cap) {
    if (n < 1) throw PreconditionViolated("n must be >= 1");
    if (n > cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the exhaustive cap " +
                          std::to_string(cap));

    auto by_max = triples_by_max(p, 1, n);
    ExactSearcher searcher{by_max, n, std::vector<std::int8_t>(static_cast<std::size_t>(n), 0),
                           0, {}, 0};

    // Seed the bound with explicit colorings (both have color(1) = +1).
    Coloring all_plus = Coloring::constant(1, n, +1);
    searcher.best = coloring_count(all_plus, p);
    searcher.best_colors.assign(static_cast<std::size_t>(n), +1);
    try {
        Coloring constructed = few_solutions_coloring(p, n);
        std::uint64_t cc = coloring_count(constructed, p);
        if (cc < searcher.best) {
            searcher.best = cc;
            for (long long i = 1; i <= n; ++i)
                searcher.best_colors[i - 1] = static_cast<std::int8_t>(constructed.color(i));
        }
    } catch (const DegenerateRange&) {
    }

    searcher.dfs(1, 0);

    SearchResult res;
    res.best_count = searcher.best;
    res.best_coloring = coloring_from_signs(1, searcher.best_colors, n);
    res.nodes_explored = searcher.nodes;
    res.exact = true;
    return res;
}

namespace {

// Annealing state: four bit vectors kept in sync so the per-z pair count is
// one shifted AND + popcount, exactly as in the fast counter.
struct AnnealState {
    long long n;
    BitVector pos, neg, rpos, rneg;
    std::vector<long long> pz;       // p(i) clamped to [2, 2n], else -1
    std::vector<long long> feasible; // z values with pz >= 0

    explicit AnnealState(const Coloring& c, const Polynomial& p)
        : n(c.hi()),
          pos(c.bits()),
          neg(c.bits().complemented()),
          rpos(pos.reversed()),
          rneg(neg.reversed()),
          pz(static_cast<std::size_t>(n) + 1, -1) {
        for (long long z = 1; z <= n; ++z) {
            Int s = eval(p, z);
            if (s >= 2 && s <= 2 * n) {
                pz[z] = static_cast<long long>(s);
                feasible.push_back(z);
            }
        }
    }

    bool plus(long long i) const { return pos.get(static_cast<std::size_t>(i - 1)); }

    void flip(long long i) {
        std::size_t idx = static_cast<std::size_t>(i - 1);
        std::size_t ridx = static_cast<std::size_t>(n) - 1 - idx;
        pos.flip(idx);
        neg.flip(idx);
        rpos.flip(ridx);
        rneg.flip(ridx);
    }

    std::uint64_t count_z(long long z) const {
        long long s = pz[z];
        if (s < 0) return 0;
        long long t = s - 2;  // indices are 0-based at lo = 1
        bool zp = plus(z);
        const BitVector& sel = zp ? pos : neg;
        const BitVector& rsel = zp ? rpos : rneg;
        return sel.correlate(rsel, n - 1 - t, t - (n - 1), t);
    }

    // Ordered triples containing i in any position.
    std::uint64_t involving(long long i) const {
        std::uint64_t total = count_z(i);
        bool ip = plus(i);
        for (long long z : feasible) {
            if (z == i) continue;
            if (plus(z) != ip) continue;
            long long w = pz[z] - i;
            if (w < 1 || w > n) continue;
            if (plus(w) == ip) total += (w == i) ? 1 : 2;
        }
        return total;
    }
};

}  // namespace

SearchResult min_solutions_anneal(const Polynomial& p, long long n, std::uint64_t seed,
                                  const AnnealParams& params) {
    if (n < 1) throw PreconditionViolated("n must be >= 1");

    Coloring start = [&] {
        try {
            return few_solutions_coloring(p, n);
        } catch (const DegenerateRange&) {
            return Coloring::constant(1, n, +1);
        }
    }();

    AnnealState st(start, p);
    std::uint64_t current = coloring_count(start, p);
    std::uint64_t best = current;
    BitVector best_bits = st.pos;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double temperature = params.t0;

    auto propose = [&]() -> long long {
        long long v = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
        if (u01(rng) >= params.shift_prob || n < 3) return v;
        // Boundary shift: retry a few times for a spot adjacent to a switch.
        for (int attempt = 0; attempt < 8; ++attempt) {
            bool left = v > 1 && st.plus(v) != st.plus(v - 1);
            bool right = v < n && st.plus(v) != st.plus(v + 1);
            if (left || right) return v;
            v = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
        }
        return v;
    };

    for (std::uint64_t it = 0; it < params.iterations; ++it) {
        long long v = propose();
        std::uint64_t before = st.involving(v);
        st.flip(v);
        std::uint64_t after = st.involving(v);
        long long delta = static_cast<long long>(after) - static_cast<long long>(before);
        bool accept = delta <= 0 ||
                      u01(rng) < std::exp(-static_cast<double>(delta) / temperature);
        if (accept) {
            current = static_cast<std::uint64_t>(static_cast<long long>(current) + delta);
            if (current < best) {
                best = current;
                best_bits = st.pos;
            }
        } else {
            st.flip(v);
        }
        temperature *= params.cooling;
    }

    SearchResult res;
    Coloring best_coloring(1, n, std::move(best_bits));
    // The running count is incremental; re-verify the reported coloring.
    res.best_count = coloring_count(best_coloring, p);
    res.best_coloring = std::move(best_coloring);
    res.nodes_explored = params.iterations;
    res.exact = false;
    return res;
}

namespace {

struct FrontierSearcher {
    const std::vector<std::vector<Triple>>& by_max;
    long long lo, cap;
    std::uint64_t budget;
    std::vector<std::int8_t> colors;
    long long best;
    std::vector<std::int8_t> best_colors;
    std::uint64_t nodes = 0;
    bool cap_hit = false;
    bool out_of_budget = false;

    bool consistent(long long i) const {
        for (const Triple& t : by_max[i - lo])
            if (colors[t.x - lo] == colors[t.y - lo] && colors[t.y - lo] == colors[t.z - lo])
                return false;
        return true;
    }

    void dfs(long long i) {
        if (i > cap) {
            cap_hit = true;
            return;
        }
        for (int c : {+1, -1}) {
            if (i == lo && c < 0) break;  // swap symmetry
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            colors[i - lo] = static_cast<std::int8_t>(c);
            if (consistent(i)) {
                if (i > best) {
                    best = i;
                    best_colors.assign(colors.begin(), colors.begin() + (i - lo + 1));
                }
                dfs(i + 1);
                if (cap_hit || out_of_budget) return;
            }
        }
        colors[i - lo] = 0;
    }
};

}  // namespace

FrontierResult longest_free_interval_exact(const Polynomial& p, long long n, long long cap,
                                           std::uint64_t node_budget) {
    if (n < 2) throw PreconditionViolated("frontier search needs n >= 2");
    if (cap < n) throw PreconditionViolated("cap must be at least n");

    auto by_max = triples_by_max(p, n, cap);
    FrontierSearcher searcher{by_max,
                              n,
                              cap,
                              node_budget,
                              std::vector<std::int8_t>(static_cast<std::size_t>(cap - n + 1), 0),
                              n - 1,
                              {},
                              0,
                              false,
                              false};
    searcher.dfs(n);

    FrontierResult res;
    res.n = n;
    res.f_exact = searcher.best;
    res.cap_reached = searcher.cap_hit;
    res.complete = !searcher.cap_hit && !searcher.out_of_budget;
    res.nodes = searcher.nodes;
    if (searcher.best >= n)
        res.witness = coloring_from_signs(n, searcher.best_colors, searcher.best);
    return res;
}

BoundReport bound_report(const Polynomial& p, const std::vector<long long>& n_values,
                         const BoundBudget& budget) {
    BoundReport report;
    for (long long n : n_values) {
        BoundReportRow row;
        row.n = n;
        try {
            AvoiderBounds ab = interval_avoider_bounds(p, n);
            row.f_construct = checked_sub(ab.h, 1);
        } catch (const Error&) {
        }
        if (n <= budget.exhaustive_cap)
            row.g_exact = min_solutions_exact(p, n, budget.exhaustive_cap).best_count;
        if (n >= 1)
            row.g_anneal = min_solutions_anneal(p, n, budget.seed, budget.anneal).best_count;
        try {
            row.g_construct = coloring_count(few_solutions_coloring(p, n), p);
        } catch (const Error&) {
        }
        report.rows.push_back(row);
    }

    // Least-squares slope of log(count) against log(n), over usable rows.
    std::vector<double> xs, ys;
    for (const auto& row : report.rows)
        if (row.g_construct && *row.g_construct > 0) {
            xs.push_back(std::log(static_cast<double>(row.n)));
            ys.push_back(std::log(static_cast<double>(*row.g_construct)));
        }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double cov = 0, var = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            cov += (xs[i] - mx) * (ys[i] - my);
            var += (xs[i] - mx) * (xs[i] - mx);
        }
        if (var > 0) report.fit_exponent = cov / var;
    }
    return report;
}

std::string bound_report_csv(const BoundReport& report) {
    std::string out = "n,f_construct,g_exact,g_anneal,g_construct,fit_exponent\n";
    char fit[32] = "";
    if (report.fit_exponent) std::snprintf(fit, sizeof fit, "%.6f", *report.fit_exponent);
    for (const auto& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        if (row.f_construct) out += to_string(*row.f_construct);
        out += ',';
        if (row.g_exact) out += std::to_string(*row.g_exact);
        out += ',';
        if (row.g_anneal) out += std::to_string(*row.g_anneal);
        out += ',';
        if (row.g_construct) out += std::to_string(*row.g_construct);
        out += ',';
        out += fit;
        out += '\n';
    }
    return out;
}

}  // namespace polyschur
