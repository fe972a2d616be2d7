#include "polyschur/counting.hpp"

#include <algorithm>
#include <thread>

namespace polyschur {

namespace {

// Intersection of [lo, hi] with the x-range of x + y = S, y in [lo, hi];
// empty() when S misses the domain entirely.
struct ZRange {
    long long xlo, xhi;
    bool empty() const { return xlo > xhi; }
};

ZRange x_range(const Coloring& c, Int s) {
    Int xlo = s - c.hi(), xhi = s - c.lo();
    if (xlo < c.lo()) xlo = c.lo();
    if (xhi > c.hi()) xhi = c.hi();
    if (xlo > xhi) return {1, 0};
    return {static_cast<long long>(xlo), static_cast<long long>(xhi)};
}

bool diagonal_hit(const Coloring& c, Int s, long long z) {
    // x = y = z needs 2z = p(z); colors then agree trivially.
    return s == checked_mul(2, z) && c.contains(z);
}

}  // namespace

std::uint64_t count_for_z_naive(const Coloring& c, const Polynomial& p, long long z) {
    Int s = eval(p, z);
    ZRange r = x_range(c, s);
    if (r.empty()) return 0;
    int zc = c.color(z);
    std::uint64_t count = 0;
    for (long long x = r.xlo; x <= r.xhi; ++x)
        if (c.color(x) == zc && c.color(static_cast<long long>(s - x)) == zc) ++count;
    return count;
}

SolutionReport count_naive(const Coloring& c, const Polynomial& p, CountOptions opts) {
    SolutionReport rep;
    for (long long z = c.lo(); z <= c.hi(); ++z) {
        std::uint64_t n = count_for_z_naive(c, p, z);
        if (opts.exclude_diagonal && n > 0 && diagonal_hit(c, eval(p, z), z)) --n;
        if (n) {
            rep.per_z[z] = n;
            rep.total += n;
        }
    }
    return rep;
}

namespace {

struct FastContext {
    const Coloring& c;
    const Polynomial& p;
    BitVector pos, neg, rpos, rneg;

    explicit FastContext(const Coloring& c, const Polynomial& p)
        : c(c),
          p(p),
          pos(c.bits()),
          neg(c.bits().complemented()),
          rpos(pos.reversed()),
          rneg(neg.reversed()) {}

    std::uint64_t count_z(long long z) const {
        Int s = eval(p, z);
        ZRange r = x_range(c, s);
        if (r.empty()) return 0;
        // In 0-based indices i = x - lo, the partner of i sits at t - i with
        // t = s - 2 lo; reflecting turns that into a correlation at fixed lag.
        std::int64_t n = c.size();
        std::int64_t t = static_cast<std::int64_t>(s - 2 * c.lo());
        bool plus = c.is_plus(z);
        const BitVector& sel = plus ? pos : neg;
        const BitVector& rsel = plus ? rpos : rneg;
        return sel.correlate(rsel, n - 1 - t, r.xlo - c.lo(), r.xhi - c.lo());
    }
};

void accumulate_range(const FastContext& ctx, long long zlo, long long zhi, CountOptions opts,
                      SolutionReport& rep) {
    for (long long z = zlo; z <= zhi; ++z) {
        std::uint64_t n = ctx.count_z(z);
        if (opts.exclude_diagonal && n > 0 && diagonal_hit(ctx.c, eval(ctx.p, z), z)) --n;
        if (n) {
            rep.per_z[z] = n;
            rep.total += n;
        }
    }
}

}  // namespace

SolutionReport count_fast(const Coloring& c, const Polynomial& p, CountOptions opts) {
    FastContext ctx(c, p);
    int workers = std::max(1, opts.workers);
    long long domain = c.size();
    if (workers == 1 || domain < 4 * workers) {
        SolutionReport rep;
        accumulate_range(ctx, c.lo(), c.hi(), opts, rep);
        return rep;
    }

    // Disjoint z chunks; the merge is a deterministic in-order reduction.
    std::vector<SolutionReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    long long chunk = (domain + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long zlo = c.lo() + w * chunk;
        long long zhi = std::min(c.hi(), zlo + chunk - 1);
        if (zlo > c.hi()) break;
        threads.emplace_back([&, zlo, zhi, w] { accumulate_range(ctx, zlo, zhi, opts, parts[w]); });
    }
    for (auto& t : threads) t.join();

    SolutionReport rep;
    for (const auto& part : parts) {
        rep.total += part.total;
        rep.per_z.insert(part.per_z.begin(), part.per_z.end());
    }
    return rep;
}

std::vector<Witness> enumerate_solutions(const Coloring& c, const Polynomial& p,
                                         std::uint64_t limit) {
    std::vector<Witness> out;
    if (limit == 0) return out;
    for (long long z = c.lo(); z <= c.hi(); ++z) {
        Int s = eval(p, z);
        ZRange r = x_range(c, s);
        if (r.empty()) continue;
        int zc = c.color(z);
        for (long long x = r.xlo; x <= r.xhi; ++x) {
            long long y = static_cast<long long>(s - x);
            if (c.color(x) == zc && c.color(y) == zc) {
                out.emplace_back(x, y, z);
                if (out.size() >= limit) return out;
            }
        }
    }
    return out;
}

std::vector<BadPair> find_bad_pairs(const Coloring& c, const Polynomial& p, long long k,
                                    long long s_max) {
    if (!c.contains(k) || !c.contains(k + 1) || c.color(k) != +1 || c.color(k + 1) != -1)
        throw NotASwitch("k is not a positive switch of the coloring");
    if (s_max < 1 || s_max > k)
        throw PreconditionViolated("s_max must be in [1, k]");
    std::vector<BadPair> out;
    for (long long s = 1; s <= s_max; ++s) {
        if (k + s > c.hi()) break;
        if (c.color(k + s) != -1) continue;
        Int m = difference_m(p, k, s);
        if (m < 1 || m > c.size() - 1) continue;  // no (a, a+m) fits the domain
        long long step = static_cast<long long>(m);
        for (long long a = c.lo(); a + step <= c.hi(); ++a)
            if (c.color(a) == +1 && c.color(a + step) == -1)
                out.push_back({a, a + step, s, k});
    }
    return out;
}

Witness solution_from_bad_pair(const Coloring& c, const Polynomial& p, const BadPair& pair) {
    if (!c.contains(pair.a) || !c.contains(pair.b))
        throw PreconditionViolated("bad pair endpoints must lie in the domain");
    if (!c.contains(pair.k) || !c.contains(pair.k + pair.s))
        throw PreconditionViolated("k and k+s must lie in the domain");
    if (pair.s < 1 || checked_add(pair.a, difference_m(p, pair.k, pair.s)) != pair.b)
        throw PreconditionViolated("pair does not satisfy b = a + m_s(k)");
    if (c.color(pair.a) != +1 || c.color(pair.b) != -1)
        throw PreconditionViolated("pair colors must be phi(a) = +1, phi(b) = -1");
    if (c.color(pair.k) != +1 || c.color(pair.k + pair.s) != -1)
        throw PreconditionViolated("switch colors must be phi(k) = +1, phi(k+s) = -1");

    Int partner = checked_sub(eval(p, pair.k), pair.a);
    if (partner < c.lo() || partner > c.hi())
        throw RangeError("p(k) - a falls outside the domain");
    long long w = static_cast<long long>(partner);
    if (c.color(w) == +1) return {pair.a, w, pair.k};
    return {pair.b, w, pair.k + pair.s};
}

std::string report_to_text(const SolutionReport& r) {
    std::string out = "total " + std::to_string(r.total) + "\n";
    for (const auto& [z, n] : r.per_z)
        out += "z " + std::to_string(z) + " " + std::to_string(n) + "\n";
    if (r.witnesses)
        for (const auto& [x, y, z] : *r.witnesses)
            out += "witness " + std::to_string(x) + " " + std::to_string(y) + " " +
                   std::to_string(z) + "\n";
    return out;
}

std::string report_to_csv(const SolutionReport& r) {
    std::string out = "z,count\n";
    for (const auto& [z, n] : r.per_z)
        out += std::to_string(z) + "," + std::to_string(n) + "\n";
    return out;
}

}  // namespace polyschur
