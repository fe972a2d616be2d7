#include "polyschur/grid.hpp"

#include <algorithm>

namespace polyschur {

namespace {

struct LevelRange {
    long long ilo, ihi;  // admissible first coordinates on this level
    bool empty() const { return ilo > ihi; }
};

LevelRange level_range(const GridInstance& g, long long s) {
    // (i, s-i) needs 0 <= i <= n, 0 <= s-i <= n and |2i - s| <= m.
    long long ilo = std::max({0LL, s - g.n, (s - g.m + 1) / 2});
    long long ihi = std::min({g.n, s, (s + g.m) / 2});
    return {ilo, ihi};
}

}  // namespace

GridPathResult grid_avoid_path(const GridInstance& g, long long ell) {
    if (g.n < 0 || g.m < 0) throw PreconditionViolated("grid needs n >= 0 and m >= 0");
    if (ell < 1) throw PreconditionViolated("ell must be >= 1");
    for (const auto& [i, j] : g.forbidden)
        if (i < 0 || i > g.n || j < 0 || j > g.n || std::llabs(i - j) > g.m)
            throw PreconditionViolated("forbidden vertex outside the reduced grid");

    GridPathResult res;
    res.g1_held = 10 * static_cast<long long>(g.forbidden.size()) <= g.m;

    res.g2_held = true;
    for (long long i = 1; i * ell <= g.m; ++i) {
        long long low_count = 0, high_count = 0;
        for (const auto& [a, b] : g.forbidden) {
            long long level = a + b;
            if (level <= i * ell) ++low_count;
            if (level >= 2 * g.n - i * ell) ++high_count;
        }
        if (low_count > i - 1 || high_count > i - 1) {
            res.g2_held = false;
            break;
        }
    }

    // Forward reachability, one level at a time.
    long long levels = 2 * g.n;
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(levels) + 1);
    auto forbidden = [&](long long i, long long s) {
        return g.forbidden.count({i, s - i}) != 0;
    };
    {
        LevelRange r0 = level_range(g, 0);
        reach[0].assign(static_cast<std::size_t>(r0.ihi - r0.ilo + 1), 0);
        if (!forbidden(0, 0)) reach[0][0] = 1;
    }
    for (long long s = 1; s <= levels; ++s) {
        LevelRange r = level_range(g, s);
        LevelRange pr = level_range(g, s - 1);
        reach[s].assign(static_cast<std::size_t>(std::max(0LL, r.ihi - r.ilo + 1)), 0);
        if (r.empty()) continue;
        for (long long i = r.ilo; i <= r.ihi; ++i) {
            if (forbidden(i, s)) continue;
            bool from_up = i >= pr.ilo && i <= pr.ihi && reach[s - 1][i - pr.ilo];
            bool from_right = i - 1 >= pr.ilo && i - 1 <= pr.ihi && reach[s - 1][i - 1 - pr.ilo];
            if (from_up || from_right) reach[s][i - r.ilo] = 1;
        }
    }

    LevelRange last = level_range(g, levels);
    if (last.empty() || g.n < last.ilo || g.n > last.ihi || !reach[levels][g.n - last.ilo])
        return res;

    // Walk back from (n, n), preferring the up-move predecessor.
    res.found = true;
    std::vector<GridVertex> rev;
    long long i = g.n;
    for (long long s = levels; s >= 1; --s) {
        rev.push_back({i, s - i});
        LevelRange pr = level_range(g, s - 1);
        if (i >= pr.ilo && i <= pr.ihi && reach[s - 1][i - pr.ilo]) continue;
        --i;  // right-move predecessor must be reachable
    }
    rev.push_back({0, 0});
    res.path.assign(rev.rbegin(), rev.rend());
    return res;
}

}  // namespace polyschur
