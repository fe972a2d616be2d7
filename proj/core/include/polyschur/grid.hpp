#ifndef POLYSCHUR_GRID_HPP
#define POLYSCHUR_GRID_HPP

#include <set>
#include <utility>
#include <vector>

#include "polyschur/errors.hpp"

namespace polyschur {

using GridVertex = std::pair<long long, long long>;

// Reduced grid digraph G(n; m): vertices (i, j) in [0,n]^2 with |i-j| <= m,
// arcs (i,j) -> (i+1,j) and (i,j) -> (i,j+1).  Level s is the antidiagonal
// i + j = s.
struct GridInstance {
    long long n = 0;
    long long m = 0;
    std::set<GridVertex> forbidden;
};

struct GridPathResult {
    bool found = false;
    std::vector<GridVertex> path;  // (0,0) .. (n,n) when found
    bool g1_held = false;          // |Z| <= m/10
    bool g2_held = false;          // near-end levels carry few forbidden vertices
};

// Level-by-level reachability from (0,0) (and implicitly towards (n,n))
// inside the reduced grid minus the forbidden set; reconstructs an explicit
// path when one exists.  The G1/G2 conditions (with parameter ell) are
// evaluated and reported, never required.
GridPathResult grid_avoid_path(const GridInstance& g, long long ell);

}  // namespace polyschur

#endif
