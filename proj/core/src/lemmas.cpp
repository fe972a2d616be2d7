#include "polyschur/lemmas.hpp"

#include <algorithm>
#include <cmath>

#include "polyschur/counting.hpp"

namespace polyschur {

Int dot_with_m(const Polynomial& p, long long k, const IntVector& v) {
    Int acc = 0;
    for (const auto& [i, val] : v.entries())
        acc = checked_add(acc, checked_mul(val, difference_m(p, k, i)));
    return acc;
}

std::vector<long long> greedy_combination(const std::vector<Int>& c_seq, long long t,
                                          Int target) {
    if (t < 2) throw PreconditionViolated("greedy base t must be >= 2");
    if (c_seq.empty()) throw PreconditionViolated("empty sequence");
    for (std::size_t i = 0; i < c_seq.size(); ++i) {
        if (c_seq[i] <= 0)
            throw PreconditionViolated("sequence entry " + std::to_string(i + 1) +
                                       " is not positive");
        if (i + 1 < c_seq.size() &&
            !(c_seq[i] < c_seq[i + 1] && c_seq[i + 1] < checked_mul(t, c_seq[i])))
            throw PreconditionViolated("sequence violates c_i < c_{i+1} < t c_i at index " +
                                       std::to_string(i + 1));
    }
    if (target < 1 || target > checked_mul(t, c_seq.back()))
        throw PreconditionViolated("target must lie in [1, t * c_m]");

    // Descending greedy: the invariant "remainder <= c_i after processing i"
    // pushes the final remainder below c_1.
    std::vector<long long> digits(c_seq.size(), 0);
    Int rem = target;
    for (std::size_t i = c_seq.size(); i-- > 0;) {
        Int d = rem / c_seq[i];
        if (d > t - 1) d = t - 1;
        digits[i] = static_cast<long long>(d);
        rem = checked_sub(rem, checked_mul(d, c_seq[i]));
    }
    return digits;
}

namespace {

Int binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    Int acc = 1;
    for (long long i = 1; i <= r; ++i) acc = checked_mul(acc, n - r + i) / i;
    return acc;
}

}  // namespace

MbExpansionReport mb_expansion_check(const Polynomial& p, long long t,
                                     const std::vector<long long>& s_values,
                                     const std::vector<long long>& k_values) {
    long long d = p.degree();
    if (t < 1 || t > d) throw PreconditionViolated("t must lie in [1, d]");

    MbExpansionReport rep;
    rep.t = t;
    IntVector b1 = vector_b(t, 1);
    for (long long j = t; j <= d; ++j) rep.c_prime[j] = dot_id_power(b1, j);

    const auto& a = p.coeffs();
    for (long long i = 0; i <= d - t; ++i)
        for (long long r = t + i; r <= d; ++r)
            rep.h[{r, i}] = checked_mul(checked_mul(a[r], binomial(r, i)), rep.c_prime[r - i]);

    if (rep.h[{d, d - t}] == 0)
        throw MismatchError("h_{d,d-t} vanished", 0, 0);
    if (t <= d - 1 && rep.h[{d, d - t - 1}] == 0)
        throw MismatchError("h_{d,d-t-1} vanished", 0, 0);

    for (long long k : k_values) {
        for (long long s : s_values) {
            if (s < 1 || k < 1) throw PreconditionViolated("s and k must be >= 1");
            Int lhs = dot_with_m(p, k, vector_b(t, s));
            Int rhs = 0;
            for (long long i = 0; i <= d - t; ++i)
                for (long long r = t + i; r <= d; ++r)
                    rhs = checked_add(rhs, checked_mul(rep.h[{r, i}],
                                                       checked_mul(checked_pow(s, r - i),
                                                                   checked_pow(k, i))));
            if (lhs != rhs) throw MismatchError("m^k . b^{t,s} expansion mismatch", s, k);
            ++rep.cases_checked;
        }
    }
    return rep;
}

namespace {

struct LadderBlock {
    long long t;
    long long i;
    IntVector vec;  // sign-adjusted so value >= 0
    Int value;
};

// +-(b^{t, 2^(q(i+1))} - 2^(qt) b^{t, 2^(qi)}) with the sign making the
// m-inner-product non-negative.
LadderBlock make_block(const Polynomial& p, long long k, long long q, long long t,
                       long long i) {
    long long s_lo = to_int64(checked_pow(2, q * i), "ladder shift");
    long long s_hi = to_int64(checked_pow(2, q * (i + 1)), "ladder shift");
    IntVector vec = vector_b(t, s_hi);
    vec.add_scaled(vector_b(t, s_lo), checked_sub(0, checked_pow(2, q * t)));
    Int value = dot_with_m(p, k, vec);
    if (value < 0) {
        IntVector neg;
        neg.add_scaled(vec, -1);
        vec = std::move(neg);
        value = checked_sub(0, value);
    }
    return {t, i, std::move(vec), value};
}

}  // namespace

EstimationResult estimation_vector(const Polynomial& p, long long k, Int ell, long long q,
                                   Int target) {
    long long d = p.degree();
    if (d < 2) throw PreconditionViolated("estimation needs degree >= 2");
    if (k < 2 || q < 1 || ell < 1) throw PreconditionViolated("k >= 2, q >= 1, ell >= 1 required");
    Int target_cap = checked_mul(q, checked_pow(k, d - 1));
    if (target < 1 || target > target_cap)
        throw PreconditionViolated("target must lie in (0, q k^{d-1}]");

    // Support-safe step range: exponents q(i+1) stay within q + (1/2) log2 k
    // exactly when 2^(q i) <= sqrt(k), i.e. 2^(2 q i) <= k.
    long long w_limit = 0;
    while (checked_pow(2, 2 * q * (w_limit + 1)) <= k) ++w_limit;
    if (w_limit < 1)
        throw HierarchyViolated("k too small: no ladder step satisfies 2^(2q) <= k");

    Int ratio_cap = checked_pow(2, 2 * q * d);  // claim: c_{t,i} <= 2^(2qd) c_{t,i-1}
    Int cross_cap = checked_pow(2, q * d);

    // Block t = 1 first (the top of the ladder), then t = 2 .. d-1 below it.
    std::vector<std::vector<LadderBlock>> per_t(static_cast<std::size_t>(d));
    for (long long i = 1; i <= w_limit; ++i) per_t[1].push_back(make_block(p, k, q, 1, i));
    for (long long t = 2; t <= d - 1; ++t) {
        long long w_t = 0;
        Int anchor = per_t[t - 1].front().value;  // c_{t-1,1}
        for (long long i = 1; i <= w_limit; ++i) {
            LadderBlock blk = make_block(p, k, q, t, i);
            if (blk.value <= anchor && anchor <= checked_mul(cross_cap, blk.value)) {
                w_t = i;
                break;
            }
        }
        if (w_t == 0)
            throw HierarchyViolated("no w_" + std::to_string(t) +
                                    " links block t=" + std::to_string(t) +
                                    " to the one above");
        for (long long i = 1; i <= w_t; ++i) per_t[t].push_back(make_block(p, k, q, t, i));
    }

    // Ascending ladder: t = d-1 block first, t = 1 last.
    std::vector<LadderBlock> ladder;
    for (long long t = d - 1; t >= 1; --t)
        for (auto& blk : per_t[t]) ladder.push_back(std::move(blk));

    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (ladder[i].value <= 0)
            throw HierarchyViolated("ladder value vanished at block t=" +
                                    std::to_string(ladder[i].t) + ", i=" +
                                    std::to_string(ladder[i].i));
        if (i + 1 < ladder.size()) {
            bool same_t = ladder[i].t == ladder[i + 1].t;
            Int cap = checked_mul(same_t ? ratio_cap : cross_cap, ladder[i].value);
            if (!(ladder[i].value < ladder[i + 1].value && ladder[i + 1].value <= cap))
                throw HierarchyViolated("ladder monotonicity failed between blocks " +
                                        std::to_string(i + 1) + " and " + std::to_string(i + 2));
        }
    }

    Int c_first = ladder.front().value;
    if (c_first > ell)
        throw HierarchyViolated("smallest ladder value " + to_string(c_first) +
                                " exceeds ell; the error bound cannot reach +-ell");

    long long digit_base = to_int64(checked_add(ratio_cap, 1), "greedy base");
    if (checked_mul(digit_base, ladder.back().value) < target)
        throw HierarchyViolated("ladder top does not cover the target range");

    std::vector<Int> values;
    values.reserve(ladder.size());
    for (const auto& blk : ladder) values.push_back(blk.value);
    std::vector<long long> digits = greedy_combination(values, digit_base, target);

    EstimationResult res;
    res.target = target;
    res.blocks = static_cast<long long>(ladder.size());
    res.smallest_block = c_first;
    for (std::size_t i = 0; i < ladder.size(); ++i)
        res.v.add_scaled(ladder[i].vec, digits[i]);
    res.achieved = dot_with_m(p, k, res.v);
    res.error = abs_int(checked_sub(res.achieved, target));

    if (res.error > ell) throw HierarchyViolated("achieved error exceeds ell");
    if (res.v.max_abs() > ell)
        throw HierarchyViolated("vector entry magnitude " + to_string(res.v.max_abs()) +
                                " exceeds ell");
    for (const auto& [idx, val] : res.v.entries()) {
        bool ok = false;
        long long best_j = 0;
        for (long long j = 1; (idx >> j) >= 1; ++j) {
            long long tt = idx >> j;
            if ((tt << j) != idx || tt > d - 1) continue;
            // j <= q + (1/2) log2 k  <=>  2^(2(j-q)) <= k for j > q.
            if (j > q && checked_pow(2, 2 * (j - q)) > k) continue;
            ok = true;
            best_j = std::max(best_j, j);
        }
        if (!ok)
            throw HierarchyViolated("support index " + std::to_string(idx) +
                                    " falls outside { t 2^j }");
        res.max_support_exponent = std::max(res.max_support_exponent, best_j);
    }
    return res;
}

Int independence_margin(const Polynomial& p, long long k, long long t, long long q,
                        std::uint64_t budget) {
    long long d = p.degree();
    if (t < 1 || t > d - 1) throw PreconditionViolated("t must lie in [1, d-1]");
    if (q < 1 || k < 1) throw PreconditionViolated("k >= 1 and q >= 1 required");
    long long box = k / q;
    if (box < 1) throw PreconditionViolated("k/q must be >= 1");

    Int combos = checked_pow(2 * box + 1, t);
    if (combos > static_cast<Int>(budget))
        throw BudgetExceeded("(2 k/q + 1)^t = " + to_string(combos) + " exceeds budget " +
                             std::to_string(budget));

    std::vector<Int> m(static_cast<std::size_t>(t));
    for (long long i = 1; i <= t; ++i) m[i - 1] = difference_m(p, k, i);

    // Half the box by sign symmetry: first nonzero coordinate positive.
    Int best = -1;
    std::vector<long long> c(static_cast<std::size_t>(t), 0);
    auto consider = [&](Int sum) {
        Int a = abs_int(sum);
        if (best < 0 || a < best) best = a;
    };
    // Odometer over coordinates; coordinate 0 runs over [0, box] and the
    // all-zero prefix forces later coordinates to start positive.
    struct Frame {
        long long idx;
        Int partial;
        bool all_zero;
    };
    std::vector<Frame> stack{{0, 0, true}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.idx == t) {
            if (!f.all_zero) consider(f.partial);
            continue;
        }
        long long lo = f.all_zero ? 0 : -box;
        for (long long v = lo; v <= box; ++v)
            stack.push_back({f.idx + 1,
                             checked_add(f.partial, checked_mul(v, m[f.idx])),
                             f.all_zero && v == 0});
    }
    return best;
}

bool independence_hierarchy_ok(const Polynomial& p, long long k, long long t, long long q) {
    // Concrete reading of 1/k << 1/q << 1/||p||: q at least twice the norm
    // and k at least q^2.
    (void)t;
    return static_cast<Int>(q) >= checked_mul(2, p.norm()) && k >= q * q;
}

PrefixInequalityReport prefix_inequality_check(const std::vector<double>& xs, double m) {
    PrefixInequalityReport rep;
    rep.hypothesis_ok = true;
    double weighted = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        weighted += static_cast<double>(j + 1) * xs[j];
        if (weighted > static_cast<double>(j) * m) {
            rep.hypothesis_ok = false;
            rep.failing_index = static_cast<long long>(j + 1);
            break;
        }
    }
    if (!rep.hypothesis_ok || xs.empty()) return rep;
    rep.conclusion_checked = true;
    for (double x : xs) rep.sum += x;
    rep.bound = 2.0 * m * (1.0 + std::log2(static_cast<double>(xs.size())));
    rep.conclusion_ok = rep.sum <= rep.bound;
    return rep;
}

SumDecompositionReport sum_decomposition_check(const Coloring& c, long long m, Int big_q) {
    long long n = c.lo();
    if (m < 1 || m % 2 == 0) throw PreconditionViolated("m must be odd and positive");
    if (big_q < checked_add(checked_mul(2, n), checked_mul(4, m)))
        throw PreconditionViolated("Q must be at least 2n + 4m");
    if (static_cast<Int>(c.hi()) != checked_sub(big_q, n))
        throw PreconditionViolated("coloring domain must be exactly [n, Q-n]");
    long long q = to_int64(big_q, "Q");

    SumDecompositionReport rep;
    rep.a1 = rep.a2 = rep.a3 = true;
    for (long long a = n; a <= q - n - m && rep.a1; ++a)
        if (c.color(a) > c.color(a + m)) {
            rep.a1 = false;
            rep.a1_witness = a;
        }
    for (long long a = n; a <= q - n && rep.a2; ++a)
        if (c.color(a) == +1 && c.color(q - a) == +1) {
            rep.a2 = false;
            rep.a2_witness = a;
        }
    for (long long a = n + m; a <= q - n && rep.a3; ++a)
        if (c.color(a) == -1 && c.color(q + m - a) == -1) {
            rep.a3 = false;
            rep.a3_witness = a;
        }
    if (!(rep.a1 && rep.a2 && rep.a3)) return rep;

    rep.conclusions_checked = true;
    rep.plus_ok = rep.minus_ok = true;
    auto representable = [&](long long v, int color) {
        long long xlo = std::max(n, v - (q - n));
        long long xhi = std::min(q - n, v - n);
        for (long long x = xlo; x <= xhi; ++x)
            if (c.color(x) == color && c.color(v - x) == color) return true;
        return false;
    };
    for (long long v = q + m + 1; v <= 2 * q - 2 * n - 2 * m; ++v)
        if (!representable(v, +1)) {
            rep.plus_ok = false;
            rep.counterexample = v;
            return rep;
        }
    for (long long v = 2 * n + 2 * m; v <= q - 1; ++v)
        if (!representable(v, -1)) {
            rep.minus_ok = false;
            rep.counterexample = v;
            return rep;
        }
    return rep;
}

SwitchStructureReport verify_switch_structure(const Coloring& c, const Polynomial& p,
                                              long long k) {
    if (!c.contains(k) || !c.contains(k + 1) || c.color(k) != +1 || c.color(k + 1) != -1)
        throw PreconditionViolated("k is not a positive switch of the coloring");
    if (count_fast(c, p).total != 0)
        throw PreconditionViolated("coloring has monochromatic solutions");

    long long n = c.lo();
    SwitchStructureReport rep;
    rep.k = k;
    rep.m1 = difference_m(p, k, 1);

    Int pk_value = eval(p, k);
    // At tiny k the defining inequality of k0 can be empty; the interval
    // [k+1, k0] is then empty as well.
    long long k0 =
        last_below(p, k, checked_sub(checked_mul(2, pk_value), checked_mul(4, rep.m1)));
    rep.k0 = std::max(k0, k);
    rep.m_prime = first_at_least(p, k, checked_mul(4, rep.m1));
    rep.n_prime = std::max(n, rep.m_prime);

    rep.covers_lemma_domain = static_cast<Int>(c.hi()) >= checked_sub(pk_value, n);
    rep.m1_odd = rep.m1 % 2 != 0;
    rep.sum_size_ok =
        pk_value >= checked_add(checked_mul(2, rep.n_prime), checked_mul(4, rep.m1));
    rep.m1_at_least_n_prime = rep.m1 >= rep.n_prime;
    rep.m2_exceeds_m1 = difference_m(p, k, 2) > rep.m1;
    rep.hypotheses_ok = rep.covers_lemma_domain && rep.m1_odd && rep.sum_size_ok &&
                        rep.m1_at_least_n_prime && rep.m2_exceeds_m1;

    rep.neg_checkable = rep.k0 <= c.hi();
    long long neg_hi = std::min(rep.k0, c.hi());
    rep.neg_interval_ok = true;
    for (long long i = k + 1; i <= neg_hi; ++i)
        if (c.color(i) != -1) {
            rep.neg_interval_ok = false;
            break;
        }

    rep.pos_interval_ok = true;
    for (long long i = rep.n_prime; i <= k; ++i)
        if (c.color(i) != +1) {
            rep.pos_interval_ok = false;
            break;
        }
    return rep;
}

}  // namespace polyschur
