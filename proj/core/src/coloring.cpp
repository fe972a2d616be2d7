#include "polyschur/coloring.hpp"

#include <algorithm>

namespace polyschur {

Coloring::Coloring(long long lo, long long hi, BitVector bits)
    : lo_(lo), hi_(hi), bits_(std::move(bits)) {
    if (lo_ < 1) throw PreconditionViolated("coloring domain must start at 1 or later");
    if (hi_ < lo_) throw PreconditionViolated("coloring domain is empty");
    if (bits_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
        throw PreconditionViolated("bit length does not match domain length");
}

Coloring Coloring::constant(long long lo, long long hi, int color) {
    return Coloring(lo, hi, BitVector(static_cast<std::size_t>(hi - lo + 1), color > 0));
}

Coloring Coloring::with_flipped(long long i) const {
    if (!contains(i)) throw RangeError("flip index outside coloring domain");
    BitVector b = bits_;
    b.flip(static_cast<std::size_t>(i - lo_));
    return Coloring(lo_, hi_, std::move(b));
}

Coloring Coloring::restricted(long long lo2, long long hi2) const {
    if (lo2 < lo_ || hi2 > hi_ || lo2 > hi2)
        throw RangeError("restriction is not a subinterval of the domain");
    BitVector b(static_cast<std::size_t>(hi2 - lo2 + 1));
    for (long long i = lo2; i <= hi2; ++i)
        b.set(static_cast<std::size_t>(i - lo2), is_plus(i));
    return Coloring(lo2, hi2, std::move(b));
}

Coloring parity_coloring(long long lo, long long hi) {
    BitVector b(static_cast<std::size_t>(hi - lo + 1));
    for (long long i = lo; i <= hi; ++i)
        if (i & 1) b.set(static_cast<std::size_t>(i - lo), true);
    return Coloring(lo, hi, std::move(b));
}

AvoiderBounds interval_avoider_bounds(const Polynomial& p, long long n) {
    if (n < 2) throw PreconditionViolated("avoider construction needs n >= 2");
    Int m = ceil_div(eval(p, n), 2);
    if (m - 1 < n)
        throw DegenerateRange("p(n) <= 2n: first avoider interval is empty");
    if (!strictly_increasing_on(p, n, to_int64(checked_add(m, 1), "avoider threshold")))
        throw PreconditionViolated("p is not strictly increasing on [n, M]");
    Int h = ceil_div(eval(p, m), 2);
    return {m, h};
}

Coloring interval_avoider(const Polynomial& p, long long n, long long max_elements) {
    AvoiderBounds ab = interval_avoider_bounds(p, n);
    Int elements = checked_sub(ab.h, n);
    if (elements > max_elements)
        throw BudgetExceeded("avoider interval has " + to_string(elements) +
                             " elements, budget is " + std::to_string(max_elements));
    long long m = to_int64(ab.m), h = to_int64(ab.h);
    BitVector bits(static_cast<std::size_t>(h - n));
    bits.fill_range(0, static_cast<std::size_t>(m - n), true);
    return Coloring(n, h - 1, std::move(bits));
}

namespace {

// Smallest x >= 1 with p(x) > bound.  Exists because the leading coefficient
// is positive; the scan cap is a crude bound past which p certainly exceeds.
long long min_exceeding(const Polynomial& p, Int bound) {
    Int coeff_sum = 0;
    for (long long c : p.coeffs()) coeff_sum += c < 0 ? -c : c;
    long long cap = to_int64(checked_add(checked_add(abs_int(bound), coeff_sum), 2),
                             "threshold scan cap");
    if (eval(p, 1) > bound) return 1;
    if (strictly_increasing_on(p, 1, cap)) {
        long long lo = 1, hi = cap;  // p(lo) <= bound < p(hi)
        if (eval(p, cap) <= bound) throw DegenerateRange("no x <= scan cap exceeds the threshold");
        while (hi - lo > 1) {
            long long mid = lo + (hi - lo) / 2;
            (eval(p, mid) > bound ? hi : lo) = mid;
        }
        return hi;
    }
    for (long long x = 2; x <= cap; ++x)
        if (eval(p, x) > bound) return x;
    throw DegenerateRange("no x <= scan cap exceeds the threshold");
}

}  // namespace

FewSolutionsThresholds few_solutions_thresholds(const Polynomial& p, long long n) {
    if (n < 1) throw PreconditionViolated("n must be >= 1");
    long long a = min_exceeding(p, checked_mul(2, n));
    long long b = min_exceeding(p, checked_mul(2, a));
    return {a, b};
}

Coloring few_solutions_coloring(const Polynomial& p, long long n) {
    auto [a, b] = few_solutions_thresholds(p, n);
    if (b > a) throw DegenerateRange("b > a in the few-solutions construction");
    if (a > n) throw DegenerateRange("a > n in the few-solutions construction");
    BitVector bits(static_cast<std::size_t>(n), true);
    bits.fill_range(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1), false);
    return Coloring(1, n, std::move(bits));
}

std::vector<Switch> switches(const Coloring& c) {
    std::vector<Switch> out;
    for (long long k = c.lo(); k < c.hi(); ++k) {
        int ck = c.color(k);
        if (ck != c.color(k + 1)) out.push_back({k, ck > 0});
    }
    return out;
}

bool is_isolated(const Coloring& c, const Polynomial& p, long long k) {
    if (!c.contains(k) || !c.contains(k + 1) || c.color(k) != +1 || c.color(k + 1) != -1)
        throw NotASwitch("k is not a positive switch of the coloring");
    long long k0 = landmark_k0(p, k);
    if (k0 <= k) return true;  // [k+1, k0] empty
    if (k0 > c.hi()) throw RangeError("[k+1, k0] exceeds the coloring's domain");
    std::size_t from = static_cast<std::size_t>(k + 1 - c.lo());
    std::size_t to = static_cast<std::size_t>(k0 - c.lo() + 1);
    return !c.bits().any_in_range(from, to);
}

std::string encode(const Coloring& c) {
    std::string out = std::to_string(c.lo()) + " " + std::to_string(c.hi()) + "\n";
    long long i = c.lo();
    bool first = true;
    while (i <= c.hi()) {
        int col = c.color(i);
        long long j = i;
        while (j < c.hi() && c.color(j + 1) == col) ++j;
        if (!first) out += ' ';
        out += (col > 0 ? '+' : '-');
        out += std::to_string(j - i + 1);
        first = false;
        i = j + 1;
    }
    out += '\n';
    return out;
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines(1);
    int line = 1, col = 1;
    Token cur{"", 1, 1};
    auto flush = [&] {
        if (!cur.text.empty()) lines.back().push_back(cur);
        cur.text.clear();
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            lines.emplace_back();
            ++line;
            col = 1;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
            ++col;
        } else {
            if (cur.text.empty()) cur = {"", line, col};
            cur.text.push_back(ch);
            ++col;
        }
    }
    flush();
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

Coloring decode(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2)
        throw ParseError("expected header line \"lo hi\"", 1, 1);
    long long lo = to_int64(parse_int(lines[0][0].text, 1, lines[0][0].column), "lo");
    long long hi = to_int64(parse_int(lines[0][1].text, 1, lines[0][1].column), "hi");
    if (lo < 1) throw ParseError("lo must be >= 1", 1, lines[0][0].column);
    if (hi < lo) throw ParseError("hi must be >= lo", 1, lines[0][1].column);
    if (lines.size() < 2 || lines[1].empty())
        throw ParseError("expected a run-length line", 2, 1);

    long long length = hi - lo + 1;
    BitVector bits(static_cast<std::size_t>(length));
    long long pos = 0;
    for (const Token& tok : lines[1]) {
        if (tok.text.size() < 2 || (tok.text[0] != '+' && tok.text[0] != '-'))
            throw ParseError("run token must look like +N or -N", tok.line, tok.column);
        bool plus = tok.text[0] == '+';
        Int run = parse_int(std::string_view(tok.text).substr(1), tok.line, tok.column + 1);
        if (run < 1) throw ParseError("run length must be positive", tok.line, tok.column);
        if (run > length - pos)
            throw ParseError("run length exceeds interval", tok.line, tok.column);
        long long len = static_cast<long long>(run);
        if (plus)
            bits.fill_range(static_cast<std::size_t>(pos), static_cast<std::size_t>(pos + len), true);
        pos += len;
    }
    if (pos != length) {
        const Token& last = lines[1].back();
        throw ParseError("runs sum to " + std::to_string(pos) + ", interval needs " +
                             std::to_string(length),
                         last.line, last.column);
    }
    if (lines.size() > 2 && !lines[2].empty())
        throw ParseError("unexpected trailing content", lines[2][0].line, lines[2][0].column);
    return Coloring(lo, hi, std::move(bits));
}

}  // namespace polyschur
