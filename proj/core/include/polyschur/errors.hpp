#ifndef POLYSCHUR_ERRORS_HPP
#define POLYSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyschur {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit code 1; usage problems are handled separately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A defining inequality has no solution in the searched range
// (e.g. no t >= 1 with p(t) < p(k)/2, or a construction interval is empty).
struct DegenerateRange : Error {
    using Error::Error;
};

// An index or interval falls outside a coloring's domain.
struct RangeError : Error {
    using Error::Error;
};

// An operation required a (positive) switch at k and the coloring has none.
struct NotASwitch : Error {
    using Error::Error;
};

// Malformed text input; carries 1-based line and column of the offending token.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Exhaustive search requested above the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// A brute-force enumeration would exceed its explicit budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// The runtime monotonicity checks behind the estimation construction failed
// for the supplied (k, q, ell); the constants do not realize the hierarchy.
struct HierarchyViolated : Error {
    using Error::Error;
};

// Two supposedly equal quantities differ; carries the failing parameters.
struct MismatchError : Error {
    MismatchError(const std::string& msg, long long s, long long k)
        : Error(msg + " at s=" + std::to_string(s) + ", k=" + std::to_string(k)),
          s(s),
          k(k) {}
    long long s;
    long long k;
};

// Fixed-width arithmetic would wrap.
struct Overflow : Error {
    using Error::Error;
};

}  // namespace polyschur

#endif
