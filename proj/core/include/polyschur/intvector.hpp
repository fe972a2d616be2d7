#ifndef POLYSCHUR_INTVECTOR_HPP
#define POLYSCHUR_INTVECTOR_HPP

#include <map>

#include "polyschur/polynomial.hpp"

namespace polyschur {

// Finitely supported integer vector indexed from 1, kept sparse: the vectors
// of interest (b^{t,s} and the estimation output) have O(d log k) support
// inside index ranges up to k.  Zero entries are never stored.
class IntVector {
   public:
    IntVector() = default;

    void set(long long index, Int value) {
        if (index < 1) throw PreconditionViolated("vector indices start at 1");
        if (value == 0)
            entries_.erase(index);
        else
            entries_[index] = value;
    }

    void add(long long index, Int value) { set(index, checked_add(get(index), value)); }

    Int get(long long index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? Int(0) : it->second;
    }

    const std::map<long long, Int>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // this += factor * other
    IntVector& add_scaled(const IntVector& other, Int factor) {
        if (factor != 0)
            for (const auto& [i, v] : other.entries_) add(i, checked_mul(factor, v));
        return *this;
    }

    Int max_abs() const {
        Int m = 0;
        for (const auto& [i, v] : entries_) m = std::max(m, abs_int(v));
        return m;
    }

    bool operator==(const IntVector&) const = default;

   private:
    std::map<long long, Int> entries_;
};

// Exact inner product of two finitely supported vectors.
Int dot(const IntVector& u, const IntVector& v);

// Inner product with the infinite vector id^power = (1^power, 2^power, ...).
Int dot_id_power(const IntVector& v, long long power);

// The alternating-binomial vector: entry (-1)^j * binom(t, j) at index j*s
// for j in [1, t].
IntVector vector_b(long long t, long long s);

// (m_1(k), ..., m_len(k)).
IntVector m_vector(const Polynomial& p, long long k, long long len);

}  // namespace polyschur

#endif
