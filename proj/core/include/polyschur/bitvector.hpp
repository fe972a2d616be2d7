#ifndef POLYSCHUR_BITVECTOR_HPP
#define POLYSCHUR_BITVECTOR_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "polyschur/errors.hpp"

namespace polyschur {

// Plain 64-bit-word bitset with the one nonstandard operation the counter
// needs: a masked popcount of this AND a bit-shifted window of another
// vector (a correlation at a fixed lag).  Bits at positions >= size() are
// kept zero so out-of-range reads can simply return zero words.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~0ull : 0ull) {
        trim();
    }

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        std::uint64_t mask = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= 1ull << (i & 63); }

    // Sets bits in the half-open range [lo, hi).
    void fill_range(std::size_t lo, std::size_t hi, bool v) {
        if (lo >= hi) return;
        std::size_t i = lo;
        while (i < hi && (i & 63)) set(i++, v);
        for (; i + 64 <= hi; i += 64) words_[i >> 6] = v ? ~0ull : 0ull;
        while (i < hi) set(i++, v);
        trim();
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Popcount over the half-open range [lo, hi).
    std::uint64_t count_range(std::size_t lo, std::size_t hi) const;

    bool any_in_range(std::size_t lo, std::size_t hi) const { return count_range(lo, hi) != 0; }

    BitVector reversed() const {
        BitVector r(nbits_);
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) r.set(nbits_ - 1 - i, true);
        return r;
    }

    BitVector complemented() const {
        BitVector r(nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
        r.trim();
        return r;
    }

    // Sum over i in the inclusive range [lo, hi] of this[i] & other[i + off].
    // Positions of `other` outside [0, other.size()) read as zero.
    std::uint64_t correlate(const BitVector& other, std::int64_t off, std::int64_t lo,
                            std::int64_t hi) const;

    bool operator==(const BitVector& o) const = default;

   private:
    // 64-bit window of this vector starting at (possibly negative) bit j.
    std::uint64_t window(std::int64_t j) const {
        if (j >= static_cast<std::int64_t>(nbits_) || j <= -64) return 0;
        std::int64_t q = j >> 6;  // arithmetic shift: floor division
        unsigned r = static_cast<unsigned>(j & 63);
        auto word_at = [&](std::int64_t idx) -> std::uint64_t {
            return (idx < 0 || idx >= static_cast<std::int64_t>(words_.size())) ? 0
                                                                                : words_[idx];
        };
        std::uint64_t w = word_at(q) >> r;
        if (r) w |= word_at(q + 1) << (64 - r);
        return w;
    }

    void trim() {
        if (nbits_ & 63) words_.back() &= (1ull << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::uint64_t BitVector::count_range(std::size_t lo, std::size_t hi) const {
    if (lo >= hi) return 0;
    std::size_t wlo = lo >> 6, whi = (hi - 1) >> 6;
    std::uint64_t first_mask = ~0ull << (lo & 63);
    std::uint64_t last_mask = (hi & 63) ? ((1ull << (hi & 63)) - 1) : ~0ull;
    if (wlo == whi) return std::popcount(words_[wlo] & first_mask & last_mask);
    std::uint64_t c = std::popcount(words_[wlo] & first_mask);
    for (std::size_t w = wlo + 1; w < whi; ++w) c += std::popcount(words_[w]);
    c += std::popcount(words_[whi] & last_mask);
    return c;
}

inline std::uint64_t BitVector::correlate(const BitVector& other, std::int64_t off,
                                          std::int64_t lo, std::int64_t hi) const {
    if (lo < 0) lo = 0;
    if (hi >= static_cast<std::int64_t>(nbits_)) hi = static_cast<std::int64_t>(nbits_) - 1;
    if (lo > hi) return 0;
    std::uint64_t total = 0;
    std::int64_t wlo = lo >> 6, whi = hi >> 6;
    for (std::int64_t w = wlo; w <= whi; ++w) {
        std::uint64_t m = words_[w];
        if (w == wlo && (lo & 63)) m &= ~0ull << (lo & 63);
        if (w == whi && ((hi & 63) != 63)) m &= (1ull << ((hi & 63) + 1)) - 1;
        if (!m) continue;
        total += std::popcount(m & other.window(w * 64 + off));
    }
    return total;
}

}  // namespace polyschur

#endif
