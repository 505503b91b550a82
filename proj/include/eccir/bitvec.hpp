#pragma once

// Fixed-length packed binary vector. Bit i lives in word i / 64 at position i % 64;
// bits past size() are kept zero.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eccir {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }
    std::uint64_t* data() noexcept { return words_.data(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& rhs) {
        if (rhs.nbits_ != nbits_) throw std::invalid_argument("BitVec: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& rhs) const = default;

    // Cyclic rotation towards higher indices: result[(i + s) % n] = (*this)[i].
    BitVec rotated(std::size_t s) const {
        BitVec r(nbits_);
        if (nbits_ == 0) return r;
        s %= nbits_;
        if (nbits_ <= 64) {
            const std::uint64_t mask = nbits_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nbits_) - 1);
            const std::uint64_t w = words_[0];
            r.words_[0] = s == 0 ? w : (((w << s) | (w >> (nbits_ - s))) & mask);
            return r;
        }
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) r.set((i + s) % nbits_);
        return r;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace eccir
