#ifndef PALETTE_EDGE_SUBSET_HPP
#define PALETTE_EDGE_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "palette/common.hpp"

namespace palette {

// Fixed-length bitvector indexed by edge id. Also used as a GF(2) vector in
// the cycle-space code, so xor is the workhorse operation.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    EdgeSubset& operator^=(const EdgeSubset& other) {
        if (other.size_ != size_) throw ContractError("EdgeSubset size mismatch in xor");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    EdgeSubset& operator&=(const EdgeSubset& other) {
        if (other.size_ != size_) throw ContractError("EdgeSubset size mismatch in and");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend EdgeSubset operator^(EdgeSubset a, const EdgeSubset& b) { return a ^= b; }
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }

    bool operator==(const EdgeSubset& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    static EdgeSubset from_indices(std::size_t size, const std::vector<int>& indices) {
        EdgeSubset s(size);
        for (int i : indices) {
            if (i < 0 || static_cast<std::size_t>(i) >= size)
                throw InputError("edge index out of range");
            s.set(static_cast<std::size_t>(i));
        }
        return s;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace palette

#endif
