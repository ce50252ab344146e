#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace symbreak {

// Fixed-width bitset sized at construction. Vertices and edges are dense
// 0-based ids, so neighborhoods, orbits and candidate sets all live here.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int bit_count)
        : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

    int size() const { return bit_count_; }

    bool test(int i) const {
        assert(i >= 0 && i < bit_count_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < bit_count_);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < bit_count_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count_and(const Bitset& other) const {
        assert(bit_count_ == other.bit_count_);
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += std::popcount(words_[i] & other.words_[i]);
        return total;
    }

    bool intersects(const Bitset& other) const {
        assert(bit_count_ == other.bit_count_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        assert(bit_count_ == other.bit_count_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(bit_count_ == other.bit_count_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(bit_count_ == other.bit_count_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& other) {
        assert(bit_count_ == other.bit_count_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.bit_count_ == b.bit_count_ && a.words_ == b.words_;
    }

    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    // Lexicographic on word content; used to sort neighborhoods for twin
    // detection. Requires equal sizes.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        assert(a.bit_count_ == b.bit_count_);
        return a.words_ < b.words_;
    }

    int find_first() const { return find_next(-1); }

    // Smallest set bit strictly greater than `after`, or -1.
    int find_next(int after) const {
        int start = after + 1;
        if (start >= bit_count_) return -1;
        std::size_t w = static_cast<std::size_t>(start) >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (cur) return static_cast<int>((w << 6) + std::countr_zero(cur));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = find_first(); i != -1; i = find_next(i)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int bit_count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace symbreak
