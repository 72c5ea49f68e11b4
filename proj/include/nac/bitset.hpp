#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nac {

/// Dynamically sized bitset used for edge sets and class masks.
///
/// Bits beyond size() are always zero, so word-wise comparison and hashing
/// work without masking.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (auto& w : b.words_)
            w = ~Word{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return size_; }
    const std::vector<Word>& words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    void clear() {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit, or size() if empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    static std::size_t intersection_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    /// this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    Bitset complement() const {
        Bitset r(*this);
        for (auto& w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.size_ != b.size_)
            return a.size_ < b.size_;
        // Compare as little-endian big integers from the top word down.
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i])
                return a.words_[i] < b.words_[i];
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                f(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        if (size_ % word_bits && !words_.empty())
            words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace nac
