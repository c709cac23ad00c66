#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gcdpairs::graph {

/// Fixed-capacity bitset over vertices [0, capacity).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    std::size_t capacity() const noexcept { return capacity_; }

    void insert(std::size_t v) noexcept { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void erase(std::size_t v) noexcept { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool contains(std::size_t v) const noexcept { return (words_[v / 64] >> (v % 64)) & 1U; }

    std::size_t size() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or capacity() if there is none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= capacity_) return capacity_;
        std::size_t i = from / 64;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++i == words_.size()) return capacity_;
            w = words_[i];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Removes every member of o.
    VertexSet& subtract(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }

    /// Drops every member < v.
    void erase_below(std::size_t v) noexcept {
        for (std::size_t i = 0; i < words_.size() && i * 64 < v; ++i) {
            if ((i + 1) * 64 <= v)
                words_[i] = 0;
            else
                words_[i] &= ~std::uint64_t{0} << (v % 64);
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t w = words_[i]; w; w &= w - 1)
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gcdpairs::graph
