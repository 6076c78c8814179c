#ifndef CATZERO_ELEMENT_SET_HPP
#define CATZERO_ELEMENT_SET_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace catzero {

/// Dynamic bitset over the index space 0..universe-1 of a poset.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
        : ElementSet(universe) {
        for (auto i : members) set(i);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    template <class Range>
    static ElementSet from_indices(std::size_t universe, const Range& indices) {
        ElementSet s(universe);
        for (auto i : indices) s.set(static_cast<std::size_t>(i));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool test(std::size_t i) const {
        assert(i < universe_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }
    bool intersects(const ElementSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    ElementSet& operator^=(const ElementSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
    friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

    /// Calls f(i) for every member in increasing index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int bit = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Lexicographic comparison of the sorted member lists.
    friend std::strong_ordering lex_compare(const ElementSet& a, const ElementSet& b) {
        const auto ia = a.indices();
        const auto ib = b.indices();
        return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
    }

    std::size_t hash() const noexcept {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Orders sets by cardinality, then lexicographically; refines inclusion.
struct GradedLess {
    bool operator()(const ElementSet& a, const ElementSet& b) const {
        const auto ca = a.count();
        const auto cb = b.count();
        if (ca != cb) return ca < cb;
        return lex_compare(a, b) < 0;
    }
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

} // namespace catzero

#endif // CATZERO_ELEMENT_SET_HPP
