#ifndef CATZERO_PIP_HPP
#define CATZERO_PIP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catzero/element_set.hpp"
#include "catzero/error.hpp"

namespace catzero {

using ElementPair = std::pair<std::string, std::string>;

/// Unvalidated description of a poset with inconsistent pairs. Covers are
/// (lower, upper) and may contain non-cover relations; they are closed
/// transitively during validation.
struct RawPip {
    std::vector<std::string> elements;
    std::vector<ElementPair> covers;
    std::vector<ElementPair> inconsistent;
};

/// A finite poset with inconsistent pairs. Elements are indexed 0..size()-1
/// in lexicographic order of their identifiers. The strict order and the
/// upward-closed inconsistency relation are stored as bitsets per element.
class Pip {
public:
    Pip() = default;

    /// Validates the axioms and materializes both closures.
    static Pip validate(const RawPip& raw);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> find(const std::string& id) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), id);
        if (it == names_.end() || *it != id) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }
    std::size_t index(const std::string& id) const {
        if (auto i = find(id)) return *i;
        throw Error(Errc::UnknownElement, "element '" + id + "' is not in the poset");
    }

    bool less(std::size_t a, std::size_t b) const { return below_[b].test(a); }
    bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || less(b, a); }
    bool inconsistent(std::size_t a, std::size_t b) const { return inconsistent_[a].test(b); }

    /// Strictly smaller / strictly larger elements.
    const ElementSet& below(std::size_t i) const { return below_[i]; }
    const ElementSet& above(std::size_t i) const { return above_[i]; }
    const ElementSet& inconsistent_with(std::size_t i) const { return inconsistent_[i]; }

    ElementSet down_closed(std::size_t i) const {
        auto s = below_[i];
        s.set(i);
        return s;
    }
    ElementSet up_closed(std::size_t i) const {
        auto s = above_[i];
        s.set(i);
        return s;
    }

    ElementSet lower_covers(std::size_t i) const;
    ElementSet upper_covers(std::size_t i) const;

    bool has_inconsistencies() const noexcept {
        for (const auto& s : inconsistent_)
            if (!s.empty()) return true;
        return false;
    }

    /// Hasse-diagram cover pairs (lower, upper), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
    /// Minimal inconsistent pairs (a < b by index), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> minimal_inconsistent_pairs() const;

    ElementSet empty_set() const { return ElementSet(size()); }
    ElementSet all() const { return ElementSet::full(size()); }

    bool is_down_closed(const ElementSet& s) const;
    bool is_consistent(const ElementSet& s) const;
    bool is_antichain(const ElementSet& s) const;

    /// Induced sub-poset on `subset`, keeping identifiers.
    Pip restrict_to(const ElementSet& subset) const;

    /// Raw form with Hasse covers and minimal inconsistent pairs.
    RawPip to_raw() const;

    ElementSet from_names(const std::vector<std::string>& ids) const {
        ElementSet s(size());
        for (const auto& id : ids) s.set(index(id));
        return s;
    }
    std::vector<std::string> to_names(const ElementSet& s) const {
        std::vector<std::string> out;
        s.for_each([&](std::size_t i) { out.push_back(names_[i]); });
        return out;
    }

    friend bool operator==(const Pip&, const Pip&) = default;

private:
    std::vector<std::string> names_;
    std::vector<ElementSet> below_;
    std::vector<ElementSet> above_;
    std::vector<ElementSet> inconsistent_;
};

inline Pip Pip::validate(const RawPip& raw) {
    Pip p;
    p.names_ = raw.elements;
    std::sort(p.names_.begin(), p.names_.end());
    if (auto dup = std::adjacent_find(p.names_.begin(), p.names_.end()); dup != p.names_.end())
        throw Error(Errc::DuplicateElement, "element '" + *dup + "' listed twice");

    const std::size_t n = p.names_.size();
    p.below_.assign(n, ElementSet(n));
    p.above_.assign(n, ElementSet(n));
    p.inconsistent_.assign(n, ElementSet(n));

    for (const auto& [lo, hi] : raw.covers) {
        const auto a = p.index(lo);
        const auto b = p.index(hi);
        if (a == b) throw Error(Errc::CycleDetected, "cover (" + lo + ", " + hi + ") is a loop");
        p.below_[b].set(a);
    }
    // Warshall closure over intermediate elements.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (p.below_[j].test(k)) p.below_[j] |= p.below_[k];
    for (std::size_t j = 0; j < n; ++j) {
        if (p.below_[j].test(j))
            throw Error(Errc::CycleDetected, "covers contain a cycle through '" + p.names_[j] + "'");
        p.below_[j].for_each([&](std::size_t i) { p.above_[i].set(j); });
    }

    for (const auto& [x, y] : raw.inconsistent) {
        const auto a = p.index(x);
        const auto b = p.index(y);
        if (p.comparable(a, b))
            throw Error(Errc::ComparableInconsistentPair,
                        "inconsistent pair {" + x + ", " + y + "} is comparable");
        const auto common = p.up_closed(a) & p.up_closed(b);
        if (!common.empty()) {
            const auto r = common.indices().front();
            throw Error(Errc::CommonUpperBound, "inconsistent pair {" + x + ", " + y +
                                                    "} has common upper bound '" + p.names_[r] + "'");
        }
        const auto ua = p.up_closed(a);
        const auto ub = p.up_closed(b);
        ua.for_each([&](std::size_t i) { p.inconsistent_[i] |= ub; });
        ub.for_each([&](std::size_t i) { p.inconsistent_[i] |= ua; });
    }
    return p;
}

inline ElementSet Pip::lower_covers(std::size_t i) const {
    auto covers = below_[i];
    below_[i].for_each([&](std::size_t c) { covers -= below_[c]; });
    return covers;
}

inline ElementSet Pip::upper_covers(std::size_t i) const {
    auto covers = above_[i];
    above_[i].for_each([&](std::size_t c) { covers -= above_[c]; });
    return covers;
}

inline std::vector<std::pair<std::size_t, std::size_t>> Pip::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = 0; b < size(); ++b)
        lower_covers(b).for_each([&](std::size_t a) { out.emplace_back(a, b); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> Pip::minimal_inconsistent_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        inconsistent_[a].for_each([&](std::size_t b) {
            if (b <= a) return;
            // {a', b} with a' < a, or {a, b'} with b' < b, would be smaller.
            if (below_[a].intersects(inconsistent_[b])) return;
            if (below_[b].intersects(inconsistent_[a])) return;
            out.emplace_back(a, b);
        });
    }
    return out;
}

inline bool Pip::is_down_closed(const ElementSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) { ok = ok && below_[i].is_subset_of(s); });
    return ok;
}

inline bool Pip::is_consistent(const ElementSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) { ok = ok && !inconsistent_[i].intersects(s); });
    return ok;
}

inline bool Pip::is_antichain(const ElementSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) { ok = ok && !below_[i].intersects(s); });
    return ok;
}

inline Pip Pip::restrict_to(const ElementSet& subset) const {
    RawPip raw;
    raw.elements = to_names(subset);
    subset.for_each([&](std::size_t b) {
        (below_[b] & subset).for_each([&](std::size_t a) { raw.covers.emplace_back(names_[a], names_[b]); });
        (inconsistent_[b] & subset).for_each([&](std::size_t a) {
            if (a < b) raw.inconsistent.emplace_back(names_[a], names_[b]);
        });
    });
    return validate(raw);
}

inline RawPip Pip::to_raw() const {
    RawPip raw;
    raw.elements = names_;
    for (auto [a, b] : cover_pairs()) raw.covers.emplace_back(names_[a], names_[b]);
    for (auto [a, b] : minimal_inconsistent_pairs()) raw.inconsistent.emplace_back(names_[a], names_[b]);
    return raw;
}

/// Down-closed subset of a Pip, with its consistency flag.
class OrderIdeal {
public:
    OrderIdeal() = default;
    OrderIdeal(ElementSet members, bool consistent)
        : members_(std::move(members)), consistent_(consistent) {}

    /// Throws NotValid unless `members` is down-closed.
    static OrderIdeal checked(const Pip& p, ElementSet members) {
        if (!p.is_down_closed(members)) throw Error(Errc::NotValid, "set is not an order ideal");
        const bool consistent = p.is_consistent(members);
        return OrderIdeal(std::move(members), consistent);
    }

    const ElementSet& members() const noexcept { return members_; }
    bool consistent() const noexcept { return consistent_; }
    std::size_t size() const { return members_.count(); }
    bool contains(std::size_t i) const { return members_.test(i); }

    friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) { return a.members_ == b.members_; }

private:
    ElementSet members_;
    bool consistent_ = true;
};

/// Pairwise incomparable subset of a Pip.
class Antichain {
public:
    Antichain() = default;
    Antichain(ElementSet members, bool consistent)
        : members_(std::move(members)), consistent_(consistent) {}

    static Antichain checked(const Pip& p, ElementSet members) {
        if (!p.is_antichain(members)) throw Error(Errc::NotValid, "set is not an antichain");
        const bool consistent = p.is_consistent(members);
        return Antichain(std::move(members), consistent);
    }

    const ElementSet& members() const noexcept { return members_; }
    bool consistent() const noexcept { return consistent_; }
    std::size_t size() const { return members_.count(); }

    friend bool operator==(const Antichain& a, const Antichain& b) { return a.members_ == b.members_; }

private:
    ElementSet members_;
    bool consistent_ = true;
};

inline ElementSet downset_of(const Pip& p, const ElementSet& s) {
    auto out = s;
    s.for_each([&](std::size_t i) { out |= p.below(i); });
    return out;
}

inline OrderIdeal downset(const Pip& p, const ElementSet& s) {
    auto members = downset_of(p, s);
    const bool consistent = p.is_consistent(members);
    return OrderIdeal(std::move(members), consistent);
}

inline OrderIdeal downset(const Pip& p, const std::vector<std::string>& ids) {
    return downset(p, p.from_names(ids));
}

/// Members of `s` with nothing above them inside `s`.
inline ElementSet maximal_of(const Pip& p, const ElementSet& s) {
    ElementSet out(p.size());
    s.for_each([&](std::size_t i) {
        if (!p.above(i).intersects(s)) out.set(i);
    });
    return out;
}

/// Members of `s` with nothing below them inside `s`.
inline ElementSet minimal_of(const Pip& p, const ElementSet& s) {
    ElementSet out(p.size());
    s.for_each([&](std::size_t i) {
        if (!p.below(i).intersects(s)) out.set(i);
    });
    return out;
}

inline Antichain maximal_elements(const Pip& p, const OrderIdeal& ideal) {
    auto members = maximal_of(p, ideal.members());
    return Antichain(std::move(members), ideal.consistent());
}

/// True iff every element is comparable to (or equal to) a member of `a`.
inline bool is_maximal_antichain(const Pip& p, const ElementSet& a) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto related = p.below(i) | p.above(i);
        related.set(i);
        if (!related.intersects(a)) return false;
    }
    return true;
}

inline bool is_maximal_antichain(const Pip& p, const Antichain& a) {
    return is_maximal_antichain(p, a.members());
}

constexpr std::size_t kDefaultIdealGuard = 20;

/// Visits every consistent order ideal exactly once (reverse search; the
/// parent of J drops its largest-index maximal element). Visit order is
/// unspecified; see enumerate_consistent_ideals for a sorted list.
template <class Visitor>
void for_each_consistent_ideal(const Pip& p, Visitor&& visit) {
    const std::size_t n = p.size();
    std::vector<ElementSet> stack{ElementSet(n)};
    while (!stack.empty()) {
        auto ideal = std::move(stack.back());
        stack.pop_back();
        visit(static_cast<const ElementSet&>(ideal));
        const auto maxes = maximal_of(p, ideal);
        for (std::size_t e = 0; e < n; ++e) {
            if (ideal.test(e)) continue;
            if (!p.below(e).is_subset_of(ideal)) continue;
            if (p.inconsistent_with(e).intersects(ideal)) continue;
            bool canonical = true;
            (maxes - p.below(e)).for_each([&](std::size_t m) { canonical = canonical && m < e; });
            if (!canonical) continue;
            auto child = ideal;
            child.set(e);
            stack.push_back(std::move(child));
        }
    }
}

/// All consistent order ideals, sorted by size then lexicographically.
inline std::vector<OrderIdeal> enumerate_consistent_ideals(const Pip& p,
                                                           std::size_t guard = kDefaultIdealGuard) {
    if (p.size() > guard)
        throw Error(Errc::TooLarge, "poset has " + std::to_string(p.size()) +
                                        " elements; ideal enumeration guard is " + std::to_string(guard));
    std::vector<ElementSet> sets;
    for_each_consistent_ideal(p, [&](const ElementSet& s) { sets.push_back(s); });
    std::sort(sets.begin(), sets.end(), GradedLess{});
    std::vector<OrderIdeal> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(std::move(s), true);
    return out;
}

/// Chain partition of minimum size (Dilworth), from a maximum matching on
/// the split comparability graph. Chains are listed bottom-up and ordered by
/// their least element.
inline std::vector<std::vector<std::size_t>> chain_decomposition(const Pip& p) {
    if (p.has_inconsistencies())
        throw Error(Errc::HasInconsistentPairs, "chain decomposition needs a poset without inconsistent pairs");
    const std::size_t n = p.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(n, none); // right j -> left i
    std::vector<std::size_t> match_left(n, none);  // left i -> right j

    std::vector<char> seen(n);
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        bool found = false;
        p.above(i).for_each([&](std::size_t j) {
            if (found || seen[j]) return;
            seen[j] = 1;
            if (match_right[j] == none || self(self, match_right[j])) {
                match_right[j] = i;
                match_left[i] = j;
                found = true;
            }
        });
        return found;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        augment(augment, i);
    }

    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t start = 0; start < n; ++start) {
        if (match_right[start] != none) continue;
        std::vector<std::size_t> chain;
        for (std::size_t cur = start; cur != none; cur = match_left[cur]) chain.push_back(cur);
        chains.push_back(std::move(chain));
    }
    return chains;
}

inline std::size_t width(const Pip& p) { return chain_decomposition(p).size(); }

} // namespace catzero

#endif // CATZERO_PIP_HPP
