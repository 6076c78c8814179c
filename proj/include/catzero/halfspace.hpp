#ifndef CATZERO_HALFSPACE_HPP
#define CATZERO_HALFSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"

namespace catzero {

/// Signed halfspace h+ or h- of hyperplane `hyperplane`.
struct Literal {
    std::size_t hyperplane = 0;
    bool positive = true;

    Literal flipped() const { return {hyperplane, !positive}; }
    std::size_t index() const { return 2 * hyperplane + (positive ? 0 : 1); }
    static Literal from_index(std::size_t i) { return {i / 2, i % 2 == 0}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Halfspace system (pocset): a strict order on signed literals closed
/// under the order-reversing involution h+ <-> h-.
class HalfspaceSystem {
public:
    HalfspaceSystem() = default;

    /// Closes `relations` (a < b) under the involution and transitivity and
    /// checks the pocset axioms.
    static HalfspaceSystem build(std::vector<std::string> hyperplanes,
                                 const std::vector<std::pair<Literal, Literal>>& relations);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t h) const { return names_.at(h); }
    std::size_t index(const std::string& id) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), id);
        if (it == names_.end() || *it != id)
            throw Error(Errc::UnknownElement, "hyperplane '" + id + "' is not in the system");
        return static_cast<std::size_t>(it - names_.begin());
    }

    bool less(Literal a, Literal b) const { return below_[b.index()].test(a.index()); }

    /// Hasse covers of the literal order, sorted by literal index.
    std::vector<std::pair<Literal, Literal>> cover_relations() const;

    /// Swaps the labels h+ and h- for every hyperplane in `hyperplanes`.
    HalfspaceSystem relabeled(const ElementSet& hyperplanes) const;

    std::string literal_name(Literal l) const { return names_.at(l.hyperplane) + (l.positive ? "+" : "-"); }

    friend bool operator==(const HalfspaceSystem&, const HalfspaceSystem&) = default;

private:
    std::vector<std::string> names_;
    std::vector<ElementSet> below_; // per literal index: strictly smaller literals
};

inline HalfspaceSystem HalfspaceSystem::build(std::vector<std::string> hyperplanes,
                                              const std::vector<std::pair<Literal, Literal>>& relations) {
    HalfspaceSystem h;
    h.names_ = std::move(hyperplanes);
    std::sort(h.names_.begin(), h.names_.end());
    if (std::adjacent_find(h.names_.begin(), h.names_.end()) != h.names_.end())
        throw Error(Errc::DuplicateElement, "hyperplane listed twice");
    const std::size_t lits = 2 * h.names_.size();
    h.below_.assign(lits, ElementSet(lits));
    for (const auto& [a, b] : relations) {
        if (a.hyperplane >= h.size() || b.hyperplane >= h.size())
            throw Error(Errc::UnknownElement, "relation refers to an unknown hyperplane");
        h.below_[b.index()].set(a.index());
        h.below_[a.flipped().index()].set(b.flipped().index());
    }
    for (std::size_t k = 0; k < lits; ++k)
        for (std::size_t j = 0; j < lits; ++j)
            if (h.below_[j].test(k)) h.below_[j] |= h.below_[k];

    for (std::size_t j = 0; j < lits; ++j)
        if (h.below_[j].test(j))
            throw Error(Errc::InvalidHalfspaceSystem,
                        "relations contain a cycle through " + h.literal_name(Literal::from_index(j)));
    for (std::size_t a = 0; a < h.size(); ++a) {
        const Literal ap{a, true};
        const Literal am{a, false};
        if (h.less(ap, am) || h.less(am, ap))
            throw Error(Errc::InvalidHalfspaceSystem, h.names_[a] + "+ and " + h.names_[a] + "- are comparable");
        for (std::size_t b = a + 1; b < h.size(); ++b) {
            const Literal bp{b, true};
            const Literal bm{b, false};
            const int nested = int(h.less(ap, bp) || h.less(bp, ap)) + int(h.less(ap, bm) || h.less(bm, ap)) +
                               int(h.less(am, bp) || h.less(bp, am)) + int(h.less(am, bm) || h.less(bm, am));
            // With the involution, each nesting appears as two comparable literal pairs.
            if (nested > 2)
                throw Error(Errc::InvalidHalfspaceSystem,
                            "hyperplanes " + h.names_[a] + " and " + h.names_[b] + " are nested more than one way");
        }
    }
    return h;
}

inline std::vector<std::pair<Literal, Literal>> HalfspaceSystem::cover_relations() const {
    std::vector<std::pair<Literal, Literal>> out;
    for (std::size_t j = 0; j < below_.size(); ++j) {
        auto covers = below_[j];
        below_[j].for_each([&](std::size_t c) { covers -= below_[c]; });
        covers.for_each([&](std::size_t i) { out.emplace_back(Literal::from_index(i), Literal::from_index(j)); });
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first.index(), x.second.index()) < std::pair(y.first.index(), y.second.index());
    });
    return out;
}

inline HalfspaceSystem HalfspaceSystem::relabeled(const ElementSet& hyperplanes) const {
    auto map = [&](Literal l) { return hyperplanes.test(l.hyperplane) ? l.flipped() : l; };
    std::vector<std::pair<Literal, Literal>> rel;
    for (std::size_t j = 0; j < below_.size(); ++j)
        below_[j].for_each([&](std::size_t i) {
            rel.emplace_back(map(Literal::from_index(i)), map(Literal::from_index(j)));
        });
    return build(names_, rel);
}

/// a < b gives a+ < b+ (and b- < a-); inconsistent {a, b} gives a- < b+ and
/// b- < a+; everything else is transverse.
inline HalfspaceSystem pip_to_halfspace(const Pip& p) {
    std::vector<std::pair<Literal, Literal>> rel;
    for (std::size_t b = 0; b < p.size(); ++b) {
        p.below(b).for_each([&](std::size_t a) { rel.push_back({{a, true}, {b, true}}); });
        p.inconsistent_with(b).for_each([&](std::size_t a) { rel.push_back({{a, false}, {b, true}}); });
    }
    return HalfspaceSystem::build(p.names(), rel);
}

/// Restricts to positive literals; {p, q} is inconsistent when p- < q+.
inline Pip halfspace_to_pip(const HalfspaceSystem& h) {
    RawPip raw;
    raw.elements = h.names();
    for (std::size_t a = 0; a < h.size(); ++a) {
        for (std::size_t b = 0; b < h.size(); ++b) {
            if (a == b) continue;
            if (h.less({a, true}, {b, false}))
                throw Error(Errc::NotAcyclic, "relation " + h.literal_name({a, true}) + " < " +
                                                  h.literal_name({b, false}) + " makes the system cyclic");
            if (h.less({a, true}, {b, true})) raw.covers.emplace_back(h.name(a), h.name(b));
            if (a < b && h.less({a, false}, {b, true})) raw.inconsistent.emplace_back(h.name(a), h.name(b));
        }
    }
    return Pip::validate(raw);
}

/// The same complex rooted at another vertex, plus the coordinate map
/// between the two standard embeddings (x'_p = 1 - x_p on flipped elements).
struct Reroot {
    Pip pip;
    ElementSet flipped;

    Point transport(const Point& x) const {
        Point out = x;
        flipped.for_each([&](std::size_t i) { out[i] = 1.0 - out[i]; });
        return out;
    }
    /// The flip is an involution, so transport works in both directions.
    Point transport_back(const Point& x) const { return transport(x); }

    /// Vertex (consistent ideal) in one frame to the other frame.
    ElementSet transport_vertex(const ElementSet& ideal) const { return ideal ^ flipped; }
};

inline Reroot reroot(const Pip& p, const ElementSet& vertex) {
    if (!p.is_down_closed(vertex) || !p.is_consistent(vertex))
        throw Error(Errc::InconsistentVertex, "reroot target is not a consistent order ideal");
    return Reroot{halfspace_to_pip(pip_to_halfspace(p).relabeled(vertex)), vertex};
}

inline Reroot reroot(const Pip& p, const OrderIdeal& vertex) { return reroot(p, vertex.members()); }

} // namespace catzero

#endif // CATZERO_HALFSPACE_HPP
