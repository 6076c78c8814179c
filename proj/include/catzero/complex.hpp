#ifndef CATZERO_COMPLEX_HPP
#define CATZERO_COMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"

namespace catzero {

constexpr double kEmbeddingTolerance = 1e-9;

/// Cube C(I, M) of X_P: consistent ideal I, free coordinates M within max(I).
struct Cube {
    ElementSet ideal;
    ElementSet free;

    std::size_t dimension() const { return free.count(); }

    friend bool operator==(const Cube&, const Cube&) = default;
    friend bool operator<(const Cube& a, const Cube& b) {
        if (a.ideal != b.ideal) return GradedLess{}(a.ideal, b.ideal);
        return GradedLess{}(a.free, b.free);
    }
};

inline bool is_valid_cube(const Pip& p, const Cube& c) {
    return c.ideal.universe() == p.size() && c.free.universe() == p.size() && p.is_down_closed(c.ideal) &&
           p.is_consistent(c.ideal) && c.free.is_subset_of(maximal_of(p, c.ideal));
}

inline Cube make_cube(const Pip& p, ElementSet ideal, ElementSet free) {
    Cube c{std::move(ideal), std::move(free)};
    if (!is_valid_cube(p, c)) throw Error(Errc::InvalidCube, "not a cube of the complex");
    return c;
}

/// Both standard-embedding constraint families, each within `tol`.
inline bool is_valid_point(const Pip& p, const Point& x, double tol = kEmbeddingTolerance) {
    if (x.size() != p.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(x[i] >= -tol && x[i] <= 1.0 + tol)) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (x[j] <= tol) continue;
        bool ok = true;
        p.below(j).for_each([&](std::size_t i) { ok = ok && x[i] >= 1.0 - tol; });
        p.inconsistent_with(j).for_each([&](std::size_t i) { ok = ok && x[i] <= tol; });
        if (!ok) return false;
    }
    return true;
}

/// True iff x lies in the box of C in the standard embedding.
inline bool cube_contains(const Cube& c, const Point& x, double tol = kEmbeddingTolerance) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (c.free.test(i)) {
            if (x[i] < -tol || x[i] > 1.0 + tol) return false;
        } else if (c.ideal.test(i)) {
            if (std::abs(x[i] - 1.0) > tol) return false;
        } else if (std::abs(x[i]) > tol) {
            return false;
        }
    }
    return true;
}

/// The 2^|M| vertices I \ S, S a subset of M.
inline std::vector<ElementSet> cube_vertices(const Cube& c) {
    const auto free = c.free.indices();
    std::vector<ElementSet> out;
    out.reserve(std::size_t{1} << free.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        auto v = c.ideal;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask >> b & 1) v.reset(free[b]);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
}

/// The 3^|N| faces C(J - N1, N - N1 - N2), N1 and N2 disjoint subsets of N.
inline std::vector<Cube> cube_faces(const Cube& c) {
    const auto free = c.free.indices();
    std::size_t total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) total *= 3;
    std::vector<Cube> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Cube f = c;
        std::size_t rest = code;
        for (auto e : free) {
            switch (rest % 3) {
            case 0: break;                               // stays free
            case 1: f.free.reset(e); f.ideal.reset(e); break; // pinned at 0 (in N1)
            case 2: f.free.reset(e); break;              // pinned at 1 (in N2)
            }
            rest /= 3;
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff `face` is a face of `c`.
inline bool is_face(const Cube& face, const Cube& c) {
    if (!face.ideal.is_subset_of(c.ideal)) return false;
    const auto dropped = c.ideal - face.ideal;
    if (!dropped.is_subset_of(c.free)) return false;
    return face.free.is_subset_of(c.free - dropped);
}

/// Free coordinates strictly inside (tol, 1 - tol); ideal adds the ones at 1.
inline Cube minimal_cube_containing(const Pip& p, const Point& x, double tol = kEmbeddingTolerance) {
    if (!is_valid_point(p, x, tol)) throw Error(Errc::InvalidPoint, "point violates the standard embedding");
    Cube c{ElementSet(p.size()), ElementSet(p.size())};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (x[i] >= 1.0 - tol) {
            c.ideal.set(i);
        } else if (x[i] > tol) {
            c.ideal.set(i);
            c.free.set(i);
        }
    }
    return c;
}

namespace detail {

// Largest set of pairwise compatible (incomparable, consistent) elements
// among `candidates`, by branch and bound.
inline void grow_compatible(const Pip& p, ElementSet& current, ElementSet candidates, std::size_t& best) {
    const std::size_t size = current.count();
    if (candidates.empty()) {
        best = std::max(best, size);
        return;
    }
    if (size + candidates.count() <= best) return;
    const auto e = candidates.indices().front();
    candidates.reset(e);
    auto with = candidates - p.below(e) - p.above(e) - p.inconsistent_with(e);
    current.set(e);
    grow_compatible(p, current, with, best);
    current.reset(e);
    grow_compatible(p, current, candidates, best);
}

} // namespace detail

/// Size of the largest consistent antichain.
inline std::size_t max_cube_dimension(const Pip& p) {
    ElementSet current(p.size());
    std::size_t best = 0;
    detail::grow_compatible(p, current, p.all(), best);
    return best;
}

/// True iff no element can join `a` and keep it a consistent antichain.
inline bool is_maximal_consistent_antichain(const Pip& p, const ElementSet& a) {
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (a.test(e)) continue;
        if (p.below(e).intersects(a) || p.above(e).intersects(a) || p.inconsistent_with(e).intersects(a)) continue;
        return false;
    }
    return true;
}

/// All cubes C(I, M), sorted by ideal then free set.
inline std::vector<Cube> enumerate_cubes(const Pip& p, std::size_t guard = kDefaultIdealGuard) {
    std::vector<Cube> out;
    for (const auto& ideal : enumerate_consistent_ideals(p, guard)) {
        const auto maxes = maximal_of(p, ideal.members()).indices();
        for (std::size_t mask = 0; mask < (std::size_t{1} << maxes.size()); ++mask) {
            ElementSet free(p.size());
            for (std::size_t b = 0; b < maxes.size(); ++b)
                if (mask >> b & 1) free.set(maxes[b]);
            out.push_back({ideal.members(), std::move(free)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Maximal cubes C(P_{<=A}, A), listed in order of their ideals.
inline std::vector<Cube> maximal_cubes(const Pip& p, std::size_t guard = kDefaultIdealGuard) {
    std::vector<Cube> out;
    for (const auto& ideal : enumerate_consistent_ideals(p, guard)) {
        auto maxes = maximal_of(p, ideal.members());
        if (is_maximal_consistent_antichain(p, maxes)) out.push_back({ideal.members(), std::move(maxes)});
    }
    return out;
}

/// Alternating count of cubes by dimension.
inline long euler_characteristic(const Pip& p, std::size_t guard = kDefaultIdealGuard) {
    long chi = 0;
    for (const auto& c : enumerate_cubes(p, guard)) chi += (c.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

/// Number of cubes per dimension, index = dimension.
inline std::vector<std::size_t> cube_dimension_counts(const std::vector<Cube>& cubes) {
    std::vector<std::size_t> counts;
    for (const auto& c : cubes) {
        if (counts.size() <= c.dimension()) counts.resize(c.dimension() + 1, 0);
        ++counts[c.dimension()];
    }
    return counts;
}

} // namespace catzero

#endif // CATZERO_COMPLEX_HPP
