#ifndef CATZERO_INTERVAL_HPP
#define CATZERO_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catzero/complex.hpp"
#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/halfspace.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"

namespace catzero {

/// The interval X[v, w] containing every geodesic from x to y, realized as
/// X_Q for the ideal Q of w in the complex rerooted at v.
struct IntervalFrame {
    Pip original;
    ElementSet v; // vertices, original frame
    ElementSet w;
    Reroot rerooted;
    Pip q;
    std::vector<std::size_t> q_to_p;
    Point x; // endpoints in X_Q
    Point y;

    /// Point of X_Q to the original standard embedding.
    Point lift(const Point& z) const {
        Point out(original.size(), 0.0);
        for (std::size_t k = 0; k < q_to_p.size(); ++k) out[q_to_p[k]] = z[k];
        return rerooted.transport_back(out);
    }

    ElementSet lift_set(const ElementSet& s) const {
        ElementSet out(original.size());
        s.for_each([&](std::size_t k) { out.set(q_to_p[k]); });
        return out;
    }

    /// Vertex (ideal of Q) to the corresponding consistent ideal of P.
    ElementSet lift_vertex(const ElementSet& ideal) const { return lift_set(ideal) ^ v; }

    /// Cube of X_Q to the same cell of X_P in the original rooting.
    Cube lift(const Cube& c) const {
        const auto free = lift_set(c.free);
        const auto fixed = lift_vertex(c.ideal - c.free) - free;
        return make_cube(original, fixed | free, free);
    }
};

namespace detail {

inline double snap01(double t) { return t >= 0.5 ? 1.0 : 0.0; }

} // namespace detail

/// Rooting rule: per hyperplane, put v on the far side from y (and w on the
/// far side from x); where both minimal cubes cross the hyperplane, order
/// v, x, y, w along it, with v = 0 when x_p = y_p.
inline IntervalFrame interval_endpoints(const Pip& p, const Point& x, const Point& y,
                                        double tol = kEmbeddingTolerance) {
    const auto cube_x = minimal_cube_containing(p, x, tol);
    const auto cube_y = minimal_cube_containing(p, y, tol);

    IntervalFrame f;
    f.original = p;
    f.v = ElementSet(p.size());
    f.w = ElementSet(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool fx = cube_x.free.test(i);
        const bool fy = cube_y.free.test(i);
        double vi = 0.0;
        double wi = 0.0;
        if (!fx) vi = detail::snap01(x[i]);
        else if (!fy) vi = 1.0 - detail::snap01(y[i]);
        else vi = x[i] <= y[i] ? 0.0 : 1.0;
        if (!fy) wi = detail::snap01(y[i]);
        else if (!fx) wi = 1.0 - detail::snap01(x[i]);
        else wi = 1.0 - vi;
        if (vi > 0.5) f.v.set(i);
        if (wi > 0.5) f.w.set(i);
    }
    if (!p.is_down_closed(f.v) || !p.is_consistent(f.v))
        throw Error(Errc::InvalidFrame, "rooting rule produced a start vertex that is not a consistent ideal");
    if (!p.is_down_closed(f.w) || !p.is_consistent(f.w))
        throw Error(Errc::InvalidFrame, "rooting rule produced an end vertex that is not a consistent ideal");

    f.rerooted = reroot(p, f.v);
    const auto& rp = f.rerooted.pip;
    const auto q_set = f.rerooted.transport_vertex(f.w);
    if (!rp.is_down_closed(q_set) || !rp.is_consistent(q_set))
        throw Error(Errc::InvalidFrame, "end vertex is not a consistent ideal after rerooting");
    f.q = rp.restrict_to(q_set);
    f.q_to_p = q_set.indices();

    auto project = [&](const Point& z, const char* which) {
        const auto t = f.rerooted.transport(z);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!q_set.test(i) && std::abs(t[i]) > tol)
                throw Error(Errc::InvalidFrame, std::string(which) + " leaves the interval at element '" +
                                                    p.name(i) + "'");
        Point out(f.q_to_p.size());
        for (std::size_t k = 0; k < f.q_to_p.size(); ++k) out[k] = std::clamp(t[f.q_to_p[k]], 0.0, 1.0);
        return out;
    };
    f.x = project(x, "x");
    f.y = project(y, "y");
    return f;
}

/// Reading's map R -> (|R n C_1|, ..., |R n C_q|) over a minimum chain partition.
struct LatticeEmbedding {
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::pair<ElementSet, std::vector<int>>> vertices; // graded order

    std::size_t dimension() const { return chains.size(); }
};

inline std::vector<int> lattice_point(const std::vector<std::vector<std::size_t>>& chains, const ElementSet& ideal) {
    std::vector<int> out(chains.size(), 0);
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (auto e : chains[c])
            if (ideal.test(e)) ++out[c];
    return out;
}

inline LatticeEmbedding embed_interval(const Pip& q, std::size_t guard = kDefaultIdealGuard) {
    LatticeEmbedding emb;
    emb.chains = chain_decomposition(q); // throws HasInconsistentPairs
    for (const auto& ideal : enumerate_consistent_ideals(q, guard))
        emb.vertices.emplace_back(ideal.members(), lattice_point(emb.chains, ideal.members()));
    return emb;
}

} // namespace catzero

#endif // CATZERO_INTERVAL_HPP
