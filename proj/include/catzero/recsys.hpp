#ifndef CATZERO_RECSYS_HPP
#define CATZERO_RECSYS_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/pip.hpp"

namespace catzero {

/// Local move over binary labelings of the graph vertices. A labeling is the
/// set of vertices labelled 1. The move is admissible when the labeling
/// matches `context` on support - trace and equals u1 or u2 on the trace;
/// applying it swaps u1 and u2.
struct Move {
    std::string name;
    ElementSet support;
    ElementSet trace;
    ElementSet context; // vertices of support - trace labelled 1
    ElementSet u1;      // trace vertices labelled 1 in the first swap labeling
    ElementSet u2;

    bool admissible(const ElementSet& state) const {
        if ((state & (support - trace)) != context) return false;
        const auto on_trace = state & trace;
        return on_trace == u1 || on_trace == u2;
    }

    ElementSet apply(const ElementSet& state) const {
        if (!admissible(state)) throw Error(Errc::NotValid, "move " + name + " is not admissible here");
        const auto on_trace = state & trace;
        return (state - trace) | (on_trace == u1 ? u2 : u1);
    }
};

inline bool moves_commute(const Move& a, const Move& b) {
    return !a.trace.intersects(b.support) && !b.trace.intersects(a.support);
}

struct ReconfigurableSystem {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Move> moves;
    std::vector<ElementSet> states; // graded order

    std::size_t state_index(const ElementSet& s) const {
        auto it = std::lower_bound(states.begin(), states.end(), s, GradedLess{});
        if (it == states.end() || *it != s) throw Error(Errc::NotClosed, "labeling is not a state of the system");
        return static_cast<std::size_t>(it - states.begin());
    }

    /// Throws NotClosed unless every admissible move keeps states inside the set.
    void check_closed() const {
        for (const auto& s : states)
            for (const auto& m : moves)
                if (m.admissible(s)) {
                    const auto t = m.apply(s);
                    if (!std::binary_search(states.begin(), states.end(), t, GradedLess{}))
                        throw Error(Errc::NotClosed, "move " + m.name + " leaves the state set");
                }
    }
};

/// The virus realization: one move per element, flipping that element when
/// its lower covers are occupied and its upper covers and minimal
/// inconsistent partners are free. States are the consistent order ideals.
inline ReconfigurableSystem pip_to_reconfigurable(const Pip& p, std::size_t guard = kDefaultIdealGuard) {
    ReconfigurableSystem sys;
    const std::size_t n = p.size();
    sys.vertices = p.names();
    sys.edges = p.cover_pairs();
    std::vector<ElementSet> partners(n, ElementSet(n));
    for (auto [a, b] : p.minimal_inconsistent_pairs()) {
        sys.edges.emplace_back(a, b);
        partners[a].set(b);
        partners[b].set(a);
    }
    std::sort(sys.edges.begin(), sys.edges.end());

    for (std::size_t e = 0; e < n; ++e) {
        Move m;
        m.name = p.name(e);
        m.trace = ElementSet(n);
        m.trace.set(e);
        m.context = p.lower_covers(e);
        m.support = m.trace | m.context | p.upper_covers(e) | partners[e];
        m.u1 = ElementSet(n);
        m.u2 = m.trace;
        sys.moves.push_back(std::move(m));
    }
    for (const auto& ideal : enumerate_consistent_ideals(p, guard)) sys.states.push_back(ideal.members());
    sys.check_closed();
    return sys;
}

/// Abstract cube complex: cubes are sorted lists of state indices.
struct StateComplex {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> cubes; // sorted, deduplicated
    std::vector<std::size_t> dimensions;         // parallel to cubes

    std::vector<std::size_t> dimension_counts() const {
        std::vector<std::size_t> out;
        for (auto d : dimensions) {
            if (out.size() <= d) out.resize(d + 1, 0);
            ++out[d];
        }
        return out;
    }
};

constexpr std::size_t kDefaultStateGuard = 100000;

/// One cube per state and set of pairwise commuting moves admissible there.
inline StateComplex state_complex(const ReconfigurableSystem& sys, std::size_t guard = kDefaultStateGuard) {
    if (sys.states.size() > guard)
        throw Error(Errc::TooLarge, std::to_string(sys.states.size()) + " states exceed the guard of " +
                                        std::to_string(guard));
    std::set<std::vector<std::size_t>> seen;
    StateComplex out;
    out.vertex_count = sys.states.size();

    for (const auto& s : sys.states) {
        std::vector<std::size_t> ok;
        for (std::size_t m = 0; m < sys.moves.size(); ++m)
            if (sys.moves[m].admissible(s)) ok.push_back(m);

        std::vector<std::size_t> chosen;
        auto grow = [&](auto&& self, std::size_t from) -> void {
            std::vector<ElementSet> corners{s};
            for (auto m : chosen) {
                const std::size_t half = corners.size();
                for (std::size_t c = 0; c < half; ++c) corners.push_back(sys.moves[m].apply(corners[c]));
            }
            std::vector<std::size_t> ids;
            for (const auto& c : corners) ids.push_back(sys.state_index(c));
            std::sort(ids.begin(), ids.end());
            if (seen.insert(ids).second) {
                out.cubes.push_back(std::move(ids));
                out.dimensions.push_back(chosen.size());
            }
            for (std::size_t k = from; k < ok.size(); ++k) {
                const auto& cand = sys.moves[ok[k]];
                bool fits = true;
                for (auto m : chosen) fits = fits && moves_commute(sys.moves[m], cand);
                if (!fits) continue;
                chosen.push_back(ok[k]);
                self(self, k + 1);
                chosen.pop_back();
            }
        };
        grow(grow, 0);
    }

    std::vector<std::size_t> order(out.cubes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (out.dimensions[a] != out.dimensions[b]) return out.dimensions[a] < out.dimensions[b];
        return out.cubes[a] < out.cubes[b];
    });
    StateComplex sorted;
    sorted.vertex_count = out.vertex_count;
    for (auto i : order) {
        sorted.cubes.push_back(std::move(out.cubes[i]));
        sorted.dimensions.push_back(out.dimensions[i]);
    }
    return sorted;
}

} // namespace catzero

#endif // CATZERO_RECSYS_HPP
