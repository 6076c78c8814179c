#ifndef CATZERO_VERTEX_COVER_HPP
#define CATZERO_VERTEX_COVER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace catzero {

/// Bipartite graph with weighted vertices; left vertices 0..left-1 and
/// right vertices 0..right-1, edges (left, right).
struct WeightedBipartiteGraph {
    std::vector<double> left_weight;
    std::vector<double> right_weight;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct VertexCover {
    std::vector<char> left;  // 1 = in cover
    std::vector<char> right;
    double weight = 0.0;
};

namespace detail {

class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n) : adj_(n) {}

    void add_edge(std::size_t u, std::size_t v, double cap) {
        adj_[u].push_back(edges_.size());
        edges_.push_back({v, cap});
        adj_[v].push_back(edges_.size());
        edges_.push_back({u, 0.0});
    }

    /// Edmonds-Karp; returns the flow value.
    double max_flow(std::size_t s, std::size_t t) {
        double total = 0.0;
        while (true) {
            std::vector<std::size_t> via(adj_.size(), kNone);
            std::queue<std::size_t> bfs;
            bfs.push(s);
            std::vector<char> seen(adj_.size(), 0);
            seen[s] = 1;
            while (!bfs.empty() && !seen[t]) {
                const auto u = bfs.front();
                bfs.pop();
                for (auto e : adj_[u]) {
                    const auto& edge = edges_[e];
                    if (!seen[edge.to] && edge.cap > kResidualFloor) {
                        seen[edge.to] = 1;
                        via[edge.to] = e;
                        bfs.push(edge.to);
                    }
                }
            }
            if (!seen[t]) return total;
            double push = std::numeric_limits<double>::infinity();
            for (auto v = t; v != s; v = edges_[via[v] ^ 1].to) push = std::min(push, edges_[via[v]].cap);
            for (auto v = t; v != s; v = edges_[via[v] ^ 1].to) {
                edges_[via[v]].cap -= push;
                edges_[via[v] ^ 1].cap += push;
            }
            total += push;
        }
    }

    /// Vertices reachable from s in the residual network.
    std::vector<char> source_side(std::size_t s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (auto e : adj_[u])
                if (!seen[edges_[e].to] && edges_[e].cap > kResidualFloor) {
                    seen[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
        }
        return seen;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    static constexpr double kResidualFloor = 1e-15;
    struct Edge {
        std::size_t to;
        double cap;
    };
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Edge> edges_;
};

// forced: 0 = free, 1 = must be in the cover, 2 = must stay out.
inline VertexCover cover_with_constraints(const WeightedBipartiteGraph& g, const std::vector<int>& forced_left,
                                          const std::vector<int>& forced_right) {
    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t nl = g.left_weight.size();
    const std::size_t nr = g.right_weight.size();
    const std::size_t s = nl + nr;
    const std::size_t t = s + 1;
    FlowNetwork net(nl + nr + 2);
    VertexCover cover;
    cover.left.assign(nl, 0);
    cover.right.assign(nr, 0);
    double fixed = 0.0;
    for (std::size_t i = 0; i < nl; ++i) {
        if (forced_left[i] == 1) {
            fixed += g.left_weight[i];
            cover.left[i] = 1;
        } else {
            net.add_edge(s, i, forced_left[i] == 2 ? inf : g.left_weight[i]);
        }
    }
    for (std::size_t j = 0; j < nr; ++j) {
        if (forced_right[j] == 1) {
            fixed += g.right_weight[j];
            cover.right[j] = 1;
        } else {
            net.add_edge(nl + j, t, forced_right[j] == 2 ? inf : g.right_weight[j]);
        }
    }
    for (auto [i, j] : g.edges)
        if (forced_left[i] != 1 && forced_right[j] != 1) net.add_edge(i, nl + j, inf);

    const double flow = net.max_flow(s, t);
    cover.weight = fixed + flow;
    const auto reach = net.source_side(s);
    for (std::size_t i = 0; i < nl; ++i)
        if (forced_left[i] != 1 && !reach[i]) cover.left[i] = 1;
    for (std::size_t j = 0; j < nr; ++j)
        if (forced_right[j] != 1 && reach[nl + j]) cover.right[j] = 1;
    return cover;
}

} // namespace detail

/// Minimum-weight vertex cover of a bipartite graph through max-flow/min-cut
/// (Konig duality). Ties are broken deterministically: vertices are decided
/// in `order` (a permutation of left then right ids, as {side, id}), each
/// taken into the cover whenever that keeps the optimum. Redundant cover
/// vertices are then dropped, so the complement is a maximal independent set.
inline VertexCover minimum_weight_vertex_cover(const WeightedBipartiteGraph& g,
                                               const std::vector<std::pair<int, std::size_t>>& order,
                                               double tie_tol = 1e-12) {
    const std::size_t nl = g.left_weight.size();
    const std::size_t nr = g.right_weight.size();
    std::vector<int> fl(nl, 0);
    std::vector<int> fr(nr, 0);
    const double best = detail::cover_with_constraints(g, fl, fr).weight;
    for (auto [side, id] : order) {
        auto& slot = side == 0 ? fl[id] : fr[id];
        slot = 1;
        const double w = detail::cover_with_constraints(g, fl, fr).weight;
        if (w > best + tie_tol * (1.0 + best)) slot = 2;
    }
    auto cover = detail::cover_with_constraints(g, fl, fr);

    std::vector<std::vector<std::size_t>> left_adj(nl), right_adj(nr);
    for (auto [i, j] : g.edges) {
        left_adj[i].push_back(j);
        right_adj[j].push_back(i);
    }
    for (auto [side, id] : order) {
        if (side == 0 && cover.left[id]) {
            const bool redundant = std::all_of(left_adj[id].begin(), left_adj[id].end(),
                                               [&](std::size_t j) { return cover.right[j] != 0; });
            if (redundant) cover.left[id] = 0;
        } else if (side == 1 && cover.right[id]) {
            const bool redundant = std::all_of(right_adj[id].begin(), right_adj[id].end(),
                                               [&](std::size_t i) { return cover.left[i] != 0; });
            if (redundant) cover.right[id] = 0;
        }
    }
    cover.weight = 0.0;
    for (std::size_t i = 0; i < nl; ++i)
        if (cover.left[i]) cover.weight += g.left_weight[i];
    for (std::size_t j = 0; j < nr; ++j)
        if (cover.right[j]) cover.weight += g.right_weight[j];
    return cover;
}

} // namespace catzero

#endif // CATZERO_VERTEX_COVER_HPP
