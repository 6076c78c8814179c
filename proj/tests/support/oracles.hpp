#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "catzero/pip.hpp"

// Independent reference computations from raw relations, by exhaustive
// search over subsets. Only for small posets.
namespace testing_support {

struct RawRelations {
    std::size_t n = 0;
    std::vector<std::vector<char>> less; // less[a][b]: a < b
    std::vector<std::vector<char>> bad;  // inconsistent, upward closed
};

/// Closure by repeated DFS from each element over the raw cover list.
inline RawRelations raw_relations(const catzero::Pip& p) {
    const auto raw = p.to_raw();
    RawRelations r;
    r.n = p.size();
    r.less.assign(r.n, std::vector<char>(r.n, 0));
    r.bad.assign(r.n, std::vector<char>(r.n, 0));
    std::vector<std::vector<std::size_t>> up(r.n);
    for (const auto& [a, b] : raw.covers) up[p.index(a)].push_back(p.index(b));
    for (std::size_t s = 0; s < r.n; ++s) {
        std::vector<std::size_t> stack(up[s].begin(), up[s].end());
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            if (r.less[s][v]) continue;
            r.less[s][v] = 1;
            for (auto w : up[v]) stack.push_back(w);
        }
    }
    for (const auto& [a, b] : raw.inconsistent) {
        const auto ia = p.index(a);
        const auto ib = p.index(b);
        for (std::size_t x = 0; x < r.n; ++x)
            for (std::size_t y = 0; y < r.n; ++y)
                if ((x == ia || r.less[ia][x]) && (y == ib || r.less[ib][y])) r.bad[x][y] = r.bad[y][x] = 1;
    }
    return r;
}

inline bool subset_is_consistent_ideal(const RawRelations& r, std::uint64_t mask) {
    for (std::size_t b = 0; b < r.n; ++b) {
        if (!(mask >> b & 1)) continue;
        for (std::size_t a = 0; a < r.n; ++a) {
            if (r.less[a][b] && !(mask >> a & 1)) return false;
            if ((mask >> a & 1) && r.bad[a][b]) return false;
        }
    }
    return true;
}

inline std::size_t count_consistent_ideals_bruteforce(const catzero::Pip& p) {
    const auto r = raw_relations(p);
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.n); ++mask)
        if (subset_is_consistent_ideal(r, mask)) ++count;
    return count;
}

/// Largest antichain by subset search (Dilworth: equals the minimum chain count).
inline std::size_t width_bruteforce(const catzero::Pip& p) {
    const auto r = raw_relations(p);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.n); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < r.n && ok; ++a)
            for (std::size_t b = 0; b < r.n && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && r.less[a][b]) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

/// Largest antichain with no inconsistent pair.
inline std::size_t max_consistent_antichain_bruteforce(const catzero::Pip& p) {
    const auto r = raw_relations(p);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.n); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < r.n && ok; ++a)
            for (std::size_t b = 0; b < r.n && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && (r.less[a][b] || r.bad[a][b])) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

/// Vertex sets of all cubes of X_P: for each consistent ideal I and each
/// subset M of max(I), the sets I minus subsets of M, as sorted masks.
inline std::vector<std::vector<std::uint64_t>> cube_vertex_masks_bruteforce(const catzero::Pip& p) {
    const auto r = raw_relations(p);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t ideal = 0; ideal < (std::uint64_t{1} << r.n); ++ideal) {
        if (!subset_is_consistent_ideal(r, ideal)) continue;
        std::uint64_t maxes = 0;
        for (std::size_t a = 0; a < r.n; ++a) {
            if (!(ideal >> a & 1)) continue;
            bool top = true;
            for (std::size_t b = 0; b < r.n; ++b)
                if ((ideal >> b & 1) && r.less[a][b]) top = false;
            if (top) maxes |= std::uint64_t{1} << a;
        }
        for (std::uint64_t m = maxes;; m = (m - 1) & maxes) {
            std::vector<std::uint64_t> verts;
            for (std::uint64_t s = m;; s = (s - 1) & m) {
                verts.push_back(ideal & ~s);
                if (s == 0) break;
            }
            std::sort(verts.begin(), verts.end());
            out.push_back(std::move(verts));
            if (m == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testing_support
