#pragma once

// Exhaustive reference computations for tests. Deliberately independent of
// the library's solvers: plain bitmask enumeration, nothing shared with
// the table DP or the branch-and-bound oracle.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pfm/graph.hpp"

namespace brute {

struct indexed {
    std::vector<pfm::vertex> ids;
    std::vector<std::uint32_t> adj; // over indices

    explicit indexed(const pfm::graph& g) {
        ids = g.vertex_list();
        if (ids.size() > 25) throw std::logic_error("brute force capped at 25 vertices");
        std::map<pfm::vertex, int> pos;
        for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
        adj.assign(ids.size(), 0);
        for (const auto& [u, v] : g.edge_list()) {
            adj[pos[u]] |= 1u << pos[v];
            adj[pos[v]] |= 1u << pos[u];
        }
    }
};

inline bool independent(const indexed& ix, std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1) {
        int v = __builtin_ctz(m);
        if (ix.adj[v] & mask) return false;
    }
    return true;
}

inline int alpha(const pfm::graph& g) {
    indexed ix(g);
    const int n = static_cast<int>(ix.ids.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (independent(ix, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

inline int alpha_avoiding(const pfm::graph& g, const pfm::vertex_set& z) {
    return alpha(pfm::induced_delete(g, z));
}

inline int min_vertex_cover(const pfm::graph& g) {
    indexed ix(g);
    const int n = static_cast<int>(ix.ids.size());
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool covers = true;
        for (std::size_t i = 0; i < ix.ids.size() && covers; ++i) {
            std::uint32_t uncovered = ix.adj[i] & ~mask;
            if (!((mask >> i) & 1) && uncovered) covers = false;
        }
        if (covers) best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

// Smallest vertex set whose removal leaves a pseudoforest.
inline int min_modulator_size(const pfm::graph& g, bool (*is_target)(const pfm::graph&)) {
    indexed ix(g);
    const int n = static_cast<int>(ix.ids.size());
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        pfm::vertex_set removed;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) removed.insert(ix.ids[i]);
        if (is_target(pfm::induced_delete(g, removed))) best = size;
    }
    return best;
}

inline pfm::graph petersen() {
    pfm::graph g = pfm::graph::with_vertices(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);           // spokes
    }
    return g;
}

} // namespace brute
