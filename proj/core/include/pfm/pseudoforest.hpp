#pragma once

#include <map>
#include <vector>

#include "pfm/graph.hpp"

namespace pfm {

// Rooted tree over a subset of graph vertices. Children are kept in
// ascending id order so traversals are deterministic.
struct rooted_tree {
    vertex root = -1;
    std::map<vertex, vertex> parent;                // root has no entry
    std::map<vertex, std::vector<vertex>> children; // one entry per vertex
    std::vector<vertex> bfs_order;                  // root first

    std::size_t size() const { return children.size(); }
    bool contains(vertex v) const { return children.count(v) != 0; }
};

// Orients a tree graph away from the chosen root. Rejects non-trees.
rooted_tree build_rooted_tree(const graph& t, vertex root);

struct attached_tree {
    vertex attachment = -1; // the cycle vertex
    vertex root = -1;       // the unique tree vertex adjacent to the cycle
    rooted_tree tree;
};

struct pseudotree_decomposition {
    std::vector<vertex> cycle;           // canonical order, never empty here
    std::vector<attached_tree> attached; // sorted by (attachment, root)
};

// Every connected component has at most one cycle, i.e. |E(P)| <= |V(P)|.
bool is_pseudoforest(const graph& g);
// Every connected component is a tree.
bool is_forest(const graph& g);
// No two cycles share a vertex.
bool is_mock_forest(const graph& g);

// Canonical cycle of a connected pseudotree: starts at the smallest cycle
// vertex, oriented toward its smaller cycle neighbor. Empty for trees.
std::vector<vertex> find_unique_cycle(const graph& p);

// Cycle plus attached rooted trees of a connected pseudotree with a cycle.
pseudotree_decomposition decompose_pseudotree(const graph& p);

// One canonical vertex per cycle of a pseudoforest; removing them leaves
// a forest.
vertex_set select_cycle_breakers(const graph& f);

} // namespace pfm
