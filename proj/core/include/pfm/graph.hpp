#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace pfm {

using vertex = int;
using vertex_set = std::set<vertex>;

// Simple undirected graph over non-negative integer vertex ids. Ids are
// stable: deleting vertices never renames survivors, and the id space may
// have holes. All iteration is in ascending id order, so every operation
// built on top of this type is deterministic.
class graph {
public:
    graph() = default;
    static graph with_vertices(int n); // vertices 0..n-1, no edges

    void add_vertex(vertex v);
    void add_edge(vertex u, vertex v);

    bool has_vertex(vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(vertex u, vertex v) const;

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool empty() const { return adj_.empty(); }

    const vertex_set& neighbors(vertex v) const;
    std::size_t degree(vertex v) const { return neighbors(v).size(); }

    const std::map<vertex, vertex_set>& adjacency() const { return adj_; }
    std::vector<vertex> vertex_list() const;
    vertex_set vertex_ids() const;
    std::vector<std::pair<vertex, vertex>> edge_list() const; // u < v, sorted
    vertex max_vertex_id() const;                             // -1 when empty

    bool operator==(const graph&) const = default;

private:
    std::map<vertex, vertex_set> adj_;
    std::size_t num_edges_ = 0;
};

// N(S): all neighbors of S outside S. Every member of s must be a vertex of g.
vertex_set neighborhood(const graph& g, const vertex_set& s);
// N[S] = N(S) plus S itself.
vertex_set closed_neighborhood(const graph& g, const vertex_set& s);

// G - S. Ids in S that are not present in g are ignored.
graph induced_delete(const graph& g, const vertex_set& s);
// G[keep intersected with V(G)].
graph induced_subgraph(const graph& g, const vertex_set& keep);

// Partition of V(G) into maximal connected sets, ordered by smallest member.
std::vector<vertex_set> connected_components(const graph& g);

// Biconnected components as edge lists (bridges are single-edge blocks).
std::vector<std::vector<std::pair<vertex, vertex>>> biconnected_blocks(const graph& g);

// DIMACS edge format. External ids are 1-based; internally ids start at 0.
// The writer adds a "c nodes ..." comment when the vertex set is not the
// dense range 1..n, so reduced graphs round-trip with identical ids.
graph read_dimacs_graph(std::istream& in);
void write_dimacs_graph(std::ostream& out, const graph& g);

} // namespace pfm
