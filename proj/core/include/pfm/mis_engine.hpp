#pragma once

#include <array>
#include <optional>
#include <utility>

#include "pfm/pseudoforest.hpp"

namespace pfm {

// Per-subtree independence scores. inc is empty when the vertex is
// forbidden, standing in for "minus infinity" without overflow-prone
// arithmetic in the sums.
struct alpha_table {
    struct entry {
        std::optional<int> inc; // best set of the subtree using the vertex
        int exc = 0;            // best set of the subtree avoiding the vertex
    };
    std::map<vertex, entry> scores;

    int alpha(vertex v) const;
    // True iff v lies in every maximum independent set of its subtree
    // minus the forbidden set.
    bool critical(vertex v) const;
};

// alpha(T - Z) together with the full table. Vertices of Z outside T are
// ignored. Runs bottom-up without recursion.
std::pair<int, alpha_table> alpha_tree(const rooted_tree& t, const vertex_set& z);

// alpha of a path (cyclic=false) or cycle (cyclic=true) given in order,
// after deleting the forbidden vertices. Cycles need at least 3 vertices.
int alpha_path_cycle(const std::vector<vertex>& seq, bool cyclic, const vertex_set& forbidden);

// alpha(P - Z) for a connected pseudotree P: trees go through the table,
// cyclic components mark attachment points of alpha-critical roots as
// forbidden and finish on the cycle.
int alpha_pseudotree(const graph& p, const vertex_set& z);

// Sum of alpha over the components of a pseudoforest.
int alpha_pseudoforest(const graph& f, const vertex_set& z);

// A concrete maximum independent set of F avoiding Z, of size exactly
// alpha_pseudoforest(F, Z). Ties prefer avoiding a vertex, so a root is
// only picked when it is alpha-critical.
vertex_set mis_pseudoforest_avoiding(const graph& f, const vertex_set& z);

// Conf_{F'}(X') = alpha(F') - alpha(F' - N_host(X')): the price paid in
// the pseudoforest part F' for committing X' to the independent set.
struct conflict_query {
    const graph& host;
    const graph& forest_part;
    const vertex_set& modulator_subset;
};
int conflicts(const conflict_query& q);
int conflicts(const graph& host, const graph& forest_part, const vertex_set& modulator_subset);

// If alpha(P) > alpha(P - Z), exhaustively finds up to three vertices of
// Z (possibly repeated) that already force the drop; returns nothing iff
// there is no drop. Witnesses with fewer distinct vertices are preferred.
std::optional<std::array<vertex, 3>> check_small_obstruction(const graph& p, const vertex_set& z);

} // namespace pfm
