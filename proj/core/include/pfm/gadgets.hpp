#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfm/graph.hpp"

namespace pfm {

struct cnf_formula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses; // literals, signed and nonzero
};

// DIMACS CNF: "p cnf n m" header, clauses terminated by 0. Empty clauses
// and out-of-range literals are rejected.
cnf_formula parse_dimacs_cnf(std::istream& in);

// A "path" of k triangles T_i = {l_i, r_i, s_i} with end vertices r_0 and
// l_{k+1}: r_i is joined to l_{i+1} for i in {0}..k. 3k+2 vertices, 4k+1
// edges; ids run r_0, l_1, r_1, s_1, ..., l_{k+1} from id_base.
struct clause_gadget_graph {
    graph g;
    vertex r0 = -1;
    vertex l_end = -1;
    std::vector<vertex> left, right, spike; // index i-1 holds l_i / r_i / s_i
};
clause_gadget_graph clause_gadget(int k, vertex id_base = 0);

// CNF compiled to Independent Set with a mock-forest modulator: one
// t_i/f_i edge per variable, one clause gadget per clause, spike s_r wired
// to f_i when the r-th literal is x_i and to t_i when it is the negation.
struct gadget_instance {
    graph g;
    vertex_set modulator; // all t_i and f_i; size 2n
    int k = 0;            // n + sum over clauses of (h(j) + 2)
    std::map<vertex, std::string> labels;
    std::vector<vertex> t, f;                    // per variable
    std::vector<std::vector<vertex>> clause_spikes; // per clause, literal order
};
gadget_instance cnf_to_ismfm(const cnf_formula& formula);

// One "label: <vertex> <role>" line per vertex, 1-based ids.
void write_labels(std::ostream& out, const gadget_instance& inst);

} // namespace pfm
