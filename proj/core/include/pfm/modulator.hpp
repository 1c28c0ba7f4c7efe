#pragma once

#include <cstddef>
#include <optional>

#include "pfm/graph.hpp"

namespace pfm {

enum class modulator_method { exact, greedy, user_supplied };

struct modulator_result {
    vertex_set modulator;
    modulator_method method = modulator_method::user_supplied;
    bool certified_minimum = false;
};

// True iff G - X is a pseudoforest. X must be a subset of V(G).
bool verify_modulator(const graph& g, const vertex_set& x);

// Smallest pseudoforest modulator of size at most max_size, or nothing if
// the budget is too small. Branches on a small subgraph witnessing two
// cycles in one component, which every modulator must hit.
std::optional<modulator_result> find_modulator_exact(const graph& g, std::size_t max_size);

// Repeatedly deletes the highest-degree vertex of a component that still
// violates |E| <= |V|. Always succeeds; no minimality guarantee.
modulator_result find_modulator_greedy(const graph& g);

} // namespace pfm
