#pragma once

#include <cstddef>
#include <cstdint>

#include "pfm/graph.hpp"

namespace pfm {

struct oracle_budget {
    std::size_t max_vertices = 25;
    std::uint64_t max_nodes = 10'000'000;
};

// Exact independence number by branch and bound. Deterministic; throws
// budget_error instead of ever returning a wrong answer.
int alpha_exact(const graph& g, oracle_budget budget = {});

// A concrete maximum independent set, matching alpha_exact.
vertex_set max_independent_set(const graph& g, oracle_budget budget = {});

// True iff alpha(G) >= k; stops searching once k is reached.
bool has_independent_set(const graph& g, int k, oracle_budget budget = {});

} // namespace pfm
