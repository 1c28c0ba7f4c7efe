#include "pfm/modulator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pfm/errors.hpp"
#include "pfm/pseudoforest.hpp"

namespace pfm {

bool verify_modulator(const graph& g, const vertex_set& x) {
    for (vertex v : x)
        if (!g.has_vertex(v))
            throw std::invalid_argument("modulator vertex " + std::to_string(v) +
                                        " is not in the graph");
    return is_pseudoforest(induced_delete(g, x));
}

namespace {

std::size_t edges_within(const graph& g, const vertex_set& comp) {
    std::size_t twice = 0;
    for (vertex v : comp) twice += g.neighbors(v).size();
    return twice / 2;
}

// A component with |E| > |V| restricted to its 2-core: connected, minimum
// degree >= 2 and still more edges than vertices.
graph two_core(const graph& g, const vertex_set& comp) {
    graph core = induced_subgraph(g, comp);
    std::deque<vertex> strip;
    for (const auto& [v, ns] : core.adjacency())
        if (ns.size() <= 1) strip.push_back(v);
    vertex_set gone;
    while (!strip.empty()) {
        vertex v = strip.front();
        strip.pop_front();
        if (gone.count(v)) continue;
        gone.insert(v);
        for (vertex u : core.neighbors(v))
            if (!gone.count(u) && core.neighbors(u).size() - 1 <= 1) strip.push_back(u);
        core = induced_delete(core, {v});
    }
    return core;
}

std::vector<vertex> first_cycle(const graph& g) {
    // DFS from the smallest vertex; the first back edge closes a cycle.
    vertex start = g.adjacency().begin()->first;
    std::map<vertex, vertex> parent;
    std::vector<vertex> stack{start};
    parent[start] = -1;
    while (!stack.empty()) {
        vertex v = stack.back();
        stack.pop_back();
        for (vertex u : g.neighbors(v)) {
            if (u == parent.at(v)) continue;
            if (parent.count(u)) {
                // Close the cycle v .. root-ward .. u.
                std::vector<vertex> pv{v}, pu{u};
                vertex_set seen_v{v};
                for (vertex w = parent.at(v); w >= 0; w = parent.at(w)) {
                    pv.push_back(w);
                    seen_v.insert(w);
                }
                vertex meet = u;
                while (!seen_v.count(meet)) {
                    meet = parent.at(meet);
                    pu.push_back(meet);
                }
                std::vector<vertex> cycle;
                for (vertex w : pv) {
                    cycle.push_back(w);
                    if (w == meet) break;
                }
                pu.pop_back(); // meet already listed
                cycle.insert(cycle.end(), pu.rbegin(), pu.rend());
                return cycle;
            }
            parent[u] = v;
            stack.push_back(u);
        }
    }
    throw invariant_violation("component claimed to contain a cycle has none");
}

// Vertices of a connected subgraph containing two independent cycles.
// Every pseudoforest modulator must delete at least one of them.
vertex_set bicyclic_witness(const graph& g, const vertex_set& comp) {
    graph core = two_core(g, comp);
    auto cycle = first_cycle(core);
    vertex_set witness(cycle.begin(), cycle.end());

    // BFS from the cycle through the remaining edges. We stop as soon as a
    // walk returns to the cycle (an ear) or meets another walk (giving a
    // second cycle, possibly joined to the first by a path).
    std::set<std::pair<vertex, vertex>> cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        cycle_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::map<vertex, vertex> origin; // BFS tree parents; cycle vertices map to -1
    std::deque<vertex> queue;
    for (vertex c : cycle) {
        origin[c] = -1;
        queue.push_back(c);
    }
    auto trace = [&](vertex v) {
        std::vector<vertex> path;
        for (vertex w = v; w >= 0; w = origin.at(w)) path.push_back(w);
        return path;
    };
    while (!queue.empty()) {
        vertex v = queue.front();
        queue.pop_front();
        for (vertex u : core.neighbors(v)) {
            if (cycle_edges.count({std::min(u, v), std::max(u, v)})) continue;
            if (origin.at(v) == u) continue; // the BFS tree edge back up
            auto it = origin.find(u);
            if (it == origin.end()) {
                origin[u] = v;
                queue.push_back(u);
                continue;
            }
            // Second independent cycle found through edge v-u.
            for (vertex w : trace(v)) witness.insert(w);
            for (vertex w : trace(u)) witness.insert(w);
            return witness;
        }
    }
    throw invariant_violation("2-core with |E| > |V| must contain a second cycle");
}

std::optional<vertex_set> search(const graph& g, std::size_t budget) {
    vertex_set violating;
    for (const auto& comp : connected_components(g)) {
        if (edges_within(g, comp) > comp.size()) {
            violating = comp;
            break;
        }
    }
    if (violating.empty()) return vertex_set{};
    if (budget == 0) return std::nullopt;
    for (vertex v : bicyclic_witness(g, violating)) {
        auto sub = search(induced_delete(g, {v}), budget - 1);
        if (sub) {
            sub->insert(v);
            return sub;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<modulator_result> find_modulator_exact(const graph& g, std::size_t max_size) {
    for (std::size_t size = 0; size <= max_size; ++size) {
        auto found = search(g, size);
        if (found)
            return modulator_result{std::move(*found), modulator_method::exact, true};
    }
    return std::nullopt;
}

modulator_result find_modulator_greedy(const graph& g) {
    vertex_set x;
    graph cur = g;
    while (true) {
        vertex pick = -1;
        std::size_t pick_deg = 0;
        for (const auto& comp : connected_components(cur)) {
            if (edges_within(cur, comp) <= comp.size()) continue;
            for (vertex v : comp) {
                std::size_t d = cur.degree(v);
                if (pick < 0 || d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
        }
        if (pick < 0) break;
        x.insert(pick);
        cur = induced_delete(cur, {pick});
    }
    return modulator_result{std::move(x), modulator_method::greedy, false};
}

} // namespace pfm
