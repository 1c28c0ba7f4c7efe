#include "pfm/pseudoforest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

namespace {

std::size_t count_edges_within(const graph& g, const vertex_set& comp) {
    std::size_t twice = 0;
    for (vertex v : comp) twice += g.neighbors(v).size();
    return twice / 2;
}

void require_connected_pseudotree(const graph& p) {
    if (p.empty()) throw std::invalid_argument("expected a connected pseudotree, got the empty graph");
    auto comps = connected_components(p);
    if (comps.size() != 1) throw std::invalid_argument("expected a connected pseudotree, graph is disconnected");
    if (p.num_edges() > p.num_vertices())
        throw std::invalid_argument("expected a pseudotree, component has more than one cycle");
}

} // namespace

rooted_tree build_rooted_tree(const graph& t, vertex root) {
    if (!t.has_vertex(root)) throw std::invalid_argument("root is not in the tree");
    rooted_tree rt;
    rt.root = root;
    rt.children[root];
    rt.bfs_order.push_back(root);
    std::deque<vertex> queue{root};
    while (!queue.empty()) {
        vertex v = queue.front();
        queue.pop_front();
        for (vertex u : t.neighbors(v)) {
            auto pit = rt.parent.find(v);
            if (pit != rt.parent.end() && pit->second == u) continue;
            if (rt.children.count(u))
                throw std::invalid_argument("graph is not a tree (cycle reached from root)");
            rt.parent[u] = v;
            rt.children[u];
            rt.children[v].push_back(u); // neighbors iterate ascending
            rt.bfs_order.push_back(u);
            queue.push_back(u);
        }
    }
    if (rt.bfs_order.size() != t.num_vertices())
        throw std::invalid_argument("graph is not a tree (not connected)");
    return rt;
}

bool is_pseudoforest(const graph& g) {
    for (const auto& comp : connected_components(g))
        if (count_edges_within(g, comp) > comp.size()) return false;
    return true;
}

bool is_forest(const graph& g) {
    for (const auto& comp : connected_components(g))
        if (count_edges_within(g, comp) != comp.size() - 1) return false;
    return true;
}

bool is_mock_forest(const graph& g) {
    std::map<vertex, int> cycle_blocks_at;
    for (const auto& block : biconnected_blocks(g)) {
        vertex_set vs;
        for (const auto& [u, v] : block) {
            vs.insert(u);
            vs.insert(v);
        }
        if (block.size() > vs.size()) return false; // denser than a single cycle
        if (block.size() == vs.size()) {            // this block is a cycle
            for (vertex v : vs)
                if (++cycle_blocks_at[v] > 1) return false;
        }
    }
    return true;
}

std::vector<vertex> find_unique_cycle(const graph& p) {
    require_connected_pseudotree(p);
    if (p.num_edges() < p.num_vertices()) return {}; // a tree

    // The 2-core of a pseudotree is exactly its cycle.
    std::map<vertex, vertex_set> adj(p.adjacency().begin(), p.adjacency().end());
    std::deque<vertex> strip;
    for (const auto& [v, ns] : adj)
        if (ns.size() <= 1) strip.push_back(v);
    while (!strip.empty()) {
        vertex v = strip.front();
        strip.pop_front();
        auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (vertex u : it->second) {
            auto& uns = adj.at(u);
            uns.erase(v);
            if (uns.size() == 1) strip.push_back(u);
        }
        adj.erase(it);
    }

    vertex start = adj.begin()->first;
    vertex second = *adj.at(start).begin();
    std::vector<vertex> cycle{start, second};
    vertex prev = start, cur = second;
    while (true) {
        vertex next = -1;
        for (vertex u : adj.at(cur))
            if (u != prev) {
                next = u;
                break;
            }
        if (next == start) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
    }
    return cycle;
}

pseudotree_decomposition decompose_pseudotree(const graph& p) {
    auto cycle = find_unique_cycle(p);
    if (cycle.empty())
        throw std::invalid_argument("pseudotree has no cycle; handle trees separately");

    pseudotree_decomposition dec;
    dec.cycle = cycle;
    vertex_set cycle_set(cycle.begin(), cycle.end());
    graph rest = induced_delete(p, cycle_set);

    for (const auto& comp : connected_components(rest)) {
        vertex tree_root = -1, attachment = -1;
        std::size_t joins = 0;
        for (vertex v : comp)
            for (vertex u : p.neighbors(v))
                if (cycle_set.count(u)) {
                    ++joins;
                    tree_root = v;
                    attachment = u;
                }
        if (joins != 1)
            throw invariant_violation("attached tree must meet the cycle in exactly one edge");
        attached_tree at;
        at.attachment = attachment;
        at.root = tree_root;
        at.tree = build_rooted_tree(induced_subgraph(rest, comp), tree_root);
        dec.attached.push_back(std::move(at));
    }
    std::sort(dec.attached.begin(), dec.attached.end(),
              [](const attached_tree& a, const attached_tree& b) {
                  return std::tie(a.attachment, a.root) < std::tie(b.attachment, b.root);
              });
    return dec;
}

vertex_set select_cycle_breakers(const graph& f) {
    if (!is_pseudoforest(f)) throw std::invalid_argument("graph is not a pseudoforest");
    vertex_set breakers;
    for (const auto& comp : connected_components(f)) {
        if (count_edges_within(f, comp) < comp.size()) continue; // tree component
        auto cycle = find_unique_cycle(induced_subgraph(f, comp));
        breakers.insert(cycle.front()); // canonical: smallest cycle vertex
    }
    return breakers;
}

} // namespace pfm
