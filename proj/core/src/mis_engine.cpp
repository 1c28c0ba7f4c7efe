#include "pfm/mis_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

int alpha_table::alpha(vertex v) const {
    const auto& e = scores.at(v);
    return e.inc ? std::max(*e.inc, e.exc) : e.exc;
}

bool alpha_table::critical(vertex v) const {
    const auto& e = scores.at(v);
    return e.inc && *e.inc > e.exc;
}

std::pair<int, alpha_table> alpha_tree(const rooted_tree& t, const vertex_set& z) {
    alpha_table tab;
    // bfs_order lists parents before children; reversed it is a postorder.
    for (auto it = t.bfs_order.rbegin(); it != t.bfs_order.rend(); ++it) {
        vertex v = *it;
        alpha_table::entry e;
        int sum_exc = 0, sum_best = 0;
        for (vertex c : t.children.at(v)) {
            const auto& ce = tab.scores.at(c);
            sum_exc += ce.exc;
            sum_best += ce.inc ? std::max(*ce.inc, ce.exc) : ce.exc;
        }
        if (!z.count(v)) e.inc = 1 + sum_exc;
        e.exc = sum_best;
        tab.scores[v] = e;
    }
    return {tab.alpha(t.root), std::move(tab)};
}

namespace {

int alpha_of_run(int len) { return (len + 1) / 2; }

} // namespace

int alpha_path_cycle(const std::vector<vertex>& seq, bool cyclic, const vertex_set& forbidden) {
    const int n = static_cast<int>(seq.size());
    if (cyclic && n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");

    if (!cyclic) {
        int total = 0, run = 0;
        for (vertex v : seq) {
            if (forbidden.count(v)) {
                total += alpha_of_run(run);
                run = 0;
            } else {
                ++run;
            }
        }
        return total + alpha_of_run(run);
    }

    int first_forbidden = -1;
    for (int i = 0; i < n; ++i)
        if (forbidden.count(seq[i])) {
            first_forbidden = i;
            break;
        }
    if (first_forbidden < 0) return n / 2;

    // Deleting vertices splits the cycle into paths; walk once around
    // starting at a forbidden position.
    int total = 0, run = 0;
    for (int j = 0; j < n; ++j) {
        vertex v = seq[(first_forbidden + j) % n];
        if (forbidden.count(v)) {
            total += alpha_of_run(run);
            run = 0;
        } else {
            ++run;
        }
    }
    return total + alpha_of_run(run);
}

namespace {

void require_pseudotree(const graph& p) {
    if (p.empty()) throw std::invalid_argument("expected a connected pseudotree, got the empty graph");
    if (connected_components(p).size() != 1)
        throw std::invalid_argument("expected a connected pseudotree, graph is disconnected");
    if (p.num_edges() > p.num_vertices())
        throw std::invalid_argument("expected a pseudotree, component has more than one cycle");
}

vertex min_vertex(const graph& g) { return g.adjacency().begin()->first; }

int alpha_tree_graph(const graph& t, const vertex_set& z) {
    return alpha_tree(build_rooted_tree(t, min_vertex(t)), z).first;
}

int alpha_pseudotree_checked(const graph& p, const vertex_set& z) {
    if (p.num_edges() < p.num_vertices()) return alpha_tree_graph(p, z);

    auto dec = decompose_pseudotree(p);
    int total = 0;
    vertex_set cycle_forbidden;
    for (vertex c : dec.cycle)
        if (z.count(c)) cycle_forbidden.insert(c);
    for (const auto& at : dec.attached) {
        auto [a, tab] = alpha_tree(at.tree, z);
        total += a;
        if (tab.critical(at.root)) cycle_forbidden.insert(at.attachment);
    }
    return total + alpha_path_cycle(dec.cycle, true, cycle_forbidden);
}

// Walks the table: include a vertex exactly when it is still allowed and
// strictly better than avoiding it.
void extract_tree_set(const rooted_tree& t, const alpha_table& tab, bool exclude_root,
                      vertex_set& out) {
    std::vector<std::pair<vertex, bool>> stack{{t.root, exclude_root}};
    while (!stack.empty()) {
        auto [v, must_exclude] = stack.back();
        stack.pop_back();
        bool take = !must_exclude && tab.critical(v);
        if (take) out.insert(v);
        for (vertex c : t.children.at(v)) stack.emplace_back(c, take);
    }
}

// Picks alternating vertices of a path segment.
void pick_alternating(const std::vector<vertex>& run, vertex_set& out) {
    for (std::size_t i = 0; i < run.size(); i += 2) out.insert(run[i]);
}

void extract_cycle_set(const std::vector<vertex>& cycle, const vertex_set& forbidden,
                       vertex_set& out) {
    const int n = static_cast<int>(cycle.size());
    int first_forbidden = -1;
    for (int i = 0; i < n; ++i)
        if (forbidden.count(cycle[i])) {
            first_forbidden = i;
            break;
        }
    if (first_forbidden < 0) {
        for (int i = 0; i + 1 < n; i += 2) out.insert(cycle[i]);
        return;
    }
    std::vector<vertex> run;
    for (int j = 0; j < n; ++j) {
        vertex v = cycle[(first_forbidden + j) % n];
        if (forbidden.count(v)) {
            pick_alternating(run, out);
            run.clear();
        } else {
            run.push_back(v);
        }
    }
    pick_alternating(run, out);
}

} // namespace

int alpha_pseudotree(const graph& p, const vertex_set& z) {
    require_pseudotree(p);
    return alpha_pseudotree_checked(p, z);
}

int alpha_pseudoforest(const graph& f, const vertex_set& z) {
    int total = 0;
    for (const auto& comp : connected_components(f)) {
        graph part = induced_subgraph(f, comp);
        if (part.num_edges() > part.num_vertices())
            throw std::invalid_argument("graph is not a pseudoforest");
        total += alpha_pseudotree_checked(part, z);
    }
    return total;
}

vertex_set mis_pseudoforest_avoiding(const graph& f, const vertex_set& z) {
    vertex_set out;
    for (const auto& comp : connected_components(f)) {
        graph part = induced_subgraph(f, comp);
        if (part.num_edges() > part.num_vertices())
            throw std::invalid_argument("graph is not a pseudoforest");
        if (part.num_edges() < part.num_vertices()) {
            auto rt = build_rooted_tree(part, min_vertex(part));
            auto [a, tab] = alpha_tree(rt, z);
            extract_tree_set(rt, tab, false, out);
            continue;
        }
        auto dec = decompose_pseudotree(part);
        vertex_set cycle_forbidden;
        for (vertex c : dec.cycle)
            if (z.count(c)) cycle_forbidden.insert(c);
        for (const auto& at : dec.attached) {
            auto [a, tab] = alpha_tree(at.tree, z);
            bool root_critical = tab.critical(at.root);
            if (root_critical) cycle_forbidden.insert(at.attachment);
            extract_tree_set(at.tree, tab, !root_critical, out);
        }
        extract_cycle_set(dec.cycle, cycle_forbidden, out);
    }
    return out;
}

int conflicts(const conflict_query& q) {
    for (vertex x : q.modulator_subset)
        if (q.forest_part.has_vertex(x))
            throw std::invalid_argument("modulator subset overlaps the pseudoforest part");
    vertex_set blocked = neighborhood(q.host, q.modulator_subset);
    return alpha_pseudoforest(q.forest_part, {}) - alpha_pseudoforest(q.forest_part, blocked);
}

int conflicts(const graph& host, const graph& forest_part, const vertex_set& modulator_subset) {
    return conflicts(conflict_query{host, forest_part, modulator_subset});
}

std::optional<std::array<vertex, 3>> check_small_obstruction(const graph& p, const vertex_set& z) {
    require_pseudotree(p);
    int base = alpha_pseudotree_checked(p, {});
    if (alpha_pseudotree_checked(p, z) >= base) return std::nullopt;

    std::vector<vertex> zs;
    for (vertex v : z)
        if (p.has_vertex(v)) zs.push_back(v);

    auto drops = [&](const vertex_set& probe) {
        return alpha_pseudotree_checked(p, probe) < base;
    };
    // Fewer distinct vertices first: on trees a pair always suffices.
    for (vertex u : zs)
        if (drops({u})) return std::array<vertex, 3>{u, u, u};
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (drops({zs[i], zs[j]})) return std::array<vertex, 3>{zs[i], zs[i], zs[j]};
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            for (std::size_t l = j + 1; l < zs.size(); ++l)
                if (drops({zs[i], zs[j], zs[l]}))
                    return std::array<vertex, 3>{zs[i], zs[j], zs[l]};
    throw invariant_violation("alpha dropped under Z but no obstruction of size three exists");
}

} // namespace pfm
