#include "pfm/generators.hpp"

#include <algorithm>

namespace pfm::gen {

int uniform(rng& r, int lo, int hi) {
    if (lo >= hi) return lo;
    return lo + static_cast<int>(r() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(rng& r, double p) {
    return static_cast<double>(r() >> 11) * (1.0 / 9007199254740992.0) < p;
}

graph random_tree(rng& r, int n, int id_base) {
    graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(id_base + i);
    for (int i = 1; i < n; ++i) g.add_edge(id_base + i, id_base + uniform(r, 0, i - 1));
    return g;
}

graph random_pseudotree(rng& r, int n, bool with_cycle, int id_base) {
    if (!with_cycle || n < 3) return random_tree(r, n, id_base);
    int cycle_len = uniform(r, 3, n);
    graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(id_base + i);
    for (int i = 0; i < cycle_len; ++i)
        g.add_edge(id_base + i, id_base + (i + 1) % cycle_len);
    for (int i = cycle_len; i < n; ++i) g.add_edge(id_base + i, id_base + uniform(r, 0, i - 1));
    return g;
}

graph random_pseudoforest(rng& r, int n, int id_base) {
    graph g;
    int placed = 0;
    while (placed < n) {
        int size = std::min(n - placed, uniform(r, 1, 6));
        bool cyclic = size >= 3 && chance(r, 0.5);
        graph comp = random_pseudotree(r, size, cyclic, id_base + placed);
        for (const auto& [v, ns] : comp.adjacency()) g.add_vertex(v);
        for (const auto& [u, v] : comp.edge_list()) g.add_edge(u, v);
        placed += size;
    }
    return g;
}

vertex_set random_vertex_subset(rng& r, const graph& g, double p) {
    vertex_set out;
    for (const auto& [v, ns] : g.adjacency())
        if (chance(r, p)) out.insert(v);
    return out;
}

instance random_ispfm_instance(rng& r, int max_forest, int max_modulator) {
    int nf = uniform(r, 0, max_forest);
    int nx = uniform(r, 0, max_modulator);
    graph g = random_pseudoforest(r, nf);
    vertex_set modulator;
    for (int i = 0; i < nx; ++i) {
        g.add_vertex(nf + i);
        modulator.insert(nf + i);
    }
    double p_xf = 0.1 + 0.8 * (static_cast<double>(uniform(r, 0, 100)) / 100.0);
    double p_xx = 0.4 * (static_cast<double>(uniform(r, 0, 100)) / 100.0);
    for (vertex x : modulator)
        for (int v = 0; v < nf; ++v)
            if (chance(r, p_xf)) g.add_edge(x, v);
    std::vector<vertex> xs(modulator.begin(), modulator.end());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (chance(r, p_xx)) g.add_edge(xs[i], xs[j]);
    int k = uniform(r, 0, static_cast<int>(g.num_vertices()));
    return make_instance(std::move(g), std::move(modulator), k);
}

} // namespace pfm::gen
