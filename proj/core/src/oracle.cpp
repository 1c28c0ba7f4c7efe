#include "pfm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pfm/errors.hpp"

namespace pfm {

namespace {

// Word-vector bitset sized for the instance at hand.
struct bits {
    std::vector<std::uint64_t> w;

    explicit bits(int words = 0) : w(words, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    int lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    bool intersects(const bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool subset_of(const bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bits minus(const bits& o) const {
        bits r(static_cast<int>(w.size()));
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    bits intersect(const bits& o) const {
        bits r(static_cast<int>(w.size()));
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    void or_with(const bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
};

struct solver {
    int n = 0;
    int words = 0;
    std::vector<vertex> ids;   // index -> original vertex id
    std::vector<bits> adj;     // open neighborhoods
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    int goal = -1;             // stop early once a set of this size is found

    explicit solver(const graph& g, const oracle_budget& budget) {
        if (g.num_vertices() > budget.max_vertices)
            throw budget_error("graph exceeds the oracle vertex budget");
        max_nodes = budget.max_nodes;
        ids = g.vertex_list();
        n = static_cast<int>(ids.size());
        words = (n + 63) / 64;
        std::map<vertex, int> index;
        for (int i = 0; i < n; ++i) index[ids[i]] = i;
        adj.assign(n, bits(words));
        for (int i = 0; i < n; ++i)
            for (vertex u : g.neighbors(ids[i])) adj[i].set(index.at(u));
    }

    struct result {
        int size = 0;
        std::vector<int> members;
    };

    void tick() {
        if (++nodes > max_nodes) throw budget_error("oracle search-node budget exhausted");
    }

    // Greedy clique cover of the alive vertices; its size bounds alpha.
    int clique_cover_bound(const bits& alive) const {
        std::vector<bits> cliques;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            bool placed = false;
            for (auto& c : cliques)
                if (c.subset_of(adj[v])) {
                    c.set(v);
                    placed = true;
                    break;
                }
            if (!placed) {
                cliques.emplace_back(words);
                cliques.back().set(v);
            }
        }
        return static_cast<int>(cliques.size());
    }

    bits component_of(const bits& alive, int start) const {
        bits comp(words);
        comp.set(start);
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            bits fresh = adj[v].intersect(alive).minus(comp);
            for (int u = fresh.lowest(); u >= 0; u = fresh.lowest()) {
                fresh.reset(u);
                comp.set(u);
                queue.push_back(u);
            }
        }
        return comp;
    }

    // Exact solution of a union of paths and cycles (max degree <= 2).
    result solve_sparse(bits alive) const {
        result res;
        while (alive.any()) {
            bits comp = component_of(alive, alive.lowest());
            alive = alive.minus(comp);
            std::vector<int> members;
            for (int v = comp.lowest(); v >= 0;) {
                members.push_back(v);
                comp.reset(v);
                v = comp.lowest();
            }
            int endpoint = -1;
            bits comp_mask(words);
            for (int v : members) comp_mask.set(v);
            auto deg_in = [&](int v) { return adj[v].intersect(comp_mask).count(); };
            for (int v : members)
                if (deg_in(v) <= 1) {
                    endpoint = v;
                    break;
                }
            bool cycle = endpoint < 0;
            int start = cycle ? members.front() : endpoint;
            // Walk the path or cycle picking alternate vertices.
            std::vector<int> order{start};
            bits seen(words);
            seen.set(start);
            int cur = start;
            while (true) {
                bits next = adj[cur].intersect(comp_mask).minus(seen);
                int nx = next.lowest();
                if (nx < 0) break;
                order.push_back(nx);
                seen.set(nx);
                cur = nx;
            }
            int m = static_cast<int>(order.size());
            int take = cycle ? m / 2 : (m + 1) / 2;
            for (int i = 0; i < m && take > 0; i += 2) {
                if (cycle && i == m - 1) break;
                res.members.push_back(order[i]);
                --take;
            }
            res.size += cycle ? m / 2 : (m + 1) / 2;
        }
        return res;
    }

    int max_degree_vertex(const bits& alive, int& degree_out) const {
        int best = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            int d = adj[v].intersect(alive).count();
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        degree_out = best_deg;
        return best;
    }

    result solve(bits alive) {
        tick();
        result base;

        // Isolated vertices always join the set.
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            if (!adj[v].intersects(alive)) {
                base.members.push_back(v);
                ++base.size;
                alive.reset(v);
            }
        }
        if (!alive.any()) return base;

        bits comp = component_of(alive, alive.lowest());
        if (comp.count() < alive.count()) {
            // Solve components independently and sum.
            result rest = solve(alive.minus(comp));
            result mine = solve(comp);
            base.size += rest.size + mine.size;
            base.members.insert(base.members.end(), rest.members.begin(), rest.members.end());
            base.members.insert(base.members.end(), mine.members.begin(), mine.members.end());
            return base;
        }

        int deg = 0;
        int v = max_degree_vertex(alive, deg);
        if (deg <= 2) {
            result sparse = solve_sparse(alive);
            base.size += sparse.size;
            base.members.insert(base.members.end(), sparse.members.begin(), sparse.members.end());
            return base;
        }

        // Include v.
        bits without_nv = alive.minus(adj[v]);
        without_nv.reset(v);
        result inc = solve(without_nv);
        inc.size += 1;
        inc.members.push_back(v);
        if (goal >= 0 && base.size + inc.size >= goal) {
            base.size += inc.size;
            base.members.insert(base.members.end(), inc.members.begin(), inc.members.end());
            return base;
        }

        // Exclude v unless the bound says it cannot beat the include branch.
        bits without_v = alive;
        without_v.reset(v);
        result best = std::move(inc);
        if (clique_cover_bound(without_v) > best.size) {
            result exc = solve(without_v);
            if (exc.size > best.size) best = std::move(exc);
        }
        base.size += best.size;
        base.members.insert(base.members.end(), best.members.begin(), best.members.end());
        return base;
    }

    result run() {
        bits alive(words);
        for (int v = 0; v < n; ++v) alive.set(v);
        if (n == 0) return {};
        return solve(alive);
    }
};

} // namespace

int alpha_exact(const graph& g, oracle_budget budget) {
    solver s(g, budget);
    return s.run().size;
}

vertex_set max_independent_set(const graph& g, oracle_budget budget) {
    solver s(g, budget);
    auto res = s.run();
    vertex_set out;
    for (int idx : res.members) out.insert(s.ids[idx]);
    return out;
}

bool has_independent_set(const graph& g, int k, oracle_budget budget) {
    if (k <= 0) return true;
    if (static_cast<std::size_t>(k) > g.num_vertices()) return false;
    solver s(g, budget);
    s.goal = k;
    return s.run().size >= k;
}

} // namespace pfm
