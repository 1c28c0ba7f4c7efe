#include "pfm/property_suites.hpp"

#include <algorithm>
#include <sstream>

#include "pfm/gadgets.hpp"
#include "pfm/generators.hpp"
#include "pfm/mis_engine.hpp"
#include "pfm/oracle.hpp"

namespace pfm {

namespace {

std::string describe(const graph& g, const vertex_set& z = {}) {
    std::ostringstream os;
    os << "V={";
    bool first = true;
    for (vertex v : g.vertex_list()) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << "} E={";
    first = true;
    for (const auto& [u, v] : g.edge_list()) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    os << "}";
    if (!z.empty()) {
        os << " Z={";
        first = true;
        for (vertex v : z) {
            os << (first ? "" : ",") << v;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

bool oracle_critical(const graph& g, vertex v) {
    return alpha_exact(g) == 1 + alpha_exact(induced_delete(g, {v}));
}

graph subtree_graph(const graph& tree, const rooted_tree& rt, vertex v) {
    vertex_set keep{v};
    std::vector<vertex> stack{v};
    while (!stack.empty()) {
        vertex cur = stack.back();
        stack.pop_back();
        for (vertex c : rt.children.at(cur)) {
            keep.insert(c);
            stack.push_back(c);
        }
    }
    return induced_subgraph(tree, keep);
}

bool brute_sat(const cnf_formula& f) {
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                int var = lit < 0 ? -lit : lit;
                bool value = (mask >> (var - 1)) & 1;
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

cnf_formula random_formula(gen::rng& r) {
    cnf_formula f;
    f.num_vars = gen::uniform(r, 1, 8);
    int m = gen::uniform(r, 1, 6);
    for (int j = 0; j < m; ++j) {
        int len = gen::uniform(r, 1, std::min(4, f.num_vars));
        std::vector<int> clause;
        for (int i = 0; i < len; ++i) {
            int var = gen::uniform(r, 1, f.num_vars);
            clause.push_back(gen::chance(r, 0.5) ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

std::string describe_formula(const cnf_formula& f) {
    std::ostringstream os;
    os << "n=" << f.num_vars;
    for (const auto& clause : f.clauses) {
        os << " (";
        for (std::size_t i = 0; i < clause.size(); ++i) os << (i ? " " : "") << clause[i];
        os << ")";
    }
    return os.str();
}

} // namespace

suite_result run_lemma6_suite(std::uint64_t trials, std::uint64_t seed) {
    suite_result res;
    res.name = "lemma6";
    gen::rng r(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++res.trials;
        int n = gen::uniform(r, 3, 16);
        graph p = gen::random_pseudotree(r, n, gen::chance(r, 0.7));
        vertex_set z = gen::random_vertex_subset(r, p, 0.35);
        int base = alpha_exact(p);
        bool drop = base > alpha_exact(induced_delete(p, z));
        auto witness = check_small_obstruction(p, z);
        if (drop != witness.has_value()) {
            res.passed = false;
            res.counterexample = "drop/witness mismatch on " + describe(p, z);
            return res;
        }
        if (!witness) continue;
        vertex_set picked(witness->begin(), witness->end());
        for (vertex v : picked)
            if (!z.count(v) || !p.has_vertex(v)) {
                res.passed = false;
                res.counterexample = "witness outside Z on " + describe(p, z);
                return res;
            }
        if (alpha_exact(induced_delete(p, picked)) >= base) {
            res.passed = false;
            res.counterexample = "witness does not force a drop on " + describe(p, z);
            return res;
        }
        if (p.num_edges() < p.num_vertices() && picked.size() > 2) {
            res.passed = false;
            res.counterexample = "tree needed more than two vertices on " + describe(p, z);
            return res;
        }
    }
    return res;
}

suite_result run_lemma4_suite(std::uint64_t trials, std::uint64_t seed) {
    suite_result res;
    res.name = "lemma4";
    gen::rng r(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++res.trials;
        int n = gen::uniform(r, 1, 20);
        graph tree = gen::random_tree(r, n);
        auto rt = build_rooted_tree(tree, 0);
        auto [alpha, table] = alpha_tree(rt, {});
        bool root_critical = oracle_critical(tree, 0);
        if (table.critical(0) != root_critical) {
            res.passed = false;
            res.counterexample = "table vs oracle criticality on " + describe(tree);
            return res;
        }
        bool any_child_critical = false;
        for (vertex c : rt.children.at(0))
            if (oracle_critical(subtree_graph(tree, rt, c), c)) any_child_critical = true;
        if (root_critical != !any_child_critical) {
            res.passed = false;
            res.counterexample = "lemma4 equivalence failed on " + describe(tree);
            return res;
        }
    }
    return res;
}

suite_result run_obs2_suite(std::uint64_t trials, std::uint64_t seed) {
    suite_result res;
    res.name = "obs2";
    gen::rng r(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++res.trials;
        int n = gen::uniform(r, 1, 16);
        graph tree = gen::random_tree(r, n);
        auto rt = build_rooted_tree(tree, 0);
        auto [alpha, table] = alpha_tree(rt, {});
        vertex v = gen::uniform(r, 0, n - 1);
        graph tv = subtree_graph(tree, rt, v);
        int without_v = alpha_exact(induced_delete(tv, {v}));
        int without_nv = alpha_exact(induced_delete(tv, closed_neighborhood(tv, {v})));
        if (table.critical(v) != (without_v == without_nv)) {
            res.passed = false;
            res.counterexample =
                "obs2 equivalence failed at v=" + std::to_string(v) + " on " + describe(tree);
            return res;
        }
    }
    return res;
}

suite_result run_obs4_suite(std::uint64_t trials, std::uint64_t seed) {
    suite_result res;
    res.name = "obs4";
    gen::rng r(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++res.trials;
        int n = gen::uniform(r, 3, 12);
        graph p = gen::random_pseudotree(r, n, gen::chance(r, 0.6));
        graph host = p;
        int nx = gen::uniform(r, 1, 5);
        vertex_set xs;
        for (int i = 0; i < nx; ++i) {
            host.add_vertex(n + i);
            xs.insert(n + i);
        }
        for (vertex x : xs)
            for (int v = 0; v < n; ++v)
                if (gen::chance(r, 0.3)) host.add_edge(x, v);

        if (conflicts(host, p, xs) <= 0) continue;
        std::vector<vertex> xv(xs.begin(), xs.end());
        bool found = false;
        for (std::size_t i = 0; i < xv.size() && !found; ++i)
            if (conflicts(host, p, {xv[i]}) > 0) found = true;
        for (std::size_t i = 0; i < xv.size() && !found; ++i)
            for (std::size_t j = i + 1; j < xv.size() && !found; ++j)
                if (conflicts(host, p, {xv[i], xv[j]}) > 0) found = true;
        for (std::size_t i = 0; i < xv.size() && !found; ++i)
            for (std::size_t j = i + 1; j < xv.size() && !found; ++j)
                for (std::size_t l = j + 1; l < xv.size() && !found; ++l)
                    if (conflicts(host, p, {xv[i], xv[j], xv[l]}) > 0) found = true;
        if (!found) {
            res.passed = false;
            res.counterexample = "no small conflict subset on " + describe(host);
            return res;
        }
    }
    return res;
}

suite_result run_gadget_suite(std::uint64_t trials, std::uint64_t seed) {
    suite_result res;
    res.name = "gadgets";
    gen::rng r(seed);
    if (trials == 0) return res;

    oracle_budget roomy{160, 200'000'000};
    for (int k = 1; k <= 8; ++k) {
        ++res.trials;
        auto gadget = clause_gadget(k);
        if (alpha_exact(gadget.g, roomy) != k + 2) {
            res.passed = false;
            res.counterexample = "alpha(G_" + std::to_string(k) + ") != k+2";
            return res;
        }
    }

    // Every maximum independent set keeps a spike, and each spike is the
    // lone spike of some maximum independent set.
    for (int k = 1; k <= 6; ++k) {
        ++res.trials;
        auto gadget = clause_gadget(k);
        const int n = static_cast<int>(gadget.g.num_vertices());
        std::vector<std::uint32_t> adj(n, 0);
        for (const auto& [u, v] : gadget.g.edge_list()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        std::uint32_t spikes = 0;
        for (vertex s : gadget.spike) spikes |= 1u << s;
        const int alpha = k + 2;
        std::vector<std::uint32_t> lone_spike(gadget.spike.size(), 0);
        bool all_have_spike = true;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != alpha) continue;
            bool independent = true;
            for (std::uint32_t m = mask; m && independent; m &= m - 1) {
                int v = __builtin_ctz(m);
                if (adj[v] & mask) independent = false;
            }
            if (!independent) continue;
            std::uint32_t hit = mask & spikes;
            if (!hit) all_have_spike = false;
            if (__builtin_popcount(hit) == 1) {
                for (std::size_t i = 0; i < gadget.spike.size(); ++i)
                    if (hit == (1u << gadget.spike[i])) lone_spike[i] = 1;
            }
        }
        bool every_spike_lone = true;
        for (auto b : lone_spike) every_spike_lone = every_spike_lone && b;
        if (!all_have_spike || !every_spike_lone) {
            res.passed = false;
            res.counterexample = "spike structure of G_" + std::to_string(k) + " violated";
            return res;
        }
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        ++res.trials;
        cnf_formula f = random_formula(r);
        auto inst = cnf_to_ismfm(f);
        bool sat = brute_sat(f);
        bool has_is = has_independent_set(inst.g, inst.k, roomy);
        if (sat != has_is) {
            res.passed = false;
            res.counterexample = "SAT/IS mismatch on " + describe_formula(f);
            return res;
        }
    }
    return res;
}

std::vector<suite_result> run_all_suites(std::uint64_t trials, std::uint64_t seed) {
    return {run_lemma6_suite(trials, seed), run_lemma4_suite(trials, seed),
            run_obs2_suite(trials, seed), run_obs4_suite(trials, seed),
            run_gadget_suite(trials, seed)};
}

} // namespace pfm
