#include <algorithm>
#include <stdexcept>

#include "pfm/errors.hpp"
#include "pfm/kernelizer.hpp"

namespace pfm {

namespace {

instance apply_record(const instance& inst, const trace_record& rec) {
    instance next = inst;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, rule1_record>) {
                if (!next.g.has_vertex(r.removed) || !next.modulator.count(r.removed))
                    throw std::invalid_argument("trace deletes a vertex that is not in X");
                next.g = induced_delete(next.g, {r.removed});
                next.modulator.erase(r.removed);
            } else if constexpr (std::is_same_v<T, rule2_record>) {
                next.g.add_edge(r.u, r.v);
            } else if constexpr (std::is_same_v<T, rule3_record>) {
                for (vertex p : r.added) next.g.add_vertex(p);
                next.g.add_edge(r.added[0], r.added[1]);
                next.g.add_edge(r.added[0], r.added[2]);
                next.g.add_edge(r.added[1], r.added[2]);
                for (int i = 0; i < 3; ++i) next.g.add_edge(r.added[i], r.triple[i]);
                next.k += 1;
            } else if constexpr (std::is_same_v<T, rule4_record>) {
                vertex_set comp(r.component.begin(), r.component.end());
                for (vertex v : comp)
                    if (!next.g.has_vertex(v))
                        throw std::invalid_argument("trace removes a vertex that is absent");
                next.g = induced_delete(next.g, comp);
                next.k -= r.alpha;
                if (next.k < 0) next.k = 0; // trivially yes; reduction halted here
            } else if constexpr (std::is_same_v<T, rule5_record>) {
                for (vertex v : r.breakers) {
                    if (!next.g.has_vertex(v))
                        throw std::invalid_argument("trace promotes a vertex that is absent");
                    next.modulator.insert(v);
                }
            } else if constexpr (std::is_same_v<T, rule6_record>) {
                if (r.plugin != pass_through_plugin().name)
                    throw std::invalid_argument("cannot replay external rule-6 plugin '" +
                                                r.plugin + "'");
            }
        },
        rec);
    validate_instance(next);
    return next;
}

bool independent_set_of(const graph& g, const vertex_set& s) {
    for (vertex v : s) {
        if (!g.has_vertex(v)) return false;
        for (vertex u : g.neighbors(v))
            if (s.count(u)) return false;
    }
    return true;
}

// Lemma-2 style normalization: while the solution contains the whole
// anchor set of some anchor triangle, swap one anchor for the triangle
// vertex attached to it. Size and independence are preserved.
void break_anchored_triples(const instance& at_state, vertex_set& solution) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& anchor : find_anchor_triangles(at_state)) {
            const auto& xs = anchor.anchors;
            if (!solution.count(xs[0]) || !solution.count(xs[1]) || !solution.count(xs[2]))
                continue;
            solution.erase(xs[0]);
            solution.insert(anchor.triangle[0]);
            changed = true;
            break;
        }
    }
}

} // namespace

instance replay_trace(const instance& original, const reduction_trace& trace) {
    instance cur = original.problem == problem_kind::vertex_cover ? convert_vc_is(original)
                                                                  : original;
    if (cur.k < 0) cur.k = 0;
    for (const auto& rec : trace.records) cur = apply_record(cur, rec);
    return cur;
}

vertex_set lift_solution(const instance& original, const reduction_trace& trace,
                         const vertex_set& kernel_solution) {
    instance base = original.problem == problem_kind::vertex_cover ? convert_vc_is(original)
                                                                   : original;
    if (base.k < 0) base.k = 0;

    // States before each record; the last entry is the reduced instance.
    std::vector<instance> states{base};
    for (const auto& rec : trace.records) states.push_back(apply_record(states.back(), rec));

    const instance& reduced = states.back();
    if (!independent_set_of(reduced.g, kernel_solution))
        throw std::invalid_argument("kernel solution is not an independent set of the reduced graph");
    if (static_cast<int>(kernel_solution.size()) < reduced.k)
        throw std::invalid_argument("kernel solution is smaller than the reduced k");

    vertex_set solution = kernel_solution;
    for (std::size_t i = trace.records.size(); i-- > 0;) {
        const instance& before = states[i];
        const instance& after = states[i + 1];
        std::visit(
            [&](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rule3_record>) {
                    for (vertex p : r.added) solution.erase(p);
                } else if constexpr (std::is_same_v<T, rule4_record>) {
                    break_anchored_triples(after, solution);
                    vertex_set comp(r.component.begin(), r.component.end());
                    graph part = induced_subgraph(before.g, comp);
                    vertex_set blocked;
                    for (vertex v : neighborhood(before.g, solution))
                        if (comp.count(v)) blocked.insert(v);
                    vertex_set extension = mis_pseudoforest_avoiding(part, blocked);
                    if (static_cast<int>(extension.size()) != r.alpha)
                        throw invariant_violation(
                            "lifting could not recover alpha(P) independent vertices");
                    solution.insert(extension.begin(), extension.end());
                } else if constexpr (std::is_same_v<T, rule6_record>) {
                    if (r.plugin != pass_through_plugin().name)
                        throw std::invalid_argument("plugin '" + r.plugin +
                                                    "' must supply its own lifting");
                }
                // Rules 1, 2 and 5 lift as the identity.
            },
            trace.records[i]);
    }

    if (!independent_set_of(base.g, solution))
        throw invariant_violation("lifted set is not independent in the original graph");
    if (static_cast<int>(solution.size()) < base.k)
        throw invariant_violation("lifted set is smaller than the original k");
    return solution;
}

} // namespace pfm
