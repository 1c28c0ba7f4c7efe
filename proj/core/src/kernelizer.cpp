#include "pfm/kernelizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfm/errors.hpp"
#include "pfm/oracle.hpp"

namespace pfm {

std::string to_string(problem_kind p) {
    return p == problem_kind::independent_set ? "IS" : "VC";
}

void validate_instance(const instance& inst) {
    for (vertex v : inst.modulator)
        if (!inst.g.has_vertex(v))
            throw std::invalid_argument("modulator vertex " + std::to_string(v) +
                                        " is not in the graph");
    if (!is_pseudoforest(pseudoforest_part(inst)))
        throw std::invalid_argument("graph minus modulator is not a pseudoforest");
}

instance make_instance(graph g, vertex_set modulator, int k, problem_kind problem) {
    instance inst{std::move(g), std::move(modulator), k, problem};
    validate_instance(inst);
    return inst;
}

graph pseudoforest_part(const instance& inst) {
    return induced_delete(inst.g, inst.modulator);
}

int conflict_cache::component_alpha(const graph& part, const std::vector<vertex>& key) {
    auto& e = comps_[key];
    if (e.alpha < 0) e.alpha = alpha_pseudoforest(part, {});
    return e.alpha;
}

int conflict_cache::component_conflict(const graph& host, const graph& part,
                                       const std::vector<vertex>& key, const vertex_set& xs) {
    auto& e = comps_[key];
    auto it = e.conflict.find(xs);
    if (it != e.conflict.end()) return it->second;
    if (e.alpha < 0) e.alpha = alpha_pseudoforest(part, {});
    vertex_set blocked = neighborhood(host, xs);
    int value = e.alpha - alpha_pseudoforest(part, blocked);
    e.conflict.emplace(xs, value);
    return value;
}

namespace {

// Components of F with their induced graphs, ordered by smallest member.
struct forest_view {
    graph f;
    std::vector<std::vector<vertex>> keys;
    std::vector<graph> parts;

    explicit forest_view(const instance& inst) : f(pseudoforest_part(inst)) {
        for (const auto& comp : connected_components(f)) {
            keys.emplace_back(comp.begin(), comp.end());
            parts.push_back(induced_subgraph(f, comp));
        }
    }
};

int total_conflict(const instance& inst, const forest_view& fv, const vertex_set& xs,
                   conflict_cache& cache) {
    int total = 0;
    for (std::size_t i = 0; i < fv.parts.size(); ++i)
        total += cache.component_conflict(inst.g, fv.parts[i], fv.keys[i], xs);
    return total;
}

bool independent_in(const graph& g, const std::vector<vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

std::vector<chunk> enumerate_chunks_impl(const instance& inst, const forest_view& fv,
                                         conflict_cache& cache) {
    std::vector<chunk> chunks;
    const int bar = static_cast<int>(inst.modulator.size());
    std::vector<vertex> xs(inst.modulator.begin(), inst.modulator.end());
    auto consider = [&](std::vector<vertex> members) {
        if (!independent_in(inst.g, members)) return;
        vertex_set set(members.begin(), members.end());
        if (total_conflict(inst, fv, set, cache) < bar) chunks.push_back(std::move(set));
    };
    for (std::size_t i = 0; i < xs.size(); ++i) consider({xs[i]});
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) consider({xs[i], xs[j]});
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            for (std::size_t l = j + 1; l < xs.size(); ++l) consider({xs[i], xs[j], xs[l]});
    return chunks;
}

} // namespace

std::vector<chunk> enumerate_chunks(const instance& inst, conflict_cache* cache) {
    conflict_cache local;
    forest_view fv(inst);
    return enumerate_chunks_impl(inst, fv, cache ? *cache : local);
}

std::vector<anchor_triangle> find_anchor_triangles(const instance& inst) {
    std::vector<anchor_triangle> anchors;
    forest_view fv(inst);
    for (const auto& key : fv.keys) {
        if (key.size() != 3) continue;
        const vertex_set comp(key.begin(), key.end());
        anchor_triangle at;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            vertex p = key[i];
            if (inst.g.degree(p) != 3) {
                ok = false;
                break;
            }
            vertex outside = -1;
            for (vertex u : inst.g.neighbors(p)) {
                if (comp.count(u)) continue;
                outside = u;
            }
            if (outside < 0 || !inst.modulator.count(outside)) {
                ok = false;
                break;
            }
            // degree 3 with one outside neighbor forces the two triangle edges
            if (!inst.g.has_edge(p, key[(i + 1) % 3]) || !inst.g.has_edge(p, key[(i + 2) % 3])) {
                ok = false;
                break;
            }
            at.triangle[i] = p;
            at.anchors[i] = outside;
        }
        if (!ok) continue;
        if (at.anchors[0] == at.anchors[1] || at.anchors[0] == at.anchors[2] ||
            at.anchors[1] == at.anchors[2])
            continue;
        anchors.push_back(at);
    }
    // Components arrive ordered by smallest member, so the first triangle
    // of each anchor set is the non-redundant one.
    std::set<vertex_set> seen;
    for (auto& at : anchors) at.redundant = !seen.insert(at.anchor_set()).second;
    return anchors;
}

std::optional<std::pair<instance, trace_record>> apply_rule1(const instance& inst,
                                                             conflict_cache* cache) {
    conflict_cache local;
    conflict_cache& c = cache ? *cache : local;
    forest_view fv(inst);
    const int bar = static_cast<int>(inst.modulator.size());
    for (vertex v : inst.modulator) {
        if (total_conflict(inst, fv, {v}, c) < bar) continue;
        instance next = inst;
        next.g = induced_delete(next.g, {v});
        next.modulator.erase(v);
        validate_instance(next);
        return std::make_pair(std::move(next), trace_record{rule1_record{v}});
    }
    return std::nullopt;
}

std::optional<std::pair<instance, trace_record>> apply_rule2(const instance& inst,
                                                             conflict_cache* cache) {
    conflict_cache local;
    conflict_cache& c = cache ? *cache : local;
    forest_view fv(inst);
    const int bar = static_cast<int>(inst.modulator.size());
    std::vector<vertex> xs(inst.modulator.begin(), inst.modulator.end());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (inst.g.has_edge(xs[i], xs[j])) continue;
            if (total_conflict(inst, fv, {xs[i], xs[j]}, c) < bar) continue;
            instance next = inst;
            next.g.add_edge(xs[i], xs[j]);
            validate_instance(next);
            return std::make_pair(std::move(next), trace_record{rule2_record{xs[i], xs[j]}});
        }
    return std::nullopt;
}

std::optional<std::pair<instance, trace_record>> apply_rule3(const instance& inst,
                                                             const std::set<vertex_set>& fired,
                                                             vertex first_fresh,
                                                             conflict_cache* cache) {
    conflict_cache local;
    conflict_cache& c = cache ? *cache : local;
    forest_view fv(inst);
    const int bar = static_cast<int>(inst.modulator.size());
    std::set<vertex_set> anchored;
    for (const auto& at : find_anchor_triangles(inst)) anchored.insert(at.anchor_set());

    std::vector<vertex> xs(inst.modulator.begin(), inst.modulator.end());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            for (std::size_t l = j + 1; l < xs.size(); ++l) {
                vertex_set triple{xs[i], xs[j], xs[l]};
                if (anchored.count(triple) || fired.count(triple)) continue;
                if (!independent_in(inst.g, {xs[i], xs[j], xs[l]})) continue;
                if (total_conflict(inst, fv, triple, c) < bar) continue;

                vertex base = first_fresh >= 0 ? first_fresh : inst.g.max_vertex_id() + 1;
                std::array<vertex, 3> fresh{base, base + 1, base + 2};
                instance next = inst;
                for (vertex p : fresh) next.g.add_vertex(p);
                next.g.add_edge(fresh[0], fresh[1]);
                next.g.add_edge(fresh[0], fresh[2]);
                next.g.add_edge(fresh[1], fresh[2]);
                next.g.add_edge(fresh[0], xs[i]);
                next.g.add_edge(fresh[1], xs[j]);
                next.g.add_edge(fresh[2], xs[l]);
                next.k += 1;
                validate_instance(next);
                rule3_record rec{{xs[i], xs[j], xs[l]}, fresh};
                return std::make_pair(std::move(next), trace_record{rec});
            }
    return std::nullopt;
}

std::optional<std::pair<instance, trace_record>> apply_rule4(
    const instance& inst, const std::vector<chunk>& chunks,
    const std::vector<anchor_triangle>& anchors, conflict_cache* cache) {
    conflict_cache local;
    conflict_cache& c = cache ? *cache : local;
    forest_view fv(inst);
    std::set<std::vector<vertex>> protected_triangles;
    for (const auto& at : anchors) {
        if (at.redundant) continue;
        std::vector<vertex> key(at.triangle.begin(), at.triangle.end());
        std::sort(key.begin(), key.end());
        protected_triangles.insert(std::move(key));
    }

    for (std::size_t i = 0; i < fv.keys.size(); ++i) {
        if (protected_triangles.count(fv.keys[i])) continue;
        bool untouched = true;
        for (const auto& x : chunks)
            if (c.component_conflict(inst.g, fv.parts[i], fv.keys[i], x) != 0) {
                untouched = false;
                break;
            }
        if (!untouched) continue;

        int alpha = c.component_alpha(fv.parts[i], fv.keys[i]);
        instance next = inst;
        next.g = induced_delete(next.g, vertex_set(fv.keys[i].begin(), fv.keys[i].end()));
        next.k -= alpha;
        validate_instance(next);
        rule4_record rec{fv.keys[i], alpha};
        return std::make_pair(std::move(next), trace_record{rec});
    }
    return std::nullopt;
}

std::pair<instance, trace_record> apply_rule5(const instance& inst) {
    vertex_set breakers = select_cycle_breakers(pseudoforest_part(inst));
    instance next = inst;
    next.modulator.insert(breakers.begin(), breakers.end());
    validate_instance(next);
    rule5_record rec{{breakers.begin(), breakers.end()}};
    return {std::move(next), trace_record{rec}};
}

const rule6_plugin& pass_through_plugin() {
    static const rule6_plugin plugin{};
    return plugin;
}

std::pair<instance, trace_record> apply_rule6(const instance& inst, const rule6_plugin& plugin) {
    if (!is_forest(pseudoforest_part(inst)))
        throw std::invalid_argument("rule 6 requires a feedback vertex set; run rule 5 first");
    if (!plugin.run)
        return {inst, trace_record{rule6_record{plugin.name}}};

    instance out = plugin.run(inst);
    validate_instance(out);
    if (plugin.claims_size_bounds) {
        const long long x = static_cast<long long>(inst.modulator.size());
        if (static_cast<long long>(out.modulator.size()) > 2 * x)
            throw std::invalid_argument("rule-6 plugin rejected: modulator exceeds 2|X|");
        if (static_cast<long long>(out.g.num_vertices()) > 56 * x * x * x + 28 * x * x + 2 * x)
            throw std::invalid_argument("rule-6 plugin rejected: vertex count exceeds its bound");
    }
    // Equivalence spot-check where the oracle can afford it.
    const std::size_t spot_limit = 24;
    if (inst.g.num_vertices() <= spot_limit && out.g.num_vertices() <= spot_limit) {
        bool before = has_independent_set(inst.g, inst.k);
        bool after = has_independent_set(out.g, out.k);
        if (before != after)
            throw std::invalid_argument("rule-6 plugin rejected: answer changed on a spot-check");
    }
    return {std::move(out), trace_record{rule6_record{plugin.name}}};
}

kernel_result kernelize(const instance& input, const rule6_plugin& plugin) {
    validate_instance(input);
    instance cur = input.problem == problem_kind::vertex_cover ? convert_vc_is(input) : input;
    const std::size_t original_x = cur.modulator.size();
    const int original_k = cur.k;

    kernel_result result;
    if (cur.k < 0) {
        cur.k = 0;
        result.trivially_yes = true;
    }

    conflict_cache cache;
    std::set<vertex_set> fired;
    vertex fresh = cur.g.max_vertex_id() + 1;

    while (!result.trivially_yes) {
        if (auto step = apply_rule1(cur, &cache)) {
            cur = std::move(step->first);
            result.trace.records.push_back(step->second);
            continue;
        }
        if (auto step = apply_rule2(cur, &cache)) {
            cur = std::move(step->first);
            result.trace.records.push_back(step->second);
            continue;
        }
        if (auto step = apply_rule3(cur, fired, fresh, &cache)) {
            const auto& rec = std::get<rule3_record>(step->second);
            fired.insert(vertex_set(rec.triple.begin(), rec.triple.end()));
            fresh += 3;
            cur = std::move(step->first);
            result.trace.records.push_back(step->second);
            continue;
        }
        auto chunks = enumerate_chunks_impl(cur, forest_view(cur), cache);
        if (auto step = apply_rule4(cur, chunks, find_anchor_triangles(cur), &cache)) {
            cur = std::move(step->first);
            result.trace.records.push_back(step->second);
            if (cur.k < 0) {
                cur.k = 0;
                result.trivially_yes = true;
            }
            continue;
        }
        break;
    }

    if (!result.trivially_yes) {
        ensure_bounds(verify_size_bounds(original_x, original_k, cur, bound_stage::after_rules_1_4));
        auto [after5, rec5] = apply_rule5(cur);
        if (!std::get<rule5_record>(rec5).breakers.empty())
            result.trace.records.push_back(rec5);
        cur = std::move(after5);
        ensure_bounds(verify_size_bounds(original_x, original_k, cur, bound_stage::after_rule5));

        auto [after6, rec6] = apply_rule6(cur, plugin);
        if (std::get<rule6_record>(rec6).plugin != pass_through_plugin().name)
            result.trace.records.push_back(rec6);
        cur = std::move(after6);
        ensure_bounds(verify_size_bounds(original_x, original_k, cur, bound_stage::after_rule6,
                                         plugin.claims_size_bounds));
    }

    result.reduced = std::move(cur);
    return result;
}

instance convert_vc_is(const instance& inst) {
    instance out = inst;
    out.k = static_cast<int>(inst.g.num_vertices()) - inst.k;
    out.problem = inst.problem == problem_kind::vertex_cover ? problem_kind::independent_set
                                                             : problem_kind::vertex_cover;
    return out;
}

bool bounds_report::all_ok() const {
    for (const auto& c : checks)
        if (c.checked && !c.ok) return false;
    return true;
}

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

bound_check make_check(std::string name, long long observed, long long limit, bool checked = true) {
    bound_check c;
    c.name = std::move(name);
    c.observed = observed;
    c.limit = limit;
    c.checked = checked;
    c.ok = !checked || observed <= limit;
    return c;
}

} // namespace

bounds_report verify_size_bounds(std::size_t original_modulator_size, int original_k,
                                 const instance& reduced, bound_stage stage,
                                 bool rule6_bounds_claimed) {
    bounds_report report;
    const long long x0 = static_cast<long long>(original_modulator_size);
    const long long grown = pow_ll(x0, 4) + pow_ll(x0, 3) + x0;

    if (stage == bound_stage::after_rules_1_4) {
        // Lemma-style bound in terms of the modulator the rules finished with.
        const long long xc = static_cast<long long>(reduced.modulator.size());
        const long long comps =
            static_cast<long long>(connected_components(pseudoforest_part(reduced)).size());
        report.checks.push_back(
            make_check("components(F) <= |X|^4 + |X|^3", comps, pow_ll(xc, 4) + pow_ll(xc, 3)));
    }
    if (stage == bound_stage::after_rule5) {
        report.checks.push_back(make_check("|X'| <= |X|^4 + |X|^3 + |X|",
                                           static_cast<long long>(reduced.modulator.size()),
                                           grown));
    }
    if (stage == bound_stage::after_rule6) {
        report.checks.push_back(make_check("|X'| <= 2(|X|^4 + |X|^3 + |X|)",
                                           static_cast<long long>(reduced.modulator.size()),
                                           2 * grown, rule6_bounds_claimed));
        report.checks.push_back(make_check(
            "|V| <= 56B^3 + 28B^2 + 2B, B = |X|^4 + |X|^3 + |X|",
            static_cast<long long>(reduced.g.num_vertices()),
            56 * pow_ll(grown, 3) + 28 * pow_ll(grown, 2) + 2 * grown, rule6_bounds_claimed));
    }
    report.checks.push_back(make_check("k' <= k + |X|^3", reduced.k,
                                       static_cast<long long>(original_k) + pow_ll(x0, 3)));
    return report;
}

void ensure_bounds(const bounds_report& report) {
    for (const auto& c : report.checks)
        if (c.checked && !c.ok)
            throw invariant_violation("size bound violated: " + c.name + " (observed " +
                                      std::to_string(c.observed) + ", limit " +
                                      std::to_string(c.limit) + ")");
}

bounds_report kernel_bounds_report(const instance& original, const kernel_result& result,
                                   bool rule6_bounds_claimed) {
    instance base = original.problem == problem_kind::vertex_cover ? convert_vc_is(original)
                                                                   : original;
    const std::size_t x0 = base.modulator.size();
    const int k0 = base.k;

    bounds_report report;
    if (result.trivially_yes) {
        bound_check note;
        note.name = "instance is trivially yes; size bounds not claimed";
        note.checked = false;
        report.checks.push_back(note);
        return report;
    }

    if (base.k < 0) base.k = 0;
    instance cur = base;
    std::size_t i = 0;
    const auto& recs = result.trace.records;
    while (i < recs.size() && !std::holds_alternative<rule5_record>(recs[i]) &&
           !std::holds_alternative<rule6_record>(recs[i])) {
        cur = replay_trace(cur, reduction_trace{{recs[i]}});
        ++i;
    }
    auto stage14 = verify_size_bounds(x0, k0, cur, bound_stage::after_rules_1_4);
    report.checks.insert(report.checks.end(), stage14.checks.begin(), stage14.checks.end());

    while (i < recs.size()) {
        cur = replay_trace(cur, reduction_trace{{recs[i]}});
        if (std::holds_alternative<rule5_record>(recs[i])) {
            auto stage5 = verify_size_bounds(x0, k0, cur, bound_stage::after_rule5);
            report.checks.insert(report.checks.end(), stage5.checks.begin(), stage5.checks.end());
        }
        ++i;
    }
    if (std::none_of(recs.begin(), recs.end(), [](const trace_record& r) {
            return std::holds_alternative<rule5_record>(r);
        })) {
        auto stage5 = verify_size_bounds(x0, k0, result.reduced, bound_stage::after_rule5);
        report.checks.insert(report.checks.end(), stage5.checks.begin(), stage5.checks.end());
    }
    auto stage6 = verify_size_bounds(x0, k0, result.reduced, bound_stage::after_rule6,
                                     rule6_bounds_claimed);
    report.checks.insert(report.checks.end(), stage6.checks.begin(), stage6.checks.end());
    return report;
}

} // namespace pfm
