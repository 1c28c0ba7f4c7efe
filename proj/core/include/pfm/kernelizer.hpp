#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfm/graph.hpp"
#include "pfm/mis_engine.hpp"

namespace pfm {

enum class problem_kind { independent_set, vertex_cover };

std::string to_string(problem_kind p);

// One IS/PFM or VC/PFM instance. G - modulator is a pseudoforest; this is
// validated on construction and re-validated after every reduction step.
struct instance {
    graph g;
    vertex_set modulator;
    int k = 0;
    problem_kind problem = problem_kind::independent_set;
};

instance make_instance(graph g, vertex_set modulator, int k,
                       problem_kind problem = problem_kind::independent_set);
void validate_instance(const instance& inst);
graph pseudoforest_part(const instance& inst); // F = G - X

// A chunk is an independent subset of the modulator, sized 1..3, whose
// conflict on F stays below |X|: a candidate solution fragment.
using chunk = vertex_set;

struct anchor_triangle {
    std::array<vertex, 3> triangle{}; // component vertices, ascending
    std::array<vertex, 3> anchors{};  // anchors[i] is the X-neighbor of triangle[i]
    bool redundant = false;

    vertex_set anchor_set() const { return {anchors.begin(), anchors.end()}; }
};

// Trace records. Replaying them forward reproduces the reduced instance;
// walking them backward lifts a kernel solution.
struct rule1_record { vertex removed; };
struct rule2_record { vertex u, v; };
struct rule3_record { std::array<vertex, 3> triple; std::array<vertex, 3> added; };
struct rule4_record { std::vector<vertex> component; int alpha; };
struct rule5_record { std::vector<vertex> breakers; };
struct rule6_record { std::string plugin; };

using trace_record = std::variant<rule1_record, rule2_record, rule3_record,
                                  rule4_record, rule5_record, rule6_record>;

struct reduction_trace {
    std::vector<trace_record> records;
};

// Memoizes per-component independence numbers and conflict values across a
// kernelization run. Components are immutable while they exist and fresh
// ids are never reused, so entries never go stale.
class conflict_cache {
public:
    int component_alpha(const graph& part, const std::vector<vertex>& key);
    int component_conflict(const graph& host, const graph& part,
                           const std::vector<vertex>& key, const vertex_set& xs);

private:
    struct entry {
        int alpha = -1;
        std::map<vertex_set, int> conflict;
    };
    std::map<std::vector<vertex>, entry> comps_;
};

std::vector<chunk> enumerate_chunks(const instance& inst, conflict_cache* cache = nullptr);
std::vector<anchor_triangle> find_anchor_triangles(const instance& inst);

// Reductions 1-4 return the reduced instance when applicable. Lower rules
// are assumed exhausted by the scheduler where their statements need it.
std::optional<std::pair<instance, trace_record>> apply_rule1(const instance& inst,
                                                             conflict_cache* cache = nullptr);
std::optional<std::pair<instance, trace_record>> apply_rule2(const instance& inst,
                                                             conflict_cache* cache = nullptr);
// fired: triples already handled once (their anchor may have vanished);
// first_fresh: smallest id for the new triangle, or -1 for max id + 1.
std::optional<std::pair<instance, trace_record>> apply_rule3(
    const instance& inst, const std::set<vertex_set>& fired = {}, vertex first_fresh = -1,
    conflict_cache* cache = nullptr);
std::optional<std::pair<instance, trace_record>> apply_rule4(
    const instance& inst, const std::vector<chunk>& chunks,
    const std::vector<anchor_triangle>& anchors, conflict_cache* cache = nullptr);

// Reduction 5: grow X by one canonical vertex per cycle of F. Idempotent.
std::pair<instance, trace_record> apply_rule5(const instance& inst);

// Reduction 6 delegates to an external IS/FVS kernel. The default is a
// pass-through; a real plugin is spot-checked against the oracle on small
// instances and, when it claims the published bounds, against them too.
struct rule6_plugin {
    std::string name = "pass-through";
    bool claims_size_bounds = false;
    std::function<instance(const instance&)> run; // empty means identity
};
const rule6_plugin& pass_through_plugin();
std::pair<instance, trace_record> apply_rule6(const instance& inst, const rule6_plugin& plugin);

struct kernel_result {
    instance reduced;
    reduction_trace trace;
    bool trivially_yes = false; // k went negative: every answer is yes
};

// Exhausts rules 1-4 lowest-first (recomputing chunks and anchors after
// every application), then applies rules 5 and 6 once each. Vertex Cover
// inputs are converted to Independent Set first and stay converted.
kernel_result kernelize(const instance& inst, const rule6_plugin& plugin = pass_through_plugin());

// Mechanical forward replay of a trace.
instance replay_trace(const instance& original, const reduction_trace& trace);

// Walks the trace backward, turning an independent set of the reduced
// graph (size >= k') into one of the original graph (size >= k).
vertex_set lift_solution(const instance& original, const reduction_trace& trace,
                         const vertex_set& kernel_solution);

// (G, X, k) as VC maps to (G, X, |V| - k) as IS and back; an involution.
instance convert_vc_is(const instance& inst);

enum class bound_stage { after_rules_1_4, after_rule5, after_rule6 };

struct bound_check {
    std::string name;
    long long observed = 0;
    long long limit = 0;
    bool checked = true; // false: not claimed at this stage (reported as skipped)
    bool ok = true;
};

struct bounds_report {
    std::vector<bound_check> checks;
    bool all_ok() const;
};

// Size bookkeeping: component count of F after rules 1-4, modulator growth
// after rule 5, k' drift, and the rule-6 kernel bounds when claimed.
bounds_report verify_size_bounds(std::size_t original_modulator_size, int original_k,
                                 const instance& reduced, bound_stage stage,
                                 bool rule6_bounds_claimed = false);
void ensure_bounds(const bounds_report& report); // throws invariant_violation

// Replays the trace to evaluate every stage of a finished kernelization.
bounds_report kernel_bounds_report(const instance& original, const kernel_result& result,
                                   bool rule6_bounds_claimed = false);

// Instance files: a DIMACS graph plus a sidecar with modulator, k and
// problem kind (1-based ids). Traces serialize one record per line.
void write_instance_sidecar(std::ostream& out, const instance& inst);
instance read_instance(std::istream& graph_in, std::istream& sidecar_in,
                       bool require_pseudoforest = true);
void write_trace(std::ostream& out, const reduction_trace& trace);
reduction_trace read_trace(std::istream& in);

} // namespace pfm
