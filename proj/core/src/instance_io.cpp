#include <istream>
#include <ostream>
#include <sstream>

#include "pfm/errors.hpp"
#include "pfm/kernelizer.hpp"

namespace pfm {

void write_instance_sidecar(std::ostream& out, const instance& inst) {
    out << "modulator:";
    for (vertex v : inst.modulator) out << ' ' << v + 1;
    out << '\n';
    out << "k: " << inst.k << '\n';
    out << "problem: " << to_string(inst.problem) << '\n';
}

instance read_instance(std::istream& graph_in, std::istream& sidecar_in,
                       bool require_pseudoforest) {
    graph g = read_dimacs_graph(graph_in);

    vertex_set modulator;
    std::optional<int> k;
    std::optional<problem_kind> problem;
    std::string line;
    int lineno = 0;
    while (std::getline(sidecar_in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "c" || key[0] == '#') continue;
        if (key == "modulator:") {
            long v;
            while (ls >> v) {
                if (v < 1) throw parse_error("modulator ids are 1-based", lineno);
                modulator.insert(static_cast<vertex>(v - 1));
            }
            if (!ls.eof()) throw parse_error("malformed modulator list", lineno);
        } else if (key == "k:") {
            long value;
            if (!(ls >> value) || value < 0)
                throw parse_error("k must be a non-negative integer", lineno);
            k = static_cast<int>(value);
        } else if (key == "problem:") {
            std::string p;
            if (!(ls >> p)) throw parse_error("missing problem kind", lineno);
            if (p == "IS" || p == "is")
                problem = problem_kind::independent_set;
            else if (p == "VC" || p == "vc")
                problem = problem_kind::vertex_cover;
            else
                throw parse_error("problem must be IS or VC", lineno);
        } else if (key.rfind("label:", 0) == 0) {
            continue; // tolerated so a labels sidecar can be concatenated
        } else {
            throw parse_error("unrecognized sidecar line '" + key + "'", lineno);
        }
    }
    if (!k) throw parse_error("sidecar is missing the k line", lineno);
    if (!problem) throw parse_error("sidecar is missing the problem line", lineno);

    instance inst{std::move(g), std::move(modulator), *k, *problem};
    for (vertex v : inst.modulator)
        if (!inst.g.has_vertex(v))
            throw std::invalid_argument("modulator vertex " + std::to_string(v + 1) +
                                        " is not in the graph");
    if (require_pseudoforest) validate_instance(inst);
    return inst;
}

void write_trace(std::ostream& out, const reduction_trace& trace) {
    for (const auto& rec : trace.records) {
        std::visit(
            [&](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rule1_record>) {
                    out << "rule1 " << r.removed + 1;
                } else if constexpr (std::is_same_v<T, rule2_record>) {
                    out << "rule2 " << r.u + 1 << ' ' << r.v + 1;
                } else if constexpr (std::is_same_v<T, rule3_record>) {
                    out << "rule3";
                    for (vertex v : r.triple) out << ' ' << v + 1;
                    for (vertex v : r.added) out << ' ' << v + 1;
                } else if constexpr (std::is_same_v<T, rule4_record>) {
                    out << "rule4 " << r.alpha;
                    for (vertex v : r.component) out << ' ' << v + 1;
                } else if constexpr (std::is_same_v<T, rule5_record>) {
                    out << "rule5";
                    for (vertex v : r.breakers) out << ' ' << v + 1;
                } else if constexpr (std::is_same_v<T, rule6_record>) {
                    out << "rule6 " << r.plugin;
                }
            },
            rec);
        out << '\n';
    }
}

reduction_trace read_trace(std::istream& in) {
    reduction_trace trace;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag[0] == '#') continue;

        auto read_id = [&]() {
            long v;
            if (!(ls >> v) || v < 1) throw parse_error("expected a 1-based vertex id", lineno);
            return static_cast<vertex>(v - 1);
        };
        auto read_rest = [&]() {
            std::vector<vertex> vs;
            long v;
            while (ls >> v) {
                if (v < 1) throw parse_error("expected a 1-based vertex id", lineno);
                vs.push_back(static_cast<vertex>(v - 1));
            }
            if (!ls.eof()) throw parse_error("malformed id list", lineno);
            return vs;
        };

        if (tag == "rule1") {
            trace.records.push_back(rule1_record{read_id()});
        } else if (tag == "rule2") {
            vertex u = read_id(), v = read_id();
            trace.records.push_back(rule2_record{u, v});
        } else if (tag == "rule3") {
            rule3_record rec{};
            for (int i = 0; i < 3; ++i) rec.triple[i] = read_id();
            for (int i = 0; i < 3; ++i) rec.added[i] = read_id();
            trace.records.push_back(rec);
        } else if (tag == "rule4") {
            long alpha;
            if (!(ls >> alpha) || alpha < 0) throw parse_error("expected alpha(P)", lineno);
            rule4_record rec{read_rest(), static_cast<int>(alpha)};
            if (rec.component.empty()) throw parse_error("rule4 needs component vertices", lineno);
            trace.records.push_back(rec);
        } else if (tag == "rule5") {
            trace.records.push_back(rule5_record{read_rest()});
        } else if (tag == "rule6") {
            std::string plugin;
            if (!(ls >> plugin)) throw parse_error("rule6 needs a plugin name", lineno);
            trace.records.push_back(rule6_record{plugin});
        } else {
            throw parse_error("unrecognized trace record '" + tag + "'", lineno);
        }
    }
    return trace;
}

} // namespace pfm
