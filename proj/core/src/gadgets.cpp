#include "pfm/gadgets.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

cnf_formula parse_dimacs_cnf(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    cnf_formula formula;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
                throw parse_error("malformed header, expected 'p cnf n m'", lineno);
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens after header", lineno);
            formula.num_vars = static_cast<int>(n);
            continue;
        }
        if (n < 0) throw parse_error("clause before CNF header", lineno);
        // The first token is part of the clause data.
        std::istringstream again(line);
        long lit;
        while (again >> lit) {
            if (lit == 0) {
                if (current.empty()) throw parse_error("empty clause", lineno);
                formula.clauses.push_back(current);
                current.clear();
                continue;
            }
            long v = lit < 0 ? -lit : lit;
            if (v > n) throw parse_error("variable index out of range", lineno);
            current.push_back(static_cast<int>(lit));
        }
        if (again.bad() || (!again.eof() && again.fail()))
            throw parse_error("malformed clause token", lineno);
    }
    if (n < 0) throw parse_error("missing CNF header", lineno);
    if (!current.empty()) throw parse_error("clause missing its 0 terminator", lineno);
    if (static_cast<long>(formula.clauses.size()) != m)
        throw parse_error("clause count does not match header", lineno);
    return formula;
}

clause_gadget_graph clause_gadget(int k, vertex id_base) {
    if (k < 1) throw std::invalid_argument("clause gadget needs k >= 1");
    clause_gadget_graph out;
    vertex next = id_base;
    out.r0 = next++;
    out.g.add_vertex(out.r0);
    for (int i = 1; i <= k; ++i) {
        vertex l = next++, r = next++, s = next++;
        out.g.add_vertex(l);
        out.g.add_vertex(r);
        out.g.add_vertex(s);
        out.left.push_back(l);
        out.right.push_back(r);
        out.spike.push_back(s);
        out.g.add_edge(l, r);
        out.g.add_edge(l, s);
        out.g.add_edge(r, s);
    }
    out.l_end = next++;
    out.g.add_vertex(out.l_end);
    out.g.add_edge(out.r0, out.left.front());
    for (int i = 1; i < k; ++i) out.g.add_edge(out.right[i - 1], out.left[i]);
    out.g.add_edge(out.right.back(), out.l_end);
    return out;
}

gadget_instance cnf_to_ismfm(const cnf_formula& formula) {
    gadget_instance inst;
    const int n = formula.num_vars;
    for (int i = 1; i <= n; ++i) {
        vertex t = 2 * (i - 1);
        vertex f = t + 1;
        inst.g.add_vertex(t);
        inst.g.add_vertex(f);
        inst.g.add_edge(t, f);
        inst.t.push_back(t);
        inst.f.push_back(f);
        inst.modulator.insert(t);
        inst.modulator.insert(f);
        inst.labels[t] = "t" + std::to_string(i);
        inst.labels[f] = "f" + std::to_string(i);
    }

    int k = n;
    vertex next_id = 2 * n;
    for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
        const auto& clause = formula.clauses[j];
        const int h = static_cast<int>(clause.size());
        auto gadget = clause_gadget(h, next_id);
        next_id += 3 * h + 2;
        k += h + 2;

        std::string prefix = "c" + std::to_string(j + 1) + ".";
        for (const auto& [v, ns] : gadget.g.adjacency()) inst.g.add_vertex(v);
        for (const auto& [u, v] : gadget.g.edge_list()) inst.g.add_edge(u, v);
        inst.labels[gadget.r0] = prefix + "r0";
        inst.labels[gadget.l_end] = prefix + "l" + std::to_string(h + 1);
        for (int i = 1; i <= h; ++i) {
            inst.labels[gadget.left[i - 1]] = prefix + "l" + std::to_string(i);
            inst.labels[gadget.right[i - 1]] = prefix + "r" + std::to_string(i);
            inst.labels[gadget.spike[i - 1]] = prefix + "s" + std::to_string(i);
        }

        std::vector<vertex> spikes;
        for (int r = 0; r < h; ++r) {
            int lit = clause[r];
            int var = lit < 0 ? -lit : lit;
            vertex target = lit > 0 ? inst.f[var - 1] : inst.t[var - 1];
            inst.g.add_edge(gadget.spike[r], target);
            spikes.push_back(gadget.spike[r]);
        }
        inst.clause_spikes.push_back(std::move(spikes));
    }
    inst.k = k;
    return inst;
}

void write_labels(std::ostream& out, const gadget_instance& inst) {
    for (const auto& [v, role] : inst.labels)
        out << "label: " << v + 1 << ' ' << role << '\n';
}

} // namespace pfm
