#include "pfm/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

graph graph::with_vertices(int n) {
    graph g;
    for (vertex v = 0; v < n; ++v) g.add_vertex(v);
    return g;
}

void graph::add_vertex(vertex v) {
    if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
    adj_.try_emplace(v);
}

const vertex_set& graph::neighbors(vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    return it->second;
}

bool graph::has_edge(vertex u, vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

void graph::add_edge(vertex u, vertex v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto ui = adj_.find(u);
    auto vi = adj_.find(v);
    if (ui == adj_.end() || vi == adj_.end())
        throw std::invalid_argument("edge endpoint is not in the graph");
    if (ui->second.insert(v).second) {
        vi->second.insert(u);
        ++num_edges_;
    }
}

std::vector<vertex> graph::vertex_list() const {
    std::vector<vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, ns] : adj_) out.push_back(v);
    return out;
}

vertex_set graph::vertex_ids() const {
    vertex_set out;
    for (const auto& [v, ns] : adj_) out.insert(out.end(), v);
    return out;
}

std::vector<std::pair<vertex, vertex>> graph::edge_list() const {
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(num_edges_);
    for (const auto& [v, ns] : adj_)
        for (vertex u : ns)
            if (v < u) out.emplace_back(v, u);
    return out;
}

vertex graph::max_vertex_id() const {
    return adj_.empty() ? -1 : adj_.rbegin()->first;
}

vertex_set neighborhood(const graph& g, const vertex_set& s) {
    vertex_set out;
    for (vertex v : s)
        for (vertex u : g.neighbors(v)) out.insert(u);
    for (vertex v : s) out.erase(v);
    return out;
}

vertex_set closed_neighborhood(const graph& g, const vertex_set& s) {
    vertex_set out = neighborhood(g, s);
    out.insert(s.begin(), s.end());
    return out;
}

graph induced_delete(const graph& g, const vertex_set& s) {
    graph out;
    for (const auto& [v, ns] : g.adjacency())
        if (!s.count(v)) out.add_vertex(v);
    for (const auto& [v, ns] : g.adjacency()) {
        if (s.count(v)) continue;
        for (vertex u : ns)
            if (v < u && !s.count(u)) out.add_edge(v, u);
    }
    return out;
}

graph induced_subgraph(const graph& g, const vertex_set& keep) {
    graph out;
    for (vertex v : keep)
        if (g.has_vertex(v)) out.add_vertex(v);
    for (vertex v : keep) {
        if (!g.has_vertex(v)) continue;
        for (vertex u : g.neighbors(v))
            if (v < u && keep.count(u)) out.add_edge(v, u);
    }
    return out;
}

std::vector<vertex_set> connected_components(const graph& g) {
    std::vector<vertex_set> comps;
    vertex_set seen;
    for (const auto& [start, ns] : g.adjacency()) {
        if (seen.count(start)) continue;
        vertex_set comp;
        std::deque<vertex> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            vertex v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (vertex u : g.neighbors(v))
                if (seen.insert(u).second) queue.push_back(u);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<std::pair<vertex, vertex>>> biconnected_blocks(const graph& g) {
    std::vector<std::vector<std::pair<vertex, vertex>>> blocks;
    std::map<vertex, int> disc, low;
    std::vector<std::pair<vertex, vertex>> estack;
    int timer = 0;

    struct frame {
        vertex v;
        vertex parent;
        std::vector<vertex> nbrs;
        std::size_t next = 0;
    };

    for (const auto& [root, rns] : g.adjacency()) {
        if (disc.count(root)) continue;
        std::vector<frame> stack;
        auto open = [&](vertex v, vertex parent) {
            disc[v] = low[v] = timer++;
            const auto& ns = g.neighbors(v);
            stack.push_back(frame{v, parent, {ns.begin(), ns.end()}, 0});
        };
        open(root, -1);
        while (!stack.empty()) {
            frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                vertex u = f.nbrs[f.next++];
                if (u == f.parent) continue;
                if (!disc.count(u)) {
                    estack.emplace_back(f.v, u);
                    open(u, f.v);
                } else if (disc[u] < disc[f.v]) {
                    estack.emplace_back(f.v, u);
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                vertex v = f.v;
                vertex parent = f.parent;
                stack.pop_back();
                if (parent < 0) continue;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    std::vector<std::pair<vertex, vertex>> block;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e.first == parent && e.second == v) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
}

long to_long(const std::string& tok, const char* what, int lineno) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'", lineno);
    }
    if (used != tok.size())
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'", lineno);
    return value;
}

} // namespace

graph read_dimacs_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, declared_edges = -1;
    std::optional<std::vector<vertex>> nodes;
    graph g;
    bool built = false;

    auto build = [&](int at_line) {
        if (built) return;
        if (n < 0) throw parse_error("edge before DIMACS header", at_line);
        if (nodes) {
            for (vertex v : *nodes) {
                if (v < 1 || v > n)
                    throw parse_error("node id out of range [1, n]", at_line);
                g.add_vertex(v - 1);
            }
        } else {
            g = graph::with_vertices(static_cast<int>(n));
        }
        built = true;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") {
            // "c nodes v1 v2 ..." pins an exact vertex set (reduced graphs).
            if (toks.size() >= 2 && toks[1] == "nodes") {
                std::vector<vertex> vs;
                for (std::size_t i = 2; i < toks.size(); ++i)
                    vs.push_back(static_cast<vertex>(to_long(toks[i], "node id", lineno)));
                nodes = std::move(vs);
            }
            continue;
        }
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw parse_error("malformed header, expected 'p edge n m'", lineno);
            n = to_long(toks[2], "vertex count", lineno);
            declared_edges = to_long(toks[3], "edge count", lineno);
            if (n < 0 || declared_edges < 0)
                throw parse_error("negative count in header", lineno);
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) throw parse_error("malformed edge line", lineno);
            build(lineno);
            long u = to_long(toks[1], "vertex id", lineno);
            long v = to_long(toks[2], "vertex id", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("vertex id out of range [1, n]", lineno);
            if (u == v) throw parse_error("self-loop edge rejected", lineno);
            vertex a = static_cast<vertex>(u - 1);
            vertex b = static_cast<vertex>(v - 1);
            if (nodes && (!g.has_vertex(a) || !g.has_vertex(b)))
                throw parse_error("edge endpoint is not a declared node", lineno);
            if (!g.has_edge(a, b)) g.add_edge(a, b); // duplicates and reversals merge
            continue;
        }
        throw parse_error("unrecognized line '" + toks[0] + "'", lineno);
    }
    if (n < 0) throw parse_error("missing DIMACS header", lineno);
    build(lineno);
    return g;
}

void write_dimacs_graph(std::ostream& out, const graph& g) {
    auto vs = g.vertex_list();
    bool dense = vs.empty() || (vs.front() == 0 && vs.back() == static_cast<vertex>(vs.size()) - 1);
    long n = dense ? static_cast<long>(vs.size()) : g.max_vertex_id() + 1;
    out << "c pfmkernel graph\n";
    if (!dense) {
        out << "c nodes";
        for (vertex v : vs) out << ' ' << v + 1;
        out << '\n';
    }
    out << "p edge " << n << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

} // namespace pfm
