#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pfm/errors.hpp"
#include "pfm/gadgets.hpp"
#include "pfm/kernelizer.hpp"
#include "pfm/modulator.hpp"
#include "pfm/oracle.hpp"
#include "pfm/property_suites.hpp"

namespace pfmk {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    return out;
}

pfm::graph load_graph(const std::string& path) {
    auto in = open_input(path);
    return pfm::read_dimacs_graph(in);
}

std::vector<int> one_based(const pfm::vertex_set& s) {
    std::vector<int> out;
    for (pfm::vertex v : s) out.push_back(v + 1);
    return out;
}

std::string join_ids(const pfm::vertex_set& s) {
    std::ostringstream os;
    bool first = true;
    for (pfm::vertex v : s) {
        os << (first ? "" : " ") << v + 1;
        first = false;
    }
    return os.str();
}

pfm::vertex_set read_solution_file(const std::string& path) {
    auto in = open_input(path);
    pfm::vertex_set out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == '#') continue;
        std::istringstream again(line);
        long v;
        while (again >> v) {
            if (v < 1) throw pfm::parse_error("solution ids are 1-based", lineno);
            out.insert(static_cast<pfm::vertex>(v - 1));
        }
        if (!again.eof()) throw pfm::parse_error("malformed solution line", lineno);
    }
    return out;
}

pfm::problem_kind parse_problem(const std::string& p) {
    if (p == "is" || p == "IS") return pfm::problem_kind::independent_set;
    if (p == "vc" || p == "VC") return pfm::problem_kind::vertex_cover;
    throw std::invalid_argument("problem must be 'is' or 'vc'");
}

struct kernelize_options {
    std::string graph_path, instance_path, out_prefix;
    std::string find_modulator, problem, plugin_name = "pass-through";
    int k = -1;
    bool report = false, as_json = false;
};

int cmd_kernelize(const kernelize_options& opt, std::ostream& out) {
    pfm::instance inst;
    if (!opt.instance_path.empty()) {
        auto gin = open_input(opt.graph_path);
        auto sin = open_input(opt.instance_path);
        inst = pfm::read_instance(gin, sin);
        if (!opt.problem.empty()) inst.problem = parse_problem(opt.problem);
        if (opt.k >= 0) inst.k = opt.k;
    } else {
        if (opt.find_modulator.empty())
            throw std::invalid_argument("need --instance or --find-modulator");
        if (opt.k < 0) throw std::invalid_argument("--find-modulator needs --k");
        pfm::graph g = load_graph(opt.graph_path);
        pfm::modulator_result mod;
        if (opt.find_modulator == "exact") {
            auto found = pfm::find_modulator_exact(g, g.num_vertices());
            if (!found) throw std::invalid_argument("exact modulator search exhausted its budget");
            mod = *found;
        } else if (opt.find_modulator == "greedy") {
            mod = pfm::find_modulator_greedy(g);
        } else {
            throw std::invalid_argument("--find-modulator must be 'exact' or 'greedy'");
        }
        auto problem = opt.problem.empty() ? pfm::problem_kind::independent_set
                                           : parse_problem(opt.problem);
        inst = pfm::make_instance(std::move(g), std::move(mod.modulator), opt.k, problem);
    }

    if (opt.plugin_name != pfm::pass_through_plugin().name)
        throw std::invalid_argument("unknown rule-6 plugin '" + opt.plugin_name + "'");

    auto result = pfm::kernelize(inst);

    {
        auto gout = open_output(opt.out_prefix + ".graph");
        pfm::write_dimacs_graph(gout, result.reduced.g);
        auto sout = open_output(opt.out_prefix + ".instance");
        pfm::write_instance_sidecar(sout, result.reduced);
        auto tout = open_output(opt.out_prefix + ".trace");
        pfm::write_trace(tout, result.trace);
    }

    auto bounds = pfm::kernel_bounds_report(inst, result);
    json j{{"command", "kernelize"},
           {"out_prefix", opt.out_prefix},
           {"original", {{"vertices", inst.g.num_vertices()},
                         {"edges", inst.g.num_edges()},
                         {"modulator", inst.modulator.size()},
                         {"k", inst.k},
                         {"problem", pfm::to_string(inst.problem)}}},
           {"reduced", {{"vertices", result.reduced.g.num_vertices()},
                        {"edges", result.reduced.g.num_edges()},
                        {"modulator", result.reduced.modulator.size()},
                        {"k", result.reduced.k},
                        {"problem", pfm::to_string(result.reduced.problem)}}},
           {"trace_records", result.trace.records.size()},
           {"trivially_yes", result.trivially_yes}};
    if (opt.report) {
        json checks = json::array();
        for (const auto& c : bounds.checks)
            checks.push_back({{"name", c.name},
                              {"observed", c.observed},
                              {"limit", c.limit},
                              {"status", !c.checked ? "SKIP" : (c.ok ? "PASS" : "FAIL")}});
        j["bounds"] = checks;
    }

    if (opt.as_json) {
        out << j.dump(2) << '\n';
    } else {
        out << "reduced instance written to " << opt.out_prefix << ".{graph,instance,trace}\n";
        out << "original: |V|=" << inst.g.num_vertices() << " |X|=" << inst.modulator.size()
            << " k=" << inst.k << " problem=" << pfm::to_string(inst.problem) << '\n';
        out << "reduced:  |V|=" << result.reduced.g.num_vertices()
            << " |X|=" << result.reduced.modulator.size() << " k=" << result.reduced.k
            << " problem=" << pfm::to_string(result.reduced.problem) << '\n';
        if (result.trivially_yes) out << "instance is trivially yes\n";
        if (opt.report) {
            for (const auto& c : bounds.checks) {
                const char* status = !c.checked ? "SKIP" : (c.ok ? "PASS" : "FAIL");
                out << "[" << status << "] " << c.name;
                if (c.checked) out << " (observed " << c.observed << ", limit " << c.limit << ")";
                out << '\n';
            }
        }
    }
    pfm::ensure_bounds(bounds);
    return exit_yes;
}

struct solve_options {
    std::string graph_path, problem = "is";
    int k = 0;
    bool witness = false, as_json = false;
    std::size_t max_vertices = 25;
    std::uint64_t max_nodes = 10'000'000;
};

int cmd_solve(const solve_options& opt, std::ostream& out) {
    pfm::graph g = load_graph(opt.graph_path);
    pfm::oracle_budget budget{opt.max_vertices, opt.max_nodes};
    auto problem = parse_problem(opt.problem);
    const int n = static_cast<int>(g.num_vertices());
    // A vertex cover of size k exists iff an independent set of size
    // |V| - k does.
    int need = problem == pfm::problem_kind::independent_set ? opt.k : n - opt.k;

    bool yes;
    pfm::vertex_set shown;
    if (opt.witness) {
        pfm::vertex_set mis = pfm::max_independent_set(g, budget);
        yes = static_cast<int>(mis.size()) >= need;
        if (yes) {
            if (problem == pfm::problem_kind::independent_set) {
                shown = mis;
            } else {
                for (pfm::vertex v : g.vertex_list())
                    if (!mis.count(v)) shown.insert(v);
            }
        }
    } else {
        yes = pfm::has_independent_set(g, need, budget);
    }

    if (opt.as_json) {
        json j{{"command", "solve"},
               {"problem", pfm::to_string(problem)},
               {"k", opt.k},
               {"answer", yes ? "yes" : "no"}};
        if (opt.witness && yes) j["witness"] = one_based(shown);
        out << j.dump(2) << '\n';
    } else {
        out << "answer: " << (yes ? "yes" : "no") << '\n';
        if (opt.witness && yes) out << "witness: " << join_ids(shown) << '\n';
    }
    return yes ? exit_yes : exit_no;
}

struct lift_options {
    std::string original_prefix, trace_path, solution_path;
    bool as_json = false;
};

int cmd_lift(const lift_options& opt, std::ostream& out) {
    auto gin = open_input(opt.original_prefix + ".graph");
    auto sin = open_input(opt.original_prefix + ".instance");
    pfm::instance original = pfm::read_instance(gin, sin);
    auto tin = open_input(opt.trace_path);
    pfm::reduction_trace trace = pfm::read_trace(tin);
    pfm::vertex_set solution = read_solution_file(opt.solution_path);

    pfm::vertex_set lifted = pfm::lift_solution(original, trace, solution);
    if (opt.as_json) {
        json j{{"command", "lift"}, {"size", lifted.size()}, {"lifted", one_based(lifted)}};
        out << j.dump(2) << '\n';
    } else {
        out << "size: " << lifted.size() << '\n';
        out << "lifted: " << join_ids(lifted) << '\n';
    }
    return exit_yes;
}

struct gen_hard_options {
    std::string cnf_path, out_prefix;
    bool as_json = false;
};

int cmd_gen_hard(const gen_hard_options& opt, std::ostream& out) {
    auto cin_ = open_input(opt.cnf_path);
    pfm::cnf_formula formula = pfm::parse_dimacs_cnf(cin_);
    pfm::gadget_instance gadget = pfm::cnf_to_ismfm(formula);

    {
        auto gout = open_output(opt.out_prefix + ".graph");
        pfm::write_dimacs_graph(gout, gadget.g);
        // The sidecar carries a mock-forest modulator, so it is written
        // without the pseudoforest validation a PFM instance gets.
        pfm::instance raw{gadget.g, gadget.modulator, gadget.k,
                          pfm::problem_kind::independent_set};
        auto sout = open_output(opt.out_prefix + ".instance");
        pfm::write_instance_sidecar(sout, raw);
        auto lout = open_output(opt.out_prefix + ".labels");
        pfm::write_labels(lout, gadget);
    }

    if (opt.as_json) {
        json j{{"command", "gen-hard"},
               {"variables", formula.num_vars},
               {"clauses", formula.clauses.size()},
               {"modulator", gadget.modulator.size()},
               {"k", gadget.k},
               {"out_prefix", opt.out_prefix}};
        out << j.dump(2) << '\n';
    } else {
        out << "variables: " << formula.num_vars << '\n';
        out << "clauses: " << formula.clauses.size() << '\n';
        out << "modulator-size: " << gadget.modulator.size() << '\n';
        out << "k: " << gadget.k << '\n';
    }
    return exit_yes;
}

struct check_props_options {
    std::string suite = "all";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 7;
    bool as_json = false;
};

int cmd_check_props(const check_props_options& opt, std::ostream& out) {
    std::vector<pfm::suite_result> results;
    if (opt.suite == "all") {
        results = pfm::run_all_suites(opt.trials, opt.seed);
    } else if (opt.suite == "lemma6") {
        results.push_back(pfm::run_lemma6_suite(opt.trials, opt.seed));
    } else if (opt.suite == "lemma4") {
        results.push_back(pfm::run_lemma4_suite(opt.trials, opt.seed));
    } else if (opt.suite == "obs2") {
        results.push_back(pfm::run_obs2_suite(opt.trials, opt.seed));
    } else if (opt.suite == "obs4") {
        results.push_back(pfm::run_obs4_suite(opt.trials, opt.seed));
    } else if (opt.suite == "gadgets") {
        results.push_back(pfm::run_gadget_suite(opt.trials, opt.seed));
    } else {
        throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    }

    bool all_passed = true;
    if (opt.as_json) {
        json j{{"command", "check-props"}, {"seed", opt.seed}};
        json suites = json::array();
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            json s{{"suite", r.name}, {"passed", r.passed}, {"trials", r.trials}};
            if (!r.passed) s["counterexample"] = r.counterexample;
            suites.push_back(s);
        }
        j["suites"] = suites;
        j["passed"] = all_passed;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.trials
                << " trials)\n";
            if (!r.passed) out << "counterexample: " << r.counterexample << '\n';
        }
    }
    return all_passed ? exit_yes : exit_no;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex Cover / Independent Set kernelization with pseudoforest modulators"};
    app.require_subcommand(1);

    kernelize_options ko;
    auto* kernelize = app.add_subcommand("kernelize", "Reduce an instance and write a trace");
    kernelize->add_option("--graph", ko.graph_path, "DIMACS graph file")->required();
    kernelize->add_option("--instance", ko.instance_path, "modulator/k sidecar file");
    kernelize->add_option("--find-modulator", ko.find_modulator, "exact or greedy");
    kernelize->add_option("--k", ko.k, "target k when no sidecar is given");
    kernelize->add_option("--problem", ko.problem, "is or vc");
    kernelize->add_option("--out", ko.out_prefix, "output prefix")->required();
    kernelize->add_option("--rule6-plugin", ko.plugin_name, "rule-6 plugin name");
    kernelize->add_flag("--report", ko.report, "print size and bound report");
    kernelize->add_flag("--json", ko.as_json, "machine-readable output");

    solve_options so;
    auto* solve = app.add_subcommand("solve", "Answer a small instance exactly");
    solve->add_option("--graph", so.graph_path, "DIMACS graph file")->required();
    solve->add_option("--k", so.k, "target size")->required();
    solve->add_option("--problem", so.problem, "is or vc");
    solve->add_flag("--witness", so.witness, "print a witness set on yes");
    solve->add_option("--max-vertices", so.max_vertices, "oracle vertex budget");
    solve->add_option("--max-nodes", so.max_nodes, "oracle search-node budget");
    solve->add_flag("--json", so.as_json, "machine-readable output");

    lift_options lo;
    auto* lift = app.add_subcommand("lift", "Lift a kernel solution to the original instance");
    lift->add_option("--original", lo.original_prefix, "prefix of the original instance files")
        ->required();
    lift->add_option("--trace", lo.trace_path, "trace file")->required();
    lift->add_option("--solution", lo.solution_path, "kernel solution file")->required();
    lift->add_flag("--json", lo.as_json, "machine-readable output");

    gen_hard_options go;
    auto* gen_hard = app.add_subcommand("gen-hard", "Compile a CNF into an IS instance");
    gen_hard->add_option("--cnf", go.cnf_path, "DIMACS CNF file")->required();
    gen_hard->add_option("--out", go.out_prefix, "output prefix")->required();
    gen_hard->add_flag("--json", go.as_json, "machine-readable output");

    check_props_options po;
    auto* check_props = app.add_subcommand("check-props", "Run randomized property suites");
    check_props->add_option("--suite", po.suite, "lemma6, lemma4, obs2, obs4, gadgets or all");
    check_props->add_option("--trials", po.trials, "trials per suite");
    check_props->add_option("--seed", po.seed, "random seed");
    check_props->add_flag("--json", po.as_json, "machine-readable output");

    std::vector<const char*> argv{"pfmk"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (kernelize->parsed()) return cmd_kernelize(ko, out);
        if (solve->parsed()) return cmd_solve(so, out);
        if (lift->parsed()) return cmd_lift(lo, out);
        if (gen_hard->parsed()) return cmd_gen_hard(go, out);
        if (check_props->parsed()) return cmd_check_props(po, out);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_yes;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pfm::invariant_violation& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const pfm::parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pfm::budget_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace pfmk
