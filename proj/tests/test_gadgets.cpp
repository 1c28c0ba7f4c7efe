#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pfm/errors.hpp"
#include "pfm/gadgets.hpp"
#include "pfm/generators.hpp"
#include "pfm/oracle.hpp"
#include "pfm/pseudoforest.hpp"
#include "support/brute.hpp"

using namespace pfm;

namespace {

cnf_formula parse(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

bool brute_sat(const cnf_formula& f) {
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                int var = lit < 0 ? -lit : lit;
                if ((lit > 0) == (((mask >> (var - 1)) & 1) != 0)) {
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

} // namespace

TEST_CASE("clause gadget shape") {
    auto g1 = clause_gadget(1);
    CHECK(g1.g.num_vertices() == 5);
    CHECK(g1.g.num_edges() == 5);

    for (int k = 1; k <= 8; ++k) {
        auto gk = clause_gadget(k);
        CHECK(gk.g.num_vertices() == static_cast<std::size_t>(3 * k + 2));
        CHECK(gk.g.num_edges() == static_cast<std::size_t>(4 * k + 1));
        CHECK(connected_components(gk.g).size() == 1);
        CHECK(is_mock_forest(gk.g));
    }
    CHECK_THROWS_AS(clause_gadget(0), std::invalid_argument);
}

TEST_CASE("gadget independence number is k + 2") {
    for (int k = 1; k <= 8; ++k) {
        auto gk = clause_gadget(k);
        CHECK(alpha_exact(gk.g, oracle_budget{40, 50'000'000}) == k + 2);
    }
}

TEST_CASE("removing the spikes leaves an even path") {
    for (int k = 1; k <= 6; ++k) {
        auto gk = clause_gadget(k);
        vertex_set spikes(gk.spike.begin(), gk.spike.end());
        graph rest = induced_delete(gk.g, spikes);
        CHECK(rest.num_vertices() == static_cast<std::size_t>(2 * k + 2));
        CHECK(is_forest(rest));
        CHECK(connected_components(rest).size() == 1);
        CHECK(alpha_exact(rest) == k + 1);
    }
}

TEST_CASE("cnf parsing") {
    auto unit = parse("p cnf 1 1\n1 0\n");
    CHECK(unit.num_vars == 1);
    REQUIRE(unit.clauses.size() == 1);
    CHECK(unit.clauses[0] == std::vector<int>{1});

    auto two = parse("p cnf 2 2\n1 -2 0\n-1 2 0\n");
    CHECK(two.clauses.size() == 2);
    CHECK(two.clauses[0] == std::vector<int>{1, -2});

    auto multi_line = parse("c comment\np cnf 3 1\n1\n-2 3 0\n");
    CHECK(multi_line.clauses[0] == std::vector<int>{1, -2, 3});

    CHECK_THROWS_AS(parse("p cnf 1 1\n0\n"), parse_error);     // empty clause
    CHECK_THROWS_AS(parse("p cnf 1 1\n2 0\n"), parse_error);   // out of range
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 -2\n"), parse_error);  // missing terminator
    CHECK_THROWS_AS(parse("1 0\n"), parse_error);              // no header
    CHECK_THROWS_AS(parse("p cnf 1 2\n1 0\n"), parse_error);   // clause count mismatch
}

TEST_CASE("cnf_to_ismfm single positive clause") {
    auto inst = cnf_to_ismfm(parse("p cnf 1 1\n1 0\n"));
    CHECK(inst.modulator.size() == 2);
    CHECK(inst.k == 4); // n + (h + 2)
    CHECK(has_independent_set(inst.g, inst.k));

    graph rest = induced_delete(inst.g, inst.modulator);
    CHECK(connected_components(rest).size() == 1);
    CHECK(is_mock_forest(rest));

    // The positive literal's spike attaches to f1.
    CHECK(inst.g.has_edge(inst.clause_spikes[0][0], inst.f[0]));
    CHECK(!inst.g.has_edge(inst.clause_spikes[0][0], inst.t[0]));
}

TEST_CASE("cnf_to_ismfm contradiction") {
    auto inst = cnf_to_ismfm(parse("p cnf 1 2\n1 0\n-1 0\n"));
    CHECK(inst.k == 7); // 1 + 3 + 3
    CHECK(!has_independent_set(inst.g, inst.k));

    graph rest = induced_delete(inst.g, inst.modulator);
    CHECK(connected_components(rest).size() == 2);
    CHECK(is_mock_forest(rest));
}

TEST_CASE("duplicate literals get their own spikes") {
    auto inst = cnf_to_ismfm(parse("p cnf 1 1\n1 1 0\n"));
    REQUIRE(inst.clause_spikes[0].size() == 2);
    CHECK(inst.g.has_edge(inst.clause_spikes[0][0], inst.f[0]));
    CHECK(inst.g.has_edge(inst.clause_spikes[0][1], inst.f[0]));
}

TEST_CASE("labels cover every vertex") {
    auto inst = cnf_to_ismfm(parse("p cnf 2 2\n1 -2 0\n-1 2 0\n"));
    CHECK(inst.labels.size() == inst.g.num_vertices());
    std::ostringstream out;
    write_labels(out, inst);
    CHECK(out.str().find("label: 1 t1") == 0);
    CHECK(out.str().find("c1.s1") != std::string::npos);
}

TEST_CASE("sat equivalence on random formulas") {
    gen::rng r(97);
    oracle_budget roomy{160, 200'000'000};
    for (int t = 0; t < 60; ++t) {
        cnf_formula f;
        f.num_vars = gen::uniform(r, 1, 6);
        int m = gen::uniform(r, 1, 4);
        for (int j = 0; j < m; ++j) {
            int len = gen::uniform(r, 1, std::min(3, f.num_vars));
            std::vector<int> clause;
            for (int i = 0; i < len; ++i) {
                int var = gen::uniform(r, 1, f.num_vars);
                clause.push_back(gen::chance(r, 0.5) ? var : -var);
            }
            f.clauses.push_back(clause);
        }
        auto inst = cnf_to_ismfm(f);
        CAPTURE(t);
        REQUIRE(brute_sat(f) == has_independent_set(inst.g, inst.k, roomy));
        REQUIRE(inst.modulator.size() == static_cast<std::size_t>(2 * f.num_vars));
        REQUIRE(connected_components(induced_delete(inst.g, inst.modulator)).size() ==
                f.clauses.size());
    }
}
