#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfm/generators.hpp"
#include "pfm/modulator.hpp"
#include "pfm/pseudoforest.hpp"
#include "support/brute.hpp"

using namespace pfm;

namespace {

graph bowtie() {
    graph g = graph::with_vertices(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

graph k_n(int n) {
    graph g = graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

graph random_dense(gen::rng& r, int n, double p) {
    graph g = graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gen::chance(r, p)) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("verify_modulator") {
    graph c5 = graph::with_vertices(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(verify_modulator(c5, {}));
    CHECK(verify_modulator(k_n(4), {0}));
    CHECK(!verify_modulator(bowtie(), {}));
    CHECK_THROWS_AS(verify_modulator(c5, {9}), std::invalid_argument);
}

TEST_CASE("exact modulator on fixed graphs") {
    auto none = find_modulator_exact(bowtie(), 5);
    REQUIRE(none.has_value());
    CHECK(none->modulator.size() == 1);
    CHECK(none->certified_minimum);
    CHECK(none->method == modulator_method::exact);
    CHECK(verify_modulator(bowtie(), none->modulator));

    auto k4 = find_modulator_exact(k_n(4), 4);
    REQUIRE(k4.has_value());
    CHECK(k4->modulator.size() == 1);

    auto already = find_modulator_exact(graph::with_vertices(6), 0);
    REQUIRE(already.has_value());
    CHECK(already->modulator.empty());

    CHECK(!find_modulator_exact(bowtie(), 0).has_value()); // budget exhausted
}

TEST_CASE("exact matches the brute-force minimum") {
    gen::rng r(61);
    for (int t = 0; t < 120; ++t) {
        int n = gen::uniform(r, 1, 11);
        graph g = random_dense(r, n, 0.05 + 0.08 * gen::uniform(r, 0, 8));
        int want = brute::min_modulator_size(g, &is_pseudoforest);
        auto got = find_modulator_exact(g, g.num_vertices());
        CAPTURE(t);
        REQUIRE(got.has_value());
        REQUIRE(static_cast<int>(got->modulator.size()) == want);
        REQUIRE(verify_modulator(g, got->modulator));
        // Deterministic across repeated runs.
        REQUIRE(find_modulator_exact(g, g.num_vertices())->modulator == got->modulator);
    }
}

TEST_CASE("greedy always verifies, exact never beats it") {
    gen::rng r(67);
    CHECK(find_modulator_greedy(graph::with_vertices(4)).modulator.empty());
    auto bow = find_modulator_greedy(bowtie());
    CHECK(!bow.modulator.empty());
    CHECK(verify_modulator(bowtie(), bow.modulator));
    CHECK(!bow.certified_minimum);

    for (int t = 0; t < 120; ++t) {
        int n = gen::uniform(r, 1, 12);
        graph g = random_dense(r, n, 0.3);
        auto greedy = find_modulator_greedy(g);
        CHECK(verify_modulator(g, greedy.modulator));
        auto exact = find_modulator_exact(g, g.num_vertices());
        REQUIRE(exact.has_value());
        CHECK(exact->modulator.size() <= greedy.modulator.size());
    }
}
