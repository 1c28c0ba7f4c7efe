#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pfm {

// Randomized suites behind the check-props command. Each runs a fixed
// number of trials from a seed and reports the first counterexample.
struct suite_result {
    std::string name;
    bool passed = true;
    std::uint64_t trials = 0;
    std::string counterexample;
};

// Small obstructions on pseudotrees: a drop under Z is always witnessed by
// at most three of its vertices (two on trees), re-verified by the oracle.
suite_result run_lemma6_suite(std::uint64_t trials, std::uint64_t seed);
// A root is critical exactly when no child is critical in its subtree.
suite_result run_lemma4_suite(std::uint64_t trials, std::uint64_t seed);
// v is critical exactly when alpha(G - v) = alpha(G - N[v]).
suite_result run_obs2_suite(std::uint64_t trials, std::uint64_t seed);
// A positive conflict is always caused by at most three modulator vertices.
suite_result run_obs4_suite(std::uint64_t trials, std::uint64_t seed);
// Clause gadget facts plus SAT <-> IS equivalence on random formulas.
suite_result run_gadget_suite(std::uint64_t trials, std::uint64_t seed);

std::vector<suite_result> run_all_suites(std::uint64_t trials, std::uint64_t seed);

} // namespace pfm
