#pragma once

#include <random>

#include "pfm/kernelizer.hpp"

namespace pfm::gen {

using rng = std::mt19937_64;

// Bounded draw that stays reproducible across standard libraries.
int uniform(rng& r, int lo, int hi);
bool chance(rng& r, double p);

graph random_tree(rng& r, int n, int id_base = 0);
// Connected, at most one cycle; with_cycle forces one (needs n >= 3).
graph random_pseudotree(rng& r, int n, bool with_cycle, int id_base = 0);
graph random_pseudoforest(rng& r, int n, int id_base = 0);

vertex_set random_vertex_subset(rng& r, const graph& g, double p);

// Random pseudoforest plus a modulator with random edges into it and
// among itself. k is drawn from [0, |V|].
instance random_ispfm_instance(rng& r, int max_forest, int max_modulator);

} // namespace pfm::gen
