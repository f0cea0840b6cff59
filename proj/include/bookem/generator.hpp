#pragma once

#include <cstdint>

#include "bookem/kframed.hpp"
#include "bookem/map_graph.hpp"

namespace bookem {

struct GenParams {
    std::uint64_t seed = 1;
    int k = 4;
    int n = 20;            // target vertex count (reached approximately from below)
    int depth = 1;         // nesting target; the result reaches at least this
    double density = 0.5;  // fraction of each face's possible crossing edges
    bool pentagon = false; // optimal-2-planar pattern: k=5, every face a fully
                           // diagonalized pentagon; n is derived from the seed
    bool two_level = false; // emit a valid standalone two-level instance
    bool outer_crossings = true; // sample crossing edges in the unbounded face too
};

// Deterministic: identical params give byte-identical drawings. Throws
// InputError when the parameters are unsatisfiable.
KFramedDrawing gen_kframed(const GenParams &p);

// Random plane bipartite witness with the requested counts; point degrees in
// [2, min(k, available nations)]. nations >= 2 whenever points >= 1.
MapWitness gen_witness(std::uint64_t seed, int nations, int points, int k);

} // namespace bookem
