#pragma once

#include <vector>

#include "bookem/kframed.hpp"

namespace bookem {

// A map drawn combinatorially: a plane bipartite graph between nations
// (vertices [0, nations)) and points (vertices [nations, nations+points)).
// A point of degree h records h nations meeting there; h is capped by k.
struct MapWitness {
    PlaneGraph graph;
    int nations = 0;
    int points = 0;
    int k = 2;

    bool is_nation(VertexId v) const { return v < nations; }
    int point_count() const { return points; }
};

// Empty iff the witness is well formed; otherwise the first blocking reason.
std::string validate_witness(const MapWitness &w);

// The adjacency the witness realizes: nations sharing a point. Simple,
// normalized pairs, sorted.
std::vector<std::pair<VertexId, VertexId>> half_square(const MapWitness &w);

// Builds a 2k-framed drawing realizing every witness adjacency: degree-2
// points become skeleton edges, higher points become cage cycles (nations
// alternating with dummy vertices) whose nation clique rides inside as
// crossing edges; the skeleton is then repaired to a simple biconnected
// plane graph with all faces small enough. Nations keep their ids.
KFramedDrawing map_to_framed(const MapWitness &w);

// Inverse direction: every vertex becomes a nation, every skeleton edge a
// 2-point, every crossing-hosting face one h-point over its boundary.
// Requires a clique-augmented drawing (rejected otherwise).
MapWitness framed_to_map(const KFramedDrawing &d);

} // namespace bookem
