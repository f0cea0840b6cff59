#pragma once

#include <vector>

#include "bookem/kframed.hpp"

namespace bookem {

// Vertex -> level of the peeling decomposition. Level 0 is the boundary of
// the outer face; level i is what reaches the unbounded face once everything
// below i is stripped.
struct Leveling {
    std::vector<int> level;
    int depth = 0; // max level + 1
};

Leveling peel_levels(const KFramedDrawing &d);

// One biconnected piece of a level-i cactus: a bridge edge or a chordless
// cycle. Cycle vertices are stored counterclockwise (region interior on the
// left when walking cycle[j] -> cycle[j+1]) starting at the smallest id.
struct CactusBlock {
    int id = -1;
    int level = -1;
    int component = -1; // cactus component id (global numbering)
    bool is_cycle = false;
    std::vector<VertexId> cycle; // cycles only
    std::vector<EdgeId> edges;
};

// Everything the multi-level pipeline needs to know about the skeleton:
// levels, per-face classes, per-level cacti with their blocks, and the
// nesting regions that tie each face and cactus component to the enclosing
// cycle block one level up.
struct LevelStructures {
    Leveling lv;

    std::vector<int> face_min_level; // per face; outer face = -1

    // Skeleton edge classification.
    std::vector<char> edge_is_level; // level edge (same-level endpoints)?
    std::vector<int> edge_level;     // level edges: the level; bindings: min endpoint level
    std::vector<char> edge_is_chord; // level edges enclosed by their own level (neither side
                                     // face touches the level below)

    // intra_faces[i] = the intra-level faces of sigma_i, i in [1, depth].
    std::vector<std::vector<FaceId>> intra_faces;

    // Cacti.
    std::vector<CactusBlock> blocks;
    std::vector<std::vector<int>> blocks_at_level;
    std::vector<int> block_of_edge;      // per skeleton edge: cactus block id or -1
    std::vector<int> component_of;       // per vertex: cactus component id (its own level)
    int component_count = 0;
    std::vector<int> component_level;    // per component
    std::vector<std::vector<VertexId>> component_vertices;
    std::vector<std::vector<int>> blocks_of_component;

    // Nesting: for a bounded face of class i+1 (min level i), the enclosing
    // level-i cycle block; for a level-i component (i >= 1), the enclosing
    // level-(i-1) cycle block.
    std::vector<int> region_of_face;      // per face; -1 for the outer face
    std::vector<int> region_of_component; // per component; -1 for level 0

    std::vector<int> crossing_host_class; // per crossing: face class of host (0 = outer face)
};

// Builds every derived structure and checks the decomposition invariants
// (cactus shape, face classes, level adjacency). Requires a drawing that
// passed validate_kframed.
LevelStructures derive_level_structures(const KFramedDrawing &d, const Leveling &lv);

// A two-level instance: the region enclosed by one cycle block (its C0),
// together with the faces, interior vertices, cactus components and hosted
// crossing edges living there.
struct TwoLevelInstance {
    int level = 1;           // interior vertices have this level
    int boundary_block = -1; // global cactus block id, level-1 below
    bool mirrored = false;   // boundary order runs counterclockwise in the host embedding
    std::vector<VertexId> boundary; // u0..u_{s-1}, local clockwise = spine order
    std::vector<FaceId> faces;
    std::vector<VertexId> interior;
    std::vector<int> components; // cactus components of `level` inside
    std::vector<int> crossings;  // crossing indices hosted in `faces`
};

// The two-level instances of level `lvl` (boundary blocks one level below),
// with canonical clockwise boundaries. The embedding driver re-derives the
// boundary order from the spine instead.
std::vector<TwoLevelInstance> bicomponents(const KFramedDrawing &d, const LevelStructures &ls,
                                           int lvl);

} // namespace bookem
