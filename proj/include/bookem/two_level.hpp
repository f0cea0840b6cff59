#pragma once

#include <map>
#include <vector>

#include "bookem/book_embedding.hpp"
#include "bookem/peeling.hpp"

namespace bookem {

// Every edge of the drawing (skeleton and crossing copies) by normalized
// endpoint pair. Built once per drawing.
struct EdgeLookup {
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> pairs;
};

EdgeLookup build_edge_lookup(const KFramedDrawing &d);

// Precomputed per-instance geometry: subscripts, face order fans, boundary
// walks. All traversal directions already account for mirroring.
struct TwoLevelContext {
    const KFramedDrawing *d = nullptr;
    const LevelStructures *ls = nullptr;
    const EdgeLookup *lookup = nullptr;
    TwoLevelInstance inst;

    int s = 0;                               // |boundary|
    std::map<VertexId, int> subscript;       // boundary vertex -> its index in u0..u_{s-1}
    std::map<FaceId, int> face_index;        // instance face -> dense local index
    std::vector<FaceId> local_faces;         // dense index -> face
    std::vector<std::vector<int>> fan;       // per boundary subscript: local face indices, ccw
    std::vector<VertexId> fan_walk_cache;    // scratch

    // Per local face: boundary walks as vertex/edge sequences.
    std::vector<std::vector<VertexId>> ccw_verts; // counterclockwise walk
    std::vector<std::vector<EdgeId>> ccw_edges;   // edge ccw_edges[i] joins ccw_verts[i] -> [i+1]
    std::vector<VertexId> dominator;              // per local face
    std::vector<std::vector<char>> prime;         // per local face: prime flag per walk position of L0 walk? see cpp

    bool is_interior(VertexId v) const { return subscript.find(v) == subscript.end(); }
};

TwoLevelContext make_context(const KFramedDrawing &d, const LevelStructures &ls,
                             const EdgeLookup &lookup, TwoLevelInstance inst);

// lambda(F): instance faces in sweep order.
struct FaceOrder {
    std::vector<int> order;  // local face indices
    std::vector<int> pos;    // per local face index: position in `order`
};

FaceOrder face_order_lambda(const TwoLevelContext &cx);

struct TLBlock {
    int gid = -1;                   // cactus block id; -1 for the synthetic degenerate root
    bool degenerate = false;        // single-vertex block
    bool is_cycle = false;
    VertexId leader = kNoVertex;
    std::vector<VertexId> assigned; // rule R.3 order (leader excluded); degenerate: the vertex
    int component = -1;             // local component index
    int discovery = -1;             // lambda position of d(B)
    VertexId dominator = kNoVertex; // dom(d(B))
    bool small = false;             // d(B) is a small face
    bool tucked = false;            // placed right before the dominator instead of after:
                                    // requires a small discovery face and a component that
                                    // touches nothing but its dominator
    int order_in_face = 0;          // first assigned vertex's position in the ccw walk of d(B)
    int depth = 0;                  // block tree depth, root = 0
};

struct BlockStructure {
    std::vector<TLBlock> blocks;             // local block ids
    std::vector<int> order;                  // local ids sorted by the precedence relation
    std::map<VertexId, int> block_of_vertex; // interior vertex -> assigned block (local id)
    std::vector<VertexId> first_vertex;      // per local component
    std::vector<int> root_block;             // per local component
    std::vector<int> vertex_discovery;       // per boundary subscript: lambda pos of d(u_j)
    std::vector<char> face_small;            // per local face
};

BlockStructure build_block_structure(const TwoLevelContext &cx, const FaceOrder &lambda);

// Rules R.1-R.3. Returns every instance vertex in spine order.
std::vector<VertexId> linear_order_rho(const TwoLevelContext &cx, const BlockStructure &bs,
                                       const FaceOrder &lambda);

enum class EdgeClass { Backward, Forward, NonDominator };

struct ClassifiedEdge {
    int ge = -1; // unified edge index in the drawing
    EdgeClass cls = EdgeClass::NonDominator;
    int fwd_parity = 0;  // Forward: depth parity of the target block (1 = odd)
    int color = -1;      // NonDominator: conflict color of the assigning face (0,1,2)
    int page_idx = -1;   // NonDominator: page index within the color family
    int assigning_face = -1; // lambda position of the face whose clique assigned it
};

struct ConflictGraph {
    int face_count = 0;
    std::vector<std::pair<int, int>> edges; // lambda positions, deduplicated
};

ConflictGraph build_conflict_graph(const TwoLevelContext &cx, const BlockStructure &bs,
                                   const FaceOrder &lambda);

// Proper coloring with at most three colors (smallest-last greedy). Throws
// InternalError if three colors do not suffice; that would contradict the
// outerplanarity of the conflict graph and signals a bug upstream.
std::vector<int> color_conflict_graph(const ConflictGraph &cg);

// Distributes the pending edges of one clique over ceil(q/2) pages so that no
// two same-page edges cross for any placement of the members in this relative
// order. `members` must be sorted by spine rank. Returns the page index
// within the family for each pending edge.
int clique_page_index(int rank_a, int rank_b, int q);

// Full analysis of one instance. `assigned` marks unified edge indices that
// earlier levels already placed; the edges this instance places are marked in
// it on return, so the same vector threads through a whole multi-level run.
struct TwoLevelAnalysis {
    FaceOrder lambda;
    BlockStructure blocks;
    std::vector<VertexId> rho;
    std::map<VertexId, int> rho_rank;
    ConflictGraph conflict;
    std::vector<int> face_color; // per lambda position
    std::vector<ClassifiedEdge> assignments;
};

TwoLevelAnalysis analyze_two_level(const TwoLevelContext &cx, std::vector<char> &assigned);

// Standalone embedding of a two-level drawing (Theorem-19 mode: one backward
// page p0, one forward page p1, non-dominator edges in the R^1/B^1/G^1
// families). Validates that `d` really is a two-level instance first.
BookEmbedding two_level_embed(const KFramedDrawing &d, const PageRegistry &reg, int family_j = 1);

// Splits the forward edges of a standalone two-level embedding onto p1/p2 by
// block-depth parity, making the embedding good (P.7d).
BookEmbedding make_good(const BookEmbedding &e, const KFramedDrawing &d, const PageRegistry &reg,
                        int family_j = 1);

// Empty iff `d` is a valid standalone two-level instance; otherwise the
// blocking reason.
std::string two_level_precondition(const KFramedDrawing &d, const LevelStructures &ls);

} // namespace bookem
