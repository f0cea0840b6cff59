#pragma once

#include <string>
#include <vector>

#include "bookem/plane_graph.hpp"

namespace bookem {

enum class CrossingOrigin { Input, Augmented };

// An edge drawn in the interior of one skeleton face. Both endpoints lie on
// the boundary of the host. Parallel copies of the same pair may exist as
// long as their hosts differ.
struct CrossingEdge {
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;
    FaceId host = kNoFace;
    CrossingOrigin origin = CrossingOrigin::Input;
};

struct KFramedDrawing {
    PlaneGraph skeleton; // traced, outer face set
    int k = 3;
    std::vector<CrossingEdge> crossings;

    // Unified edge index space: skeleton edges first, then crossing edges.
    int total_edges() const { return skeleton.edge_count() + static_cast<int>(crossings.size()); }
    bool is_crossing_index(int ge) const { return ge >= skeleton.edge_count(); }
    std::pair<VertexId, VertexId> edge_endpoints(int ge) const {
        if (ge < skeleton.edge_count()) return skeleton.endpoints(ge);
        const CrossingEdge &c = crossings[ge - skeleton.edge_count()];
        return {c.u, c.v};
    }
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks every invariant of the drawing model and reports each failure,
// naming the offending face, edge or vertex.
ValidationReport validate_kframed(const KFramedDrawing &d);

// Adds crossing edges until every pair of distinct vertices on a face
// boundary (outer face included) is joined either by a boundary edge of that
// face or by a crossing edge hosted in it. Idempotent.
KFramedDrawing augment_cliques(const KFramedDrawing &d);

} // namespace bookem

#include "bookem/book_embedding.hpp"

namespace bookem {

// Page assignment per edge copy of an augmented drawing, with the sequence
// number of the assignment (processing order).
struct PerEdgePages {
    std::vector<PageId> page;
    std::vector<int> seq;
};

// Drops augmented copies and collapses parallel input copies to the one
// assigned first, leaving a page map whose domain is exactly the input
// graph's simple edge set. The vertex order is untouched.
BookEmbedding strip_augmentation(const std::vector<VertexId> &order, const PerEdgePages &pages,
                                 const KFramedDrawing &augmented, const KFramedDrawing &original);

} // namespace bookem
