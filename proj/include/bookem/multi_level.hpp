#pragma once

#include <list>
#include <vector>

#include "bookem/two_level.hpp"

namespace bookem {

// The three P-pages a bicomponent works with: one backward page and two
// forward pages, all in {p0..p4}.
struct InstancePages {
    PageId b = 0, f1 = 1, f2 = 2;
};

// Page roles for a bicomponent nested inside `parent`, entered through the
// parent forward page selected by the parity bit (odd -> f1, even -> f2):
// the child's backward page is the parent's other forward page, its forward
// pages are the two remaining ones of {p0..p4}.
InstancePages choose_pages(const InstancePages &parent, int parity_odd);

// Spine under construction: a linked order with O(1) anchored insertion.
class Spine {
public:
    void init(const std::vector<VertexId> &start, int n);
    void insert_before(VertexId anchor, const std::vector<VertexId> &vs);
    void insert_after(VertexId anchor, const std::vector<VertexId> &vs);
    std::vector<VertexId> to_vector() const;
    std::vector<int> ranks(int n) const; // -1 for vertices not yet placed

private:
    std::list<VertexId> seq_;
    std::vector<std::list<VertexId>::iterator> at_;
};

// Splices the interior vertices of a freshly embedded bicomponent into the
// spine: everything between u_j and u_{j+1} in the local order lands right
// before u_{j+1}; the tail after u_{s-1} lands right after it.
void insert_bicomponent(Spine &spine, const std::vector<VertexId> &rho_local,
                        const std::vector<VertexId> &boundary);

struct GoodCheckReport {
    int level = 0;
    int instance = 0; // index within the level's processing order
    std::vector<std::string> violations;
};

struct EmbedOptions {
    bool debug_good_checks = false;
};

struct EmbedStats {
    int depth = 0;
    int instances = 0;
    int augmented_edges = 0;
};

struct EmbedResult {
    BookEmbedding embedding; // stripped: exactly the input graph's edges
    int page_bound = 0;      // 6*ceil(k/2) + 5
    EmbedStats stats;
    std::vector<GoodCheckReport> good_checks; // populated in debug mode
};

// The full pipeline: validate, augment, peel, embed level by level, close
// with the unbounded-face crossings, strip the augmentation.
EmbedResult multi_level_embed(const KFramedDrawing &d, const EmbedOptions &opt = {});

} // namespace bookem
