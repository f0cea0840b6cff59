#pragma once

#include <vector>

#include "bookem/book_embedding.hpp"

namespace bookem {

struct CrossingPair {
    std::pair<VertexId, VertexId> e1;
    std::pair<VertexId, VertexId> e2;
    PageId page = kNoPage;
};

// Exhaustive pairwise check of every same-page edge pair; returns all
// crossing pairs. Empty result == valid book embedding of the given edges.
// Throws InputError if an edge is unmapped or the order is not a permutation.
std::vector<CrossingPair> validate_book_embedding(
    const BookEmbedding &e, const std::vector<std::pair<VertexId, VertexId>> &graph_edges);

// Sweep variant: O(m log m), reports at most one crossing pair per page.
// Same emptiness semantics as the exhaustive check.
std::vector<CrossingPair> validate_book_embedding_fast(
    const BookEmbedding &e, const std::vector<std::pair<VertexId, VertexId>> &graph_edges);

} // namespace bookem
