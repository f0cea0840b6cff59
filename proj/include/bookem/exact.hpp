#pragma once

#include <optional>
#include <vector>

#include "bookem/book_embedding.hpp"

namespace bookem {

// Exact book thickness by exhaustive search over vertex orders with
// incremental page assignment. Ground truth for small graphs only; refuses
// n > max_n. Returns the page count and, optionally, a witness embedding
// (the first one found at the optimal count; the search order is
// deterministic, so the witness is too).
int exact_book_thickness(int n, const std::vector<std::pair<VertexId, VertexId>> &edges,
                         int max_n = 9, BookEmbedding *witness = nullptr);

} // namespace bookem
