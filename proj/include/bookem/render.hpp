#pragma once

#include <string>

#include "bookem/book_embedding.hpp"

namespace bookem {

// Static arc diagram: vertices on a horizontal spine, one semicircular arc
// per edge, stroke color keyed by page.
std::string render_svg(const BookEmbedding &e, const PageRegistry &reg);

} // namespace bookem
