#pragma once

#include <map>
#include <string>
#include <vector>

#include "bookem/common.hpp"

namespace bookem {

using PageId = int;
constexpr PageId kNoPage = -1;

// The fixed page universe for a run with parameter k:
//   p0..p4, then the six families R^0, B^0, G^0, R^1, B^1, G^1 of
//   ceil(k/2) pages each. 5 + 6*ceil(k/2) pages total; names are stable.
class PageRegistry {
public:
    explicit PageRegistry(int k);

    int k() const { return k_; }
    int family_size() const { return fam_; }
    int page_count() const { return 5 + 6 * fam_; }

    PageId p(int i) const { return i; } // i in [0,5)
    // family: 0 = R, 1 = B, 2 = G; j in {0,1}; idx in [0, fam_)
    PageId family_page(int family, int j, int idx) const { return 5 + (j * 3 + family) * fam_ + idx; }

    const std::string &name(PageId p) const { return names_[p]; }
    PageId by_name(const std::string &name) const; // kNoPage if unknown

private:
    int k_;
    int fam_;
    std::vector<std::string> names_;
};

// A finished layout: spine order plus a page per edge of the (simple) graph.
struct BookEmbedding {
    std::vector<VertexId> order;                            // permutation of vertices
    std::map<std::pair<VertexId, VertexId>, PageId> pages;  // keys normalized u < v
    int k = 3;

    int pages_used() const;
    std::vector<int> position_of() const; // vertex -> spine position
};

} // namespace bookem
