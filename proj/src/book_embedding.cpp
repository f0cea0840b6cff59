#include "bookem/book_embedding.hpp"

#include <algorithm>
#include <set>

namespace bookem {

PageRegistry::PageRegistry(int k) : k_(k), fam_(ceil_div2(k)) {
    names_.reserve(page_count());
    for (int i = 0; i < 5; ++i) names_.push_back("p" + std::to_string(i));
    const char fam_letter[3] = {'r', 'b', 'g'};
    for (int j = 0; j < 2; ++j)
        for (int family = 0; family < 3; ++family)
            for (int idx = 0; idx < fam_; ++idx)
                names_.push_back(std::string(1, fam_letter[family]) + std::to_string(j) + "_" +
                                 std::to_string(idx + 1));
}

PageId PageRegistry::by_name(const std::string &name) const {
    for (PageId p = 0; p < static_cast<PageId>(names_.size()); ++p)
        if (names_[p] == name) return p;
    return kNoPage;
}

int BookEmbedding::pages_used() const {
    std::set<PageId> used;
    for (const auto &[pr, pg] : pages) used.insert(pg);
    return static_cast<int>(used.size());
}

std::vector<int> BookEmbedding::position_of() const {
    VertexId mx = -1;
    for (VertexId v : order) mx = std::max(mx, v);
    std::vector<int> pos(mx + 1, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    return pos;
}

} // namespace bookem
