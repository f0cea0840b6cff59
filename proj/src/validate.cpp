#include "bookem/validate.hpp"

#include <algorithm>
#include <map>

namespace bookem {

namespace {

struct Spans {
    // page -> list of (left,right) spine positions with original endpoints
    std::map<PageId, std::vector<std::pair<std::pair<int, int>, std::pair<VertexId, VertexId>>>> by_page;
};

Spans collect(const BookEmbedding &e, const std::vector<std::pair<VertexId, VertexId>> &graph_edges) {
    std::vector<int> pos = e.position_of();
    int n = static_cast<int>(e.order.size());
    std::vector<int> counts(n, 0);
    for (VertexId v : e.order) {
        if (v < 0 || v >= static_cast<int>(pos.size()) || counts[v]++)
            throw InputError("vertex order is not a permutation");
    }
    Spans s;
    for (auto [u, v] : graph_edges) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = e.pages.find(key);
        if (it == e.pages.end())
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has no page assignment");
        if (u >= static_cast<int>(pos.size()) || v >= static_cast<int>(pos.size()) || pos[u] < 0 ||
            pos[v] < 0)
            throw InputError("edge endpoint missing from the vertex order");
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        s.by_page[it->second].push_back({{a, b}, key});
    }
    return s;
}

} // namespace

std::vector<CrossingPair> validate_book_embedding(
    const BookEmbedding &e, const std::vector<std::pair<VertexId, VertexId>> &graph_edges) {
    Spans s = collect(e, graph_edges);
    std::vector<CrossingPair> out;
    for (auto &[page, spans] : s.by_page) {
        for (std::size_t i = 0; i < spans.size(); ++i)
            for (std::size_t j = i + 1; j < spans.size(); ++j) {
                auto [a1, b1] = spans[i].first;
                auto [a2, b2] = spans[j].first;
                bool crossing = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
                if (crossing) out.push_back({spans[i].second, spans[j].second, page});
            }
    }
    return out;
}

std::vector<CrossingPair> validate_book_embedding_fast(
    const BookEmbedding &e, const std::vector<std::pair<VertexId, VertexId>> &graph_edges) {
    Spans s = collect(e, graph_edges);
    std::vector<CrossingPair> out;
    int n = static_cast<int>(e.order.size());
    for (auto &[page, spans] : s.by_page) {
        // A page is crossing-free iff its spans nest like balanced brackets:
        // walking the spine, every span must be on top of the open-span stack
        // at the moment it closes.
        std::sort(spans.begin(), spans.end(), [](const auto &x, const auto &y) {
            if (x.first.first != y.first.first) return x.first.first < y.first.first;
            return x.first.second > y.first.second;
        });
        std::vector<std::vector<std::size_t>> ends_at(n);
        for (std::size_t i = 0; i < spans.size(); ++i) ends_at[spans[i].first.second].push_back(i);
        // Innermost (largest left) first so same-endpoint closings pop cleanly.
        for (auto &lst : ends_at)
            std::sort(lst.begin(), lst.end(), [&spans](std::size_t a, std::size_t b) {
                return spans[a].first.first > spans[b].first.first;
            });

        std::vector<std::size_t> open;
        std::size_t next = 0;
        bool bad = false;
        for (int p = 0; p < n && !bad; ++p) {
            // Close before opening: spans meeting at position p share a vertex
            // and must not be reported against each other.
            for (std::size_t idx : ends_at[p]) {
                if (!open.empty() && open.back() == idx) {
                    open.pop_back();
                } else {
                    // idx is buried: whatever sits on top opened after idx and
                    // closes beyond p, so the two spans interleave.
                    out.push_back({spans[open.back()].second, spans[idx].second, page});
                    bad = true;
                    break;
                }
            }
            while (next < spans.size() && spans[next].first.first == p) open.push_back(next++);
        }
    }
    return out;
}

} // namespace bookem
