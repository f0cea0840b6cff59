#include "bookem/exact.hpp"

#include <algorithm>

namespace bookem {

namespace {

struct Search {
    int n;
    int pages;
    std::vector<std::vector<int>> adj; // adjacency by vertex
    std::vector<int> pos;              // vertex -> spine position or -1
    std::vector<VertexId> order;
    // closed edges as (left, right, page), in closing order
    struct Closed {
        int l, r, page;
        VertexId u, v;
    };
    std::vector<Closed> closed;
    int used_pages = 0;
    bool found = false;
    std::vector<Closed> best;
    std::vector<VertexId> best_order;

    bool page_ok(int l, int r, int page) const {
        for (const Closed &c : closed) {
            if (c.page != page) continue;
            if (c.l < l && l < c.r && c.r < r) return false; // interleaving
            if (l < c.l && c.l < r && r < c.r) return false;
        }
        return true;
    }

    // Assign pages to the edges closing at position t (their other endpoints
    // are already placed), then continue with the next vertex.
    void assign_closing(int t, const std::vector<std::pair<int, VertexId>> &closing,
                        std::size_t idx) {
        if (found) return;
        if (idx == closing.size()) {
            place_next(t + 1);
            return;
        }
        auto [l, u] = closing[idx];
        // pages are interchangeable: a fresh page only as the next unused one
        int limit = std::min(pages - 1, used_pages);
        for (int pg = 0; pg <= limit; ++pg) {
            if (!page_ok(l, t, pg)) continue;
            bool fresh = pg == used_pages;
            if (fresh) ++used_pages;
            closed.push_back({l, t, pg, u, order[t]});
            assign_closing(t, closing, idx + 1);
            closed.pop_back();
            if (fresh) --used_pages;
            if (found) return;
        }
    }

    void place_next(int t) {
        if (found) return;
        if (t == n) {
            found = true;
            best = closed;
            best_order = order;
            return;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            // reflection symmetry: order[1] < order[n-1]
            if (t == n - 1 && n >= 3 && v < order[1]) continue;
            pos[v] = t;
            order[t] = v;
            std::vector<std::pair<int, VertexId>> closing;
            for (int u : adj[v])
                if (pos[u] != -1 && pos[u] < t) closing.push_back({pos[u], u});
            std::sort(closing.begin(), closing.end());
            assign_closing(t, closing, 0);
            pos[v] = -1;
            if (found) return;
        }
    }
};

} // namespace

int exact_book_thickness(int n, const std::vector<std::pair<VertexId, VertexId>> &edges,
                         int max_n, BookEmbedding *witness) {
    if (n > max_n)
        throw InputError("exact solver refuses n = " + std::to_string(n) + " > cap " +
                         std::to_string(max_n));
    if (edges.empty()) {
        if (witness) {
            witness->pages.clear();
            witness->order.clear();
            for (VertexId v = 0; v < n; ++v) witness->order.push_back(v);
        }
        return 0;
    }

    Search s;
    s.n = n;
    s.adj.assign(n, {});
    std::vector<std::pair<VertexId, VertexId>> norm;
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("bad edge in exact solver input");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        s.adj[u].push_back(v);
        s.adj[v].push_back(u);
    }

    for (int p = 1; p <= std::max(1, (n + 1) / 2); ++p) {
        s.pages = p;
        s.found = false;
        s.pos.assign(n, -1);
        s.order.assign(n, -1);
        s.closed.clear();
        s.used_pages = 0;
        // vertex 0 first: cyclic symmetry
        s.pos[0] = 0;
        s.order[0] = 0;
        s.place_next(1);
        if (s.found) {
            if (witness) {
                witness->order = s.best_order;
                witness->pages.clear();
                for (const auto &c : s.best)
                    witness->pages[{std::min(c.u, c.v), std::max(c.u, c.v)}] = c.page;
            }
            return p;
        }
    }
    throw InternalError("exact solver failed to embed within ceil(n/2) pages");
}

} // namespace bookem
