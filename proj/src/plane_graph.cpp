#include "bookem/plane_graph.hpp"

#include <algorithm>

namespace bookem {

std::string PlaneGraph::rotation_error() const {
    int n = vertex_count();
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            return "edge " + std::to_string(e) + " has an endpoint outside [0, n)";
        if (u == v) return "edge " + std::to_string(e) + " is a self-loop";
    }
    std::vector<int> seen(edge_count(), 0);
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : rot_[v]) {
            if (e < 0 || e >= edge_count())
                return "rotation of vertex " + std::to_string(v) + " names unknown edge " + std::to_string(e);
            if (edges_[e].first != v && edges_[e].second != v)
                return "rotation of vertex " + std::to_string(v) + " lists non-incident edge " + std::to_string(e);
            ++seen[e];
        }
    }
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (seen[e] != 2)
            return "edge " + std::to_string(e) + " appears " + std::to_string(seen[e]) +
                   " times across rotations, expected 2";
    for (VertexId v = 0; v < n; ++v) {
        std::vector<EdgeId> r = rot_[v];
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            return "rotation of vertex " + std::to_string(v) + " repeats an edge";
    }
    return {};
}

void PlaneGraph::trace_faces() {
    int m = edge_count();
    pos_in_rot_.assign(2 * m, -1);
    for (VertexId v = 0; v < vertex_count(); ++v)
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            EdgeId e = rot_[v][i];
            // position of e in the rotation of v, keyed by the dart arriving at v
            Dart arriving = make_dart(e, edges_[e].second == v ? 0 : 1);
            pos_in_rot_[arriving] = i;
        }

    face_of_dart_.assign(2 * m, kNoFace);
    face_darts_.clear();
    for (Dart d0 = 0; d0 < 2 * m; ++d0) {
        if (face_of_dart_[d0] != kNoFace) continue;
        FaceId f = static_cast<FaceId>(face_darts_.size());
        face_darts_.emplace_back();
        Dart d = d0;
        do {
            if (face_of_dart_[d] != kNoFace)
                throw InternalError("dart " + std::to_string(d0) +
                                    " does not close a face cycle; rotation system inconsistent");
            face_of_dart_[d] = f;
            face_darts_[f].push_back(d);
            d = next_in_face(d);
        } while (d != d0);
    }

    face_verts_sorted_.assign(face_darts_.size(), {});
    for (FaceId f = 0; f < face_count(); ++f) {
        auto &vs = face_verts_sorted_[f];
        for (Dart d : face_darts_[f]) vs.push_back(tail(d));
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
    traced_ = true;
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    out.reserve(face_darts_[f].size());
    for (Dart d : face_darts_[f]) out.push_back(tail(d));
    return out;
}

bool PlaneGraph::face_contains(FaceId f, VertexId v) const {
    const auto &vs = face_verts_sorted_[f];
    return std::binary_search(vs.begin(), vs.end(), v);
}

bool PlaneGraph::face_boundary_simple(FaceId f) const {
    return face_verts_sorted_[f].size() == face_darts_[f].size();
}

std::vector<VertexId> PlaneGraph::canonical_cycle(std::vector<VertexId> cycle) {
    if (cycle.empty()) return cycle;
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle.size() >= 3 && cycle.back() < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

FaceId PlaneGraph::find_face_by_cycle(const std::vector<VertexId> &cycle) const {
    std::vector<VertexId> want = canonical_cycle(cycle);
    for (FaceId f = 0; f < face_count(); ++f) {
        if (face_degree(f) != static_cast<int>(want.size())) continue;
        if (!face_boundary_simple(f)) continue;
        if (canonical_cycle(face_vertices(f)) == want) return f;
    }
    return kNoFace;
}

bool is_simple(const PlaneGraph &g) {
    std::vector<std::pair<VertexId, VertexId>> es;
    es.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (u == v) return false;
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

std::vector<int> connected_components(const PlaneGraph &g, int *count) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int c = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.rotation(v)) {
                VertexId w = g.other_endpoint(e, v);
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const PlaneGraph &g) {
    int c = 0;
    connected_components(g, &c);
    return c <= 1;
}

// Iterative lowpoint DFS; recursion would overflow on deep generated instances.
bool is_biconnected(const PlaneGraph &g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected(g)) return false;

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), parent_edge(n, -1);
    std::vector<int> edge_iter(n, 0);
    int timer = 0;
    int root_children = 0;

    std::vector<VertexId> stack;
    disc[0] = low[0] = timer++;
    stack.push_back(0);
    while (!stack.empty()) {
        VertexId v = stack.back();
        if (edge_iter[v] < g.degree(v)) {
            EdgeId e = g.rotation(v)[edge_iter[v]++];
            if (e == parent_edge[v]) continue;
            VertexId w = g.other_endpoint(e, v);
            if (disc[w] == -1) {
                parent[w] = v;
                parent_edge[w] = e;
                disc[w] = low[w] = timer++;
                if (v == 0) ++root_children;
                stack.push_back(w);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            VertexId p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) return false;
            }
        }
    }
    return root_children <= 1;
}

} // namespace bookem
