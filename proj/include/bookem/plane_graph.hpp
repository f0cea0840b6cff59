#pragma once

#include <utility>
#include <vector>

#include "bookem/common.hpp"

namespace bookem {

// An embedded graph given by a counterclockwise rotation of incident edges at
// every vertex. Faces are traced so that a bounded face is walked
// counterclockwise (interior on the left of each dart) and the unbounded face
// clockwise. A dart is a directed edge side, encoded as 2*edge + direction.
class PlaneGraph {
public:
    PlaneGraph() = default;
    explicit PlaneGraph(int n) : rot_(n) {}

    VertexId add_vertex() {
        rot_.emplace_back();
        return static_cast<VertexId>(rot_.size() - 1);
    }

    // Appends the edge to both rotations. Use only while building a graph
    // whose rotations are fixed afterwards with set_rotation.
    EdgeId add_edge(VertexId u, VertexId v) {
        EdgeId e = static_cast<EdgeId>(edges_.size());
        edges_.emplace_back(u, v);
        rot_[u].push_back(e);
        if (v != u) rot_[v].push_back(e);
        traced_ = false;
        return e;
    }

    void set_rotation(VertexId v, std::vector<EdgeId> order) {
        rot_[v] = std::move(order);
        traced_ = false;
    }

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_[e]; }

    VertexId other_endpoint(EdgeId e, VertexId v) const {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }

    const std::vector<EdgeId> &rotation(VertexId v) const { return rot_[v]; }

    int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }

    // Darts.
    static Dart make_dart(EdgeId e, int dir) { return 2 * e + dir; }
    static EdgeId edge_of(Dart d) { return d >> 1; }
    static Dart twin(Dart d) { return d ^ 1; }
    VertexId tail(Dart d) const { return (d & 1) ? edges_[d >> 1].second : edges_[d >> 1].first; }
    VertexId head(Dart d) const { return (d & 1) ? edges_[d >> 1].first : edges_[d >> 1].second; }
    Dart dart_from(VertexId u, EdgeId e) const { return make_dart(e, edges_[e].first == u ? 0 : 1); }

    // Structural sanity of the rotation system; returns an empty string or a
    // message naming the offending vertex/edge.
    std::string rotation_error() const;

    // Face tracing. Requires a consistent rotation system.
    void trace_faces();
    bool traced() const { return traced_; }
    int face_count() const { return static_cast<int>(face_darts_.size()); }
    FaceId face_left(Dart d) const { return face_of_dart_[d]; }
    const std::vector<Dart> &face_darts(FaceId f) const { return face_darts_[f]; }
    int face_degree(FaceId f) const { return static_cast<int>(face_darts_[f].size()); }
    // Boundary vertices in walk order (tail of each dart); multiplicity kept.
    std::vector<VertexId> face_vertices(FaceId f) const;
    // Distinct boundary vertices, sorted.
    const std::vector<VertexId> &face_vertex_set(FaceId f) const { return face_verts_sorted_[f]; }
    bool face_contains(FaceId f, VertexId v) const;
    bool face_boundary_simple(FaceId f) const;

    // Dart following d in its face cycle: arrive at head(d), leave along the
    // rotation predecessor of the arrival edge. With counterclockwise
    // rotations this walks bounded faces counterclockwise (interior on the
    // left) and the unbounded face clockwise.
    Dart next_in_face(Dart d) const {
        VertexId v = head(d);
        const std::vector<EdgeId> &r = rot_[v];
        int i = pos_in_rot_[d];
        EdgeId e2 = r[(i + static_cast<int>(r.size()) - 1) % r.size()];
        return dart_from(v, e2);
    }

    FaceId outer_face() const { return outer_; }
    void set_outer_face(FaceId f) { outer_ = f; }

    // The canonical form of a face boundary cycle: start at the smallest id,
    // direction making the second element smaller. Used by documents.
    static std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);
    // Locates a face by the canonical form of its boundary (simple faces only).
    FaceId find_face_by_cycle(const std::vector<VertexId> &cycle) const;

private:
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> rot_;
    FaceId outer_ = kNoFace;

    bool traced_ = false;
    std::vector<int> pos_in_rot_;   // per dart: index of its edge in rotation(head)
    std::vector<FaceId> face_of_dart_;
    std::vector<std::vector<Dart>> face_darts_;
    std::vector<std::vector<VertexId>> face_verts_sorted_;
};

bool is_simple(const PlaneGraph &g);
std::vector<int> connected_components(const PlaneGraph &g, int *count = nullptr);
bool is_connected(const PlaneGraph &g);
bool is_biconnected(const PlaneGraph &g);

} // namespace bookem
