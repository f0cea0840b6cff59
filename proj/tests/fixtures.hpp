#pragma once

#include <set>
#include <vector>

#include "bookem/kframed.hpp"

namespace bookem::fixtures {

// Triangle with counterclockwise rotations; outer face designated.
inline PlaneGraph triangle() {
    PlaneGraph g(3);
    g.add_edge(0, 1); // e0
    g.add_edge(1, 2); // e1
    g.add_edge(0, 2); // e2
    g.set_rotation(0, {0, 2});
    g.set_rotation(1, {1, 0});
    g.set_rotation(2, {2, 1});
    g.trace_faces();
    return g;
}

// Plane K4: triangle 0,1,2 with vertex 3 inside.
inline PlaneGraph k4() {
    PlaneGraph g(4);
    g.add_edge(0, 1); // e0
    g.add_edge(1, 2); // e1
    g.add_edge(0, 2); // e2
    g.add_edge(0, 3); // e3
    g.add_edge(1, 3); // e4
    g.add_edge(2, 3); // e5
    g.set_rotation(0, {0, 3, 2});
    g.set_rotation(1, {1, 4, 0});
    g.set_rotation(2, {2, 5, 1});
    g.set_rotation(3, {3, 4, 5});
    g.trace_faces();
    return g;
}

// Cycle of length n, rotations trivial, traced; outer face set to the one
// listed second by the tracer (the reversed orientation).
inline PlaneGraph cycle(int n) {
    PlaneGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        EdgeId in = (i + n - 1) % n;
        EdgeId out = i;
        g.set_rotation(i, {out, in});
    }
    g.trace_faces();
    return g;
}

// C_n as a k-framed drawing with no crossings. The outer face is the trace
// containing dart 0->(n-1)... chosen via orientation: with the rotations
// above, the face left of dart (0->1) is the interior.
inline KFramedDrawing cycle_drawing(int n, int k) {
    KFramedDrawing d;
    d.skeleton = cycle(n);
    d.k = k;
    FaceId inner = d.skeleton.face_left(PlaneGraph::make_dart(0, 0));
    d.skeleton.set_outer_face(inner == 0 ? 1 : 0);
    return d;
}

// K6 drawn 6-framed: hexagon skeleton, all 9 diagonals inside the hexagon.
inline KFramedDrawing k6_framed() {
    KFramedDrawing d = cycle_drawing(6, 6);
    FaceId inner = d.skeleton.outer_face() == 0 ? 1 : 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (j == i + 1 || (i == 0 && j == 5)) continue;
            d.crossings.push_back({i, j, inner, CrossingOrigin::Input});
        }
    return d;
}

// Pentagon plus its five diagonals: the optimal-2-planar cell.
inline KFramedDrawing pentagon_5framed() {
    KFramedDrawing d = cycle_drawing(5, 5);
    FaceId inner = d.skeleton.outer_face() == 0 ? 1 : 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (j == i + 1 || (i == 0 && j == 4)) continue;
            d.crossings.push_back({i, j, inner, CrossingOrigin::Input});
        }
    return d;
}

inline std::vector<std::pair<VertexId, VertexId>> simple_edges(const KFramedDrawing &d) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (int ge = 0; ge < d.total_edges(); ++ge) {
        auto [u, v] = d.edge_endpoints(ge);
        s.emplace(std::min(u, v), std::max(u, v));
    }
    return {s.begin(), s.end()};
}

} // namespace bookem::fixtures
