#include <doctest.h>

#include <set>

#include "bookem/generator.hpp"
#include "bookem/plane_graph.hpp"
#include "fixtures.hpp"

using namespace bookem;

TEST_CASE("triangle traces two faces of degree 3") {
    PlaneGraph g = fixtures::triangle();
    REQUIRE(g.face_count() == 2);
    CHECK(g.face_degree(0) == 3);
    CHECK(g.face_degree(1) == 3);
}

TEST_CASE("plane K4 has four triangular faces") {
    PlaneGraph g = fixtures::k4();
    REQUIRE(g.face_count() == 4);
    for (FaceId f = 0; f < 4; ++f) CHECK(g.face_degree(f) == 3);
}

TEST_CASE("every dart lies on exactly one face") {
    PlaneGraph g = fixtures::k4();
    std::vector<int> seen(2 * g.edge_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f)
        for (Dart d : g.face_darts(f)) ++seen[d];
    for (int c : seen) CHECK(c == 1);
}

TEST_CASE("biconnectivity and simplicity predicates") {
    CHECK(is_biconnected(fixtures::cycle(5)));
    CHECK(is_simple(fixtures::cycle(5)));

    PlaneGraph path(3); // P3
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(is_biconnected(path));

    // two triangles sharing vertex 0
    PlaneGraph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 0);
    bowtie.add_edge(0, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(4, 0);
    CHECK_FALSE(is_biconnected(bowtie));

    int c = 0;
    connected_components(bowtie, &c);
    CHECK(c == 1);
}

TEST_CASE("rotation consistency errors name the culprit") {
    PlaneGraph g(2);
    g.add_edge(0, 1);
    g.set_rotation(1, {});
    std::string err = g.rotation_error();
    CHECK(err.find("edge 0") != std::string::npos);
}

TEST_CASE("Euler relation on fuzzed drawings") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GenParams p;
        p.seed = seed;
        p.k = 3 + static_cast<int>(seed % 6);
        p.n = 10 + static_cast<int>(seed % 60);
        p.depth = 1 + static_cast<int>(seed % 3);
        p.density = 0;
        KFramedDrawing d = gen_kframed(p);
        const PlaneGraph &g = d.skeleton;
        CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("mirror embedding maps faces to reversed boundaries") {
    PlaneGraph g = fixtures::k4();
    PlaneGraph m(4);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        m.add_edge(u, v);
    }
    for (VertexId v = 0; v < 4; ++v) {
        std::vector<EdgeId> r = g.rotation(v);
        std::reverse(r.begin(), r.end());
        m.set_rotation(v, r);
    }
    m.trace_faces();
    REQUIRE(m.face_count() == g.face_count());
    std::set<std::vector<VertexId>> orig, mir;
    for (FaceId f = 0; f < g.face_count(); ++f)
        orig.insert(PlaneGraph::canonical_cycle(g.face_vertices(f)));
    for (FaceId f = 0; f < m.face_count(); ++f)
        mir.insert(PlaneGraph::canonical_cycle(m.face_vertices(f)));
    CHECK(orig == mir); // canonical form is direction-free
}

TEST_CASE("canonical cycle starts at the minimum with the smaller successor") {
    std::vector<VertexId> c = {4, 2, 7, 5};
    auto canon = PlaneGraph::canonical_cycle(c);
    CHECK(canon == std::vector<VertexId>{2, 4, 5, 7});
    auto canon2 = PlaneGraph::canonical_cycle({2, 7, 5, 4});
    CHECK(canon2 == canon);
}
