#include <doctest.h>

#include <algorithm>
#include <set>

#include "bookem/generator.hpp"
#include "bookem/map_graph.hpp"
#include "bookem/multi_level.hpp"
#include "bookem/validate.hpp"
#include "fixtures.hpp"

using namespace bookem;

namespace {

// One point of degree h over nations 0..h-1 (star embedding).
MapWitness star_witness(int h, int k) {
    MapWitness w;
    w.nations = h;
    w.points = 1;
    w.k = k;
    PlaneGraph g(h + 1);
    std::vector<EdgeId> rot;
    for (int i = 0; i < h; ++i) rot.push_back(g.add_edge(h, i));
    g.set_rotation(h, rot);
    w.graph = std::move(g);
    return w;
}

// Nations in a triangle, each adjacency via a degree-2 point.
MapWitness triangle_witness(int k) {
    MapWitness w;
    w.nations = 3;
    w.points = 3;
    w.k = k;
    PlaneGraph g(6);
    // point 3 joins 0-1, point 4 joins 1-2, point 5 joins 2-0
    EdgeId e0 = g.add_edge(0, 3), e1 = g.add_edge(3, 1);
    EdgeId e2 = g.add_edge(1, 4), e3 = g.add_edge(4, 2);
    EdgeId e4 = g.add_edge(2, 5), e5 = g.add_edge(5, 0);
    g.set_rotation(0, {e0, e5});
    g.set_rotation(1, {e2, e1});
    g.set_rotation(2, {e4, e3});
    w.graph = std::move(g);
    return w;
}

bool contains_all(const std::vector<std::pair<VertexId, VertexId>> &hs,
                  const KFramedDrawing &d) {
    std::set<std::pair<VertexId, VertexId>> have;
    for (int ge = 0; ge < d.total_edges(); ++ge) {
        auto [u, v] = d.edge_endpoints(ge);
        have.emplace(std::min(u, v), std::max(u, v));
    }
    return std::all_of(hs.begin(), hs.end(), [&](auto pr) { return have.count(pr) != 0; });
}

} // namespace

TEST_CASE("half square of small witnesses") {
    MapWitness w3 = star_witness(3, 3);
    auto hs = half_square(w3);
    CHECK(hs == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {1, 2}});

    MapWitness w2 = star_witness(2, 3);
    CHECK(half_square(w2) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});

    // two points both adjacent to the same pair collapse to one edge
    MapWitness dup;
    dup.nations = 2;
    dup.points = 2;
    dup.k = 3;
    PlaneGraph g(4);
    EdgeId a0 = g.add_edge(0, 2), a1 = g.add_edge(2, 1);
    EdgeId b0 = g.add_edge(0, 3), b1 = g.add_edge(3, 1);
    g.set_rotation(0, {a0, b0});
    g.set_rotation(1, {a1, b1});
    dup.graph = std::move(g);
    REQUIRE(validate_witness(dup).empty());
    CHECK(half_square(dup) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
}

TEST_CASE("witness validation rejects degree-1 points and over-degree points") {
    MapWitness w = star_witness(1, 3);
    CHECK(validate_witness(w).find("degree") != std::string::npos);
    MapWitness w5 = star_witness(5, 4);
    CHECK(validate_witness(w5).find("> k") != std::string::npos);
}

TEST_CASE("single 3-point becomes a hexagonal cage at parameter 2k") {
    MapWitness w = star_witness(3, 3);
    KFramedDrawing d = map_to_framed(w);
    CHECK(d.k == 6);
    CHECK(validate_kframed(d).ok());
    // skeleton = hexagonal cage: 3 nations + 3 dummies, 6 edges, both faces
    // of degree 6 = 2k, three crossing edges inside
    CHECK(d.skeleton.vertex_count() == 6);
    CHECK(d.skeleton.edge_count() == 6);
    CHECK(d.crossings.size() == 3);
    CHECK(d.skeleton.face_degree(d.skeleton.outer_face()) == 6);
    CHECK(contains_all(half_square(w), d));
}

TEST_CASE("triangle of degree-2 points keeps the bare cycle") {
    MapWitness w = triangle_witness(3);
    KFramedDrawing d = map_to_framed(w);
    CHECK(validate_kframed(d).ok());
    CHECK(d.skeleton.vertex_count() == 3);
    CHECK(d.skeleton.edge_count() == 3);
    CHECK(d.crossings.empty());
    CHECK(contains_all(half_square(w), d));
}

TEST_CASE("edgeless witness still produces a valid drawing") {
    MapWitness w;
    w.nations = 3;
    w.points = 0;
    w.k = 2;
    w.graph = PlaneGraph(3);
    REQUIRE(validate_witness(w).empty());
    CHECK(half_square(w).empty());
    KFramedDrawing d = map_to_framed(w);
    CHECK(validate_kframed(d).ok());
}

TEST_CASE("fuzzed witnesses: 2k-framed validity and half-square containment") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int k = 2 + static_cast<int>(seed % 5);
        int nations = 2 + static_cast<int>(seed * 3 % 12);
        int points = static_cast<int>(seed * 7 % 14);
        if (points > 0 && nations < 2) nations = 2;
        MapWitness w = gen_witness(seed, nations, points, k);
        REQUIRE(validate_witness(w).empty());
        KFramedDrawing d = map_to_framed(w);
        CHECK(validate_kframed(d).ok());
        CHECK(d.k == 2 * k);
        CHECK(contains_all(half_square(w), d));
    }
}

TEST_CASE("framed_to_map: triangle gives 3 nations and 3 degree-2 points") {
    KFramedDrawing d = fixtures::cycle_drawing(3, 3);
    MapWitness w = framed_to_map(d);
    CHECK(w.nations == 3);
    CHECK(w.points == 3);
    for (VertexId p = w.nations; p < w.graph.vertex_count(); ++p)
        CHECK(w.graph.degree(p) == 2);
    auto hs = half_square(w);
    CHECK(hs.size() == 3);
}

TEST_CASE("framed_to_map rejects non-augmented drawings") {
    KFramedDrawing d = fixtures::cycle_drawing(4, 4); // missing both diagonals
    CHECK_THROWS_AS(framed_to_map(d), InputError);
}

TEST_CASE("quadrilateral with both diagonals gives one 4-point realizing all pairs") {
    KFramedDrawing d = augment_cliques(fixtures::cycle_drawing(4, 4));
    MapWitness w = framed_to_map(d);
    // points: 4 edge points + one per crossing-hosting face (both faces host)
    CHECK(w.nations == 4);
    auto hs = half_square(w);
    CHECK(hs.size() == 6); // all pairs among 4 nations
}

TEST_CASE("round trip: half_square(framed_to_map(d)) covers the edges of d") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenParams p;
        p.seed = seed * 57;
        p.k = 4 + static_cast<int>(seed % 4);
        p.n = 12 + static_cast<int>(seed * 5 % 40);
        p.depth = 1 + static_cast<int>(seed % 3);
        p.density = 0.5;
        KFramedDrawing d = augment_cliques(gen_kframed(p));
        MapWitness w = framed_to_map(d);
        REQUIRE(validate_witness(w).empty());
        auto hs = half_square(w);
        std::set<std::pair<VertexId, VertexId>> have(hs.begin(), hs.end());
        for (int ge = 0; ge < d.total_edges(); ++ge) {
            auto [u, v] = d.edge_endpoints(ge);
            CHECK(have.count({std::min(u, v), std::max(u, v)}) == 1);
        }
    }
}

TEST_CASE("map to framed to embedding: Corollary-3 pipeline on one witness") {
    MapWitness w = gen_witness(99, 8, 6, 3);
    KFramedDrawing d = map_to_framed(w);
    EmbedResult res = multi_level_embed(d);
    CHECK(validate_book_embedding(res.embedding, fixtures::simple_edges(d)).empty());
    CHECK(res.embedding.pages_used() <= 6 * w.k + 5);
}
