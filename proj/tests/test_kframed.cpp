#include <doctest.h>

#include "bookem/generator.hpp"
#include "bookem/kframed.hpp"
#include "fixtures.hpp"

using namespace bookem;

TEST_CASE("hexagon with caged crossings validates at k=6") {
    KFramedDrawing d = fixtures::k6_framed();
    CHECK(validate_kframed(d).ok());
}

TEST_CASE("pentagon with all five diagonals validates at k=5") {
    KFramedDrawing d = fixtures::pentagon_5framed();
    CHECK(validate_kframed(d).ok());
}

TEST_CASE("face degree above k is reported") {
    KFramedDrawing d = fixtures::cycle_drawing(7, 6);
    ValidationReport rep = validate_kframed(d);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto &v : rep.violations)
        if (v.code == "face-degree") found = true;
    CHECK(found);
}

TEST_CASE("crossing edge duplicating a host boundary edge is rejected") {
    KFramedDrawing d = fixtures::cycle_drawing(4, 4);
    FaceId inner = d.skeleton.outer_face() == 0 ? 1 : 0;
    d.crossings.push_back({0, 1, inner, CrossingOrigin::Input});
    ValidationReport rep = validate_kframed(d);
    bool found = false;
    for (const auto &v : rep.violations)
        if (v.code == "crossing-parallel-boundary") found = true;
    CHECK(found);
}

TEST_CASE("augment_cliques fills quadrilateral with two diagonals") {
    KFramedDrawing d = fixtures::cycle_drawing(4, 4);
    KFramedDrawing a = augment_cliques(d);
    // both faces of C4 get both diagonals: 2 faces x 2 diagonals
    CHECK(a.crossings.size() == 4);
    int inner = 0;
    for (const auto &c : a.crossings)
        if (c.host != a.skeleton.outer_face()) ++inner;
    CHECK(inner == 2);
}

TEST_CASE("augment_cliques adds nothing to triangles and is idempotent") {
    KFramedDrawing d = fixtures::cycle_drawing(3, 3);
    KFramedDrawing a = augment_cliques(d);
    CHECK(a.crossings.empty());

    KFramedDrawing p = fixtures::pentagon_5framed();
    KFramedDrawing ap = augment_cliques(p);
    // inner face already complete; outer face gains its 5 diagonals
    CHECK(ap.crossings.size() == 10);
    KFramedDrawing app = augment_cliques(ap);
    CHECK(app.crossings.size() == ap.crossings.size());
    CHECK(validate_kframed(app).ok());
}

TEST_CASE("degree-5 face with two diagonals gains exactly three") {
    KFramedDrawing d = fixtures::cycle_drawing(5, 5);
    FaceId inner = d.skeleton.outer_face() == 0 ? 1 : 0;
    d.crossings.push_back({0, 2, inner, CrossingOrigin::Input});
    d.crossings.push_back({1, 3, inner, CrossingOrigin::Input});
    KFramedDrawing a = augment_cliques(d);
    int added_inner = 0;
    for (const auto &c : a.crossings)
        if (c.host == inner && c.origin == CrossingOrigin::Augmented) ++added_inner;
    CHECK(added_inner == 3);
}

TEST_CASE("validity is preserved by augmentation on fuzzed drawings") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.k = 4 + static_cast<int>(seed % 4);
        p.n = 12 + static_cast<int>(seed % 40);
        p.depth = 1 + static_cast<int>(seed % 3);
        p.density = 0.4;
        KFramedDrawing d = gen_kframed(p);
        REQUIRE(validate_kframed(d).ok());
        CHECK(validate_kframed(augment_cliques(d)).ok());
    }
}
