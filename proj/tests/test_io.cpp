#include <doctest.h>

#include "bookem/generator.hpp"
#include "bookem/io.hpp"
#include "bookem/multi_level.hpp"
#include "bookem/render.hpp"
#include "fixtures.hpp"

using namespace bookem;

TEST_CASE("instance documents round-trip byte-identically") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GenParams p;
        p.seed = seed;
        p.k = 4 + static_cast<int>(seed % 4);
        p.n = 15 + static_cast<int>(seed % 30);
        p.depth = 1 + static_cast<int>(seed % 3);
        p.density = 0.5;
        KFramedDrawing d = gen_kframed(p);
        std::string doc = serialize_instance(d);
        KFramedDrawing d2 = parse_instance(doc);
        CHECK(validate_kframed(d2).ok());
        CHECK(serialize_instance(d2) == doc);
    }
}

TEST_CASE("embedding documents round-trip byte-identically") {
    KFramedDrawing d = fixtures::k6_framed();
    EmbedResult res = multi_level_embed(d);
    PageRegistry reg(d.k);
    std::string doc = serialize_embedding(res.embedding, reg, res.page_bound, "clean");
    EmbeddingDocument parsed = parse_embedding(doc);
    CHECK(parsed.embedding.order == res.embedding.order);
    CHECK(parsed.embedding.pages == res.embedding.pages);
    CHECK(serialize_embedding(parsed.embedding, reg, parsed.bound, parsed.validator_status) ==
          doc);
}

TEST_CASE("witness documents round-trip byte-identically") {
    MapWitness w = gen_witness(77, 6, 5, 4);
    std::string doc = serialize_witness(w);
    MapWitness w2 = parse_witness(doc);
    CHECK(serialize_witness(w2) == doc);
}

TEST_CASE("parser names the violated invariant") {
    KFramedDrawing d = fixtures::cycle_drawing(4, 4);
    std::string doc = serialize_instance(d);
    // corrupt one rotation entry
    std::string bad = doc;
    auto pos = bad.find("\"rotations\"");
    REQUIRE(pos != std::string::npos);
    pos = bad.find("0", pos);
    bad.replace(pos, 1, "3");
    CHECK_THROWS_AS(parse_instance(bad), InputError);
}

TEST_CASE("page registry names are stable and parse back") {
    PageRegistry reg(5);
    CHECK(reg.page_count() == 5 + 6 * 3);
    CHECK(reg.name(reg.p(0)) == "p0");
    CHECK(reg.name(reg.family_page(0, 1, 0)) == "r1_1");
    CHECK(reg.name(reg.family_page(2, 0, 2)) == "g0_3");
    CHECK(reg.by_name("b1_2") == reg.family_page(1, 1, 1));
    CHECK(reg.by_name("nope") == kNoPage);
}

TEST_CASE("render emits one arc per edge") {
    KFramedDrawing d = fixtures::pentagon_5framed();
    EmbedResult res = multi_level_embed(d);
    PageRegistry reg(d.k);
    std::string svg = render_svg(res.embedding, reg);
    CHECK(svg.find("<svg") == 0);
    std::size_t arcs = 0, at = 0;
    while ((at = svg.find("<path", at)) != std::string::npos) {
        ++arcs;
        ++at;
    }
    CHECK(arcs == res.embedding.pages.size());
    CHECK(svg.find("</svg>") != std::string::npos);
}
