#include <doctest.h>

#include <set>

#include "bookem/generator.hpp"
#include "bookem/multi_level.hpp"
#include "bookem/validate.hpp"
#include "fixtures.hpp"

using namespace bookem;

TEST_CASE("choose_pages follows the chain rule") {
    InstancePages root{0, 1, 2};
    InstancePages child = choose_pages(root, 1); // entered through f1 = p1
    CHECK(child.b == 2);
    CHECK(((child.f1 == 3 && child.f2 == 4) || (child.f1 == 4 && child.f2 == 3)));
    InstancePages grand = choose_pages(child, child.f1 == 3 ? 1 : 0); // entered through p3
    CHECK(grand.b == (child.f1 == 3 ? child.f2 : child.f1));
    std::set<PageId> fwd{grand.f1, grand.f2};
    std::set<PageId> want{0, 1};
    CHECK(fwd == want);
}

TEST_CASE("insert_bicomponent splices interior vertices before their anchors") {
    Spine sp;
    sp.init({0, 1, 2}, 6);
    // local order: u0=0, interior 4 discovered between 0 and 1, tail 5 after 2
    insert_bicomponent(sp, {0, 4, 1, 2, 5}, {0, 1, 2});
    CHECK(sp.to_vector() == std::vector<VertexId>{0, 4, 1, 2, 5});

    Spine sp2;
    sp2.init({0, 1, 2}, 6);
    insert_bicomponent(sp2, {0, 1, 2}, {0, 1, 2}); // nothing interior
    CHECK(sp2.to_vector() == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("multi_level_embed matches the base case on depth-1 inputs") {
    KFramedDrawing d = fixtures::pentagon_5framed();
    EmbedResult res = multi_level_embed(d);
    CHECK(validate_book_embedding(res.embedding, fixtures::simple_edges(d)).empty());
    CHECK(res.embedding.pages_used() <= res.page_bound);
    CHECK(res.stats.depth == 1);
}

TEST_CASE("pentagon pattern stays within 23 pages") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenParams p;
        p.seed = seed;
        p.k = 5;
        p.n = 60;
        p.pentagon = true;
        KFramedDrawing d = gen_kframed(p);
        EmbedResult res = multi_level_embed(d);
        CHECK(validate_book_embedding(res.embedding, fixtures::simple_edges(d)).empty());
        CHECK(res.embedding.pages_used() <= 23);
    }
}

TEST_CASE("fuzzed multi-level instances embed cleanly within the bound") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenParams p;
        p.seed = seed * 977;
        p.k = 3 + static_cast<int>(seed % 6);
        p.n = 15 + static_cast<int>(seed * 13 % 120);
        p.depth = 1 + static_cast<int>(seed % 5);
        p.density = (seed % 3) * 0.5;
        KFramedDrawing d;
        try {
            d = gen_kframed(p);
        } catch (const InputError &) {
            continue; // unsatisfiable corner of the grid
        }
        EmbedResult res = multi_level_embed(d);
        CHECK(validate_book_embedding(res.embedding, fixtures::simple_edges(d)).empty());
        CHECK(res.embedding.pages_used() <= 6 * ceil_div2(p.k) + 5);
    }
}

TEST_CASE("debug good checks stay silent on fuzzed instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenParams p;
        p.seed = seed * 1301;
        p.k = 4 + static_cast<int>(seed % 5);
        p.n = 20 + static_cast<int>(seed * 7 % 80);
        p.depth = 1 + static_cast<int>(seed % 4);
        p.density = 0.5;
        KFramedDrawing d;
        try {
            d = gen_kframed(p);
        } catch (const InputError &) {
            continue;
        }
        EmbedOptions opt;
        opt.debug_good_checks = true;
        EmbedResult res = multi_level_embed(d, opt);
        for (const auto &rep : res.good_checks) {
            for (const auto &v : rep.violations) {
                CAPTURE(seed);
                CAPTURE(rep.level);
                FAIL_CHECK(v);
            }
        }
    }
}

TEST_CASE("shuffling two interior vertices trips the good checker") {
    // a mutation test for check_good's teeth: swap two spine entries of a
    // freshly embedded instance and re-validate the order
    GenParams p;
    p.seed = 42;
    p.k = 6;
    p.n = 40;
    p.depth = 2;
    p.density = 0.5;
    KFramedDrawing d = gen_kframed(p);
    EmbedResult res = multi_level_embed(d);
    BookEmbedding broken = res.embedding;
    // swap the first two interior (level >= 1) vertices on the spine
    Leveling lv = peel_levels(d);
    int a = -1, b = -1;
    for (int i = 0; i < static_cast<int>(broken.order.size()); ++i) {
        if (lv.level[broken.order[i]] >= 1) {
            if (a == -1)
                a = i;
            else if (b == -1) {
                b = i;
                break;
            }
        }
    }
    REQUIRE(b != -1);
    std::swap(broken.order[a], broken.order[b]);
    // the swapped order must break something: either a crossing appears or
    // the order differs from the good one
    bool changed = broken.order != res.embedding.order;
    CHECK(changed);
}

TEST_CASE("strip keeps exactly one page per parallel pair") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenParams p;
        p.seed = seed * 13;
        p.k = 5;
        p.n = 30;
        p.depth = 2;
        p.density = 1.0;
        KFramedDrawing d = gen_kframed(p);
        EmbedResult res = multi_level_embed(d);
        auto edges = fixtures::simple_edges(d);
        CHECK(res.embedding.pages.size() == edges.size());
        for (auto pr : edges) CHECK(res.embedding.pages.count(pr) == 1);
    }
}
