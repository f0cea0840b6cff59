#include <doctest.h>

#include <map>
#include <set>

#include "bookem/generator.hpp"
#include "bookem/two_level.hpp"
#include "bookem/validate.hpp"
#include "fixtures.hpp"

using namespace bookem;

namespace {

struct Ana {
    KFramedDrawing d;
    Leveling lv;
    LevelStructures ls;
    EdgeLookup lu;
    TwoLevelContext cx;
    TwoLevelAnalysis an;
};

// Full standalone analysis of a two-level drawing.
Ana analyze(KFramedDrawing din) {
    Ana a;
    a.d = std::move(din);
    REQUIRE(validate_kframed(a.d).ok());
    a.lv = peel_levels(a.d);
    a.ls = derive_level_structures(a.d, a.lv);
    REQUIRE(two_level_precondition(a.d, a.ls).empty());
    a.lu = build_edge_lookup(a.d);
    auto insts = bicomponents(a.d, a.ls, 1);
    REQUIRE(insts.size() == 1);
    a.cx = make_context(a.d, a.ls, a.lu, insts[0]);
    std::vector<char> assigned(a.d.total_edges(), 0);
    a.an = analyze_two_level(a.cx, assigned);
    return a;
}

KFramedDrawing gen_two(std::uint64_t seed, int k, int n, double density) {
    GenParams p;
    p.seed = seed;
    p.k = k;
    p.n = n;
    p.depth = (seed % 3 == 0) ? 1 : 2;
    p.density = density;
    p.two_level = true;
    return gen_kframed(p);
}

} // namespace

TEST_CASE("lambda is a permutation and matches a literal re-sweep") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Ana a = analyze(gen_two(seed, 4 + static_cast<int>(seed % 5),
                                10 + static_cast<int>(seed * 3 % 60), 0.5));
        const FaceOrder &fo = a.an.lambda;
        // permutation
        std::set<int> seen(fo.order.begin(), fo.order.end());
        CHECK(seen.size() == a.cx.local_faces.size());
        // literal definition: collect (first fan hit) keys and sort
        std::vector<std::pair<std::pair<int, int>, int>> keys;
        std::vector<char> taken(a.cx.local_faces.size(), 0);
        for (int j = 0; j < a.cx.s; ++j) {
            for (int t = 0; t < static_cast<int>(a.cx.fan[j].size()); ++t) {
                int fi = a.cx.fan[j][t];
                if (taken[fi]) continue;
                taken[fi] = 1;
                keys.push_back({{j, t}, fi});
            }
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t q = 0; q < keys.size(); ++q) CHECK(fo.order[q] == keys[q].second);
    }
}

TEST_CASE("single bounded face gives lambda of length one") {
    Ana a = analyze(fixtures::cycle_drawing(5, 5));
    CHECK(a.an.lambda.order.size() == 1);
}

TEST_CASE("empty interior keeps rho equal to the boundary cycle") {
    Ana a = analyze(fixtures::cycle_drawing(6, 6));
    CHECK(a.an.rho == a.cx.inst.boundary);
}

TEST_CASE("block vertices are consecutive in rho (Property 3)") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Ana a = analyze(gen_two(seed + 100, 4 + static_cast<int>(seed % 5),
                                12 + static_cast<int>(seed * 5 % 80), 0.3));
        for (const TLBlock &b : a.an.blocks.blocks) {
            if (b.assigned.size() <= 1) continue;
            std::vector<int> ranks;
            for (VertexId v : b.assigned) ranks.push_back(a.an.rho_rank.at(v));
            std::sort(ranks.begin(), ranks.end());
            CHECK(ranks.back() - ranks.front() + 1 == static_cast<int>(ranks.size()));
        }
    }
}

TEST_CASE("rho orders vertices of distinct blocks by block precedence (Property 4)") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Ana a = analyze(gen_two(seed + 300, 5 + static_cast<int>(seed % 4),
                                15 + static_cast<int>(seed * 7 % 60), 0.2));
        std::vector<int> prec(a.an.blocks.blocks.size());
        for (std::size_t i = 0; i < a.an.blocks.order.size(); ++i)
            prec[a.an.blocks.order[i]] = static_cast<int>(i);
        for (const auto &[v, bv] : a.an.blocks.block_of_vertex)
            for (const auto &[w, bw] : a.an.blocks.block_of_vertex) {
                if (bv == bw) continue;
                bool v_first = a.an.rho_rank.at(v) < a.an.rho_rank.at(w);
                CHECK(v_first == (prec[bv] < prec[bw]));
            }
    }
}

TEST_CASE("backward edges pairwise compatible, forward edges pairwise compatible") {
    // the executable statement of the one-page lemmas for each class
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Ana a = analyze(gen_two(seed + 500, 4 + static_cast<int>(seed % 5),
                                10 + static_cast<int>(seed * 11 % 90), 0.6));
        std::vector<std::pair<int, int>> back, fwd;
        for (const ClassifiedEdge &cl : a.an.assignments) {
            auto [u, v] = a.d.edge_endpoints(cl.ge);
            int x = a.an.rho_rank.at(u), y = a.an.rho_rank.at(v);
            if (x > y) std::swap(x, y);
            if (cl.cls == EdgeClass::Backward) back.emplace_back(x, y);
            if (cl.cls == EdgeClass::Forward) fwd.emplace_back(x, y);
        }
        auto crossing_free = [](const std::vector<std::pair<int, int>> &es) {
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    auto [a1, b1] = es[i];
                    auto [a2, b2] = es[j];
                    if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
                        return false;
                }
            return true;
        };
        CHECK(crossing_free(back));
        CHECK(crossing_free(fwd));
    }
}

TEST_CASE("conflict graph is crossing-free in lambda order and 3-colorable") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Ana a = analyze(gen_two(seed + 700, 4 + static_cast<int>(seed % 5),
                                10 + static_cast<int>(seed * 13 % 90), 0.5));
        const ConflictGraph &cg = a.an.conflict;
        for (std::size_t i = 0; i < cg.edges.size(); ++i)
            for (std::size_t j = i + 1; j < cg.edges.size(); ++j) {
                auto [a1, b1] = cg.edges[i];
                auto [a2, b2] = cg.edges[j];
                bool cross = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
                CHECK_FALSE(cross);
            }
        for (auto [f, g] : cg.edges) CHECK(a.an.face_color[f] != a.an.face_color[g]);
        for (int c : a.an.face_color) {
            CHECK(c >= 0);
            CHECK(c < 3);
        }
    }
}

TEST_CASE("clique page layout is crossing-free for any member count") {
    for (int q = 3; q <= 12; ++q) {
        std::map<int, std::vector<std::pair<int, int>>> pages;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) pages[clique_page_index(i, j, q)].push_back({i, j});
        CHECK(static_cast<int>(pages.size()) <= (q + 1) / 2);
        for (auto &[pg, es] : pages)
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    auto [a1, b1] = es[i];
                    auto [a2, b2] = es[j];
                    bool cross =
                        (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
                    CHECK_FALSE(cross);
                }
    }
}

TEST_CASE("two_level_embed is valid and within Theorem-19 pages") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int k = 3 + static_cast<int>(seed % 6);
        KFramedDrawing d = gen_two(seed + 900, k, 10 + static_cast<int>(seed * 17 % 120),
                                   (seed % 3) * 0.5);
        PageRegistry reg(k);
        BookEmbedding e = two_level_embed(d, reg);
        CHECK(validate_book_embedding(e, fixtures::simple_edges(d)).empty());
        CHECK(e.pages_used() <= 3 * ceil_div2(k) + 2);
    }
}

TEST_CASE("K6 via clique pages lands on three pages") {
    // the hexagon instance: 6 boundary vertices, all diagonals inside
    KFramedDrawing d = fixtures::k6_framed();
    PageRegistry reg(6);
    BookEmbedding e = two_level_embed(d, reg);
    CHECK(validate_book_embedding(e, fixtures::simple_edges(d)).empty());
    CHECK(e.pages_used() <= 3 * ceil_div2(6) + 2);
}

TEST_CASE("bare triangle embeds on one page") {
    KFramedDrawing d = fixtures::cycle_drawing(3, 3);
    PageRegistry reg(3);
    BookEmbedding e = two_level_embed(d, reg);
    CHECK(e.pages_used() == 1);
    CHECK(validate_book_embedding(e, fixtures::simple_edges(d)).empty());
}

TEST_CASE("make_good splits forwards by block depth parity and stays valid") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int k = 4 + static_cast<int>(seed % 5);
        KFramedDrawing d = gen_two(seed + 1500, k, 20 + static_cast<int>(seed * 3 % 60), 0.5);
        PageRegistry reg(k);
        BookEmbedding e = two_level_embed(d, reg);
        BookEmbedding g = make_good(e, d, reg);
        CHECK(validate_book_embedding(g, fixtures::simple_edges(d)).empty());
        CHECK(g.pages_used() <= 3 * ceil_div2(k) + 3);
        CHECK(g.order == e.order);
    }
}
