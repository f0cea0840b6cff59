#include <doctest.h>

#include "bookem/exact.hpp"
#include "bookem/prng.hpp"
#include "bookem/validate.hpp"
#include "fixtures.hpp"

using namespace bookem;

namespace {

std::vector<std::pair<VertexId, VertexId>> complete(int n) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return es;
}

// Random maximal outerplanar graph: a cycle plus a random triangulation of
// its interior (ear-by-ear).
std::vector<std::pair<VertexId, VertexId>> random_mop(int n, SplitMix64 &rng) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    // triangulate polygon 0..n-1 by recursive fan splits
    std::vector<std::vector<int>> stack = {{}};
    stack[0].resize(n);
    for (int i = 0; i < n; ++i) stack[0][i] = i;
    while (!stack.empty()) {
        std::vector<int> poly = stack.back();
        stack.pop_back();
        if (poly.size() < 4) continue;
        int m = static_cast<int>(poly.size());
        int i = 0;
        int j = 2 + static_cast<int>(rng.below(m - 3)); // non-adjacent to 0
        es.emplace_back(std::min(poly[i], poly[j]), std::max(poly[i], poly[j]));
        std::vector<int> left(poly.begin(), poly.begin() + j + 1);
        std::vector<int> right(poly.begin() + j, poly.end());
        right.push_back(poly[0]);
        stack.push_back(left);
        stack.push_back(right);
    }
    return es;
}

} // namespace

TEST_CASE("validator examples") {
    BookEmbedding e;
    e.order = {0, 1, 2, 3};
    e.k = 4;
    e.pages[{0, 1}] = 0;
    e.pages[{1, 2}] = 0;
    e.pages[{2, 3}] = 0;
    e.pages[{0, 3}] = 0;
    // C4 on one page in cyclic order: boundary edges never cross
    CHECK(validate_book_embedding(e, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}).empty());

    BookEmbedding bad;
    bad.order = {0, 1, 2, 3};
    bad.k = 4;
    bad.pages[{0, 2}] = 0;
    bad.pages[{1, 3}] = 0;
    auto crossings = validate_book_embedding(bad, {{0, 2}, {1, 3}});
    REQUIRE(crossings.size() == 1);
    CHECK(crossings[0].page == 0);

    auto fast = validate_book_embedding_fast(bad, {{0, 2}, {1, 3}});
    REQUIRE(fast.size() == 1);
}

TEST_CASE("fast validator agrees with the exhaustive one") {
    SplitMix64 rng(404);
    for (int round = 0; round < 200; ++round) {
        int n = 4 + static_cast<int>(rng.below(8));
        BookEmbedding e;
        e.k = 8;
        for (int i = 0; i < n; ++i) e.order.push_back(i);
        rng.shuffle(e.order);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(0.4)) {
                    edges.emplace_back(i, j);
                    e.pages[{i, j}] = static_cast<PageId>(rng.below(3));
                }
        bool slow_clean = validate_book_embedding(e, edges).empty();
        bool fast_clean = validate_book_embedding_fast(e, edges).empty();
        CHECK(slow_clean == fast_clean);
    }
}

TEST_CASE("unmapped edge is a structural error") {
    BookEmbedding e;
    e.order = {0, 1};
    CHECK_THROWS_AS(validate_book_embedding(e, {{0, 1}}), InputError);
}

TEST_CASE("exact book thickness of complete graphs is ceil(n/2)") {
    for (int n = 3; n <= 8; ++n) {
        BookEmbedding w;
        int bt = exact_book_thickness(n, complete(n), 9, &w);
        CHECK(bt == (n + 1) / 2);
        CHECK(validate_book_embedding(w, complete(n)).empty());
    }
}

TEST_CASE("K4 needs exactly two pages") {
    CHECK(exact_book_thickness(4, complete(4)) == 2);
}

TEST_CASE("maximal outerplanar graphs sit on one page") {
    SplitMix64 rng(777);
    for (int round = 0; round < 20; ++round) {
        int n = 6 + static_cast<int>(rng.below(3));
        auto es = random_mop(n, rng);
        CHECK(exact_book_thickness(n, es) == 1);
    }
}

TEST_CASE("C6 plus a short chord stays outerplanar") {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    es.emplace_back(1, 3);
    CHECK(exact_book_thickness(6, es) == 1);
}

TEST_CASE("solver refuses beyond the cap") {
    CHECK_THROWS_AS(exact_book_thickness(12, complete(12), 9), InputError);
}
